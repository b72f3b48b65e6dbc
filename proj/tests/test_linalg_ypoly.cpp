#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "e36/linalg.hpp"
#include "e36/ypoly.hpp"

using namespace e36;

namespace {

Mat<Rational> from_rows(const std::vector<std::vector<Rational>>& rows) {
  Mat<Rational> m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

YPoly ypoly(std::vector<Rational> coeffs) {  // constant first
  YPoly p;
  p.c = std::move(coeffs);
  p.trim();
  return p;
}

}  // namespace

TEST_CASE("row reduction, rank, and kernel") {
  Mat<Rational> m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  // the kernel vector really annihilates every row
  for (int r = 0; r < m.rows; ++r) {
    Rational dot = 0;
    for (int c = 0; c < m.cols; ++c) dot += m.at(r, c) * ker[0][c];
    CHECK(dot == 0);
  }

  CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("span membership") {
  std::vector<std::vector<Rational>> vecs = {{1, 0, 1}, {0, 1, 1}};
  CHECK(in_span(vecs, {2, 3, 5}));
  CHECK(in_span(vecs, {0, 0, 0}));
  CHECK_FALSE(in_span(vecs, {1, 1, 1}));
}

TEST_CASE("fraction-free elimination matches rational rank") {
  Mat<Rational> m = from_rows({{2, 4, 1}, {3, 6, 2}, {1, 2, 3}});
  Mat<Rational> copy = m;
  int rk = bareiss(
      copy, [](const Rational& x) { return x == 0; },
      [](const Rational& a, const Rational& b) { return a / b; });
  CHECK(rk == rank(m));

  SECTION("pivots are true minors over the integers") {
    Mat<Rational> n = from_rows({{2, 1}, {1, 3}});
    std::vector<Rational> piv;
    bareiss(
        n, [](const Rational& x) { return x == 0; },
        [](const Rational& a, const Rational& b) { return a / b; }, &piv);
    REQUIRE(piv.size() == 2);
    CHECK(piv[0] == 2);
    CHECK(piv[1] == 5);  // det of the 2x2
  }
}

TEST_CASE("univariate polynomial arithmetic") {
  YPoly y = YPoly::y();
  YPoly f = y * y - YPoly(1);           // y^2 - 1
  YPoly g = y - YPoly(1);
  CHECK(f.eval(Rational(3)) == Rational(8));
  CHECK(f.degree() == 2);
  CHECK((f - f).is_zero());
  CHECK(div_exact(f, g) == y + YPoly(1));
  CHECK(gcd(f, g) == monic(g));

  auto [q, r] = divmod(f, y + YPoly(2));
  CHECK(q * (y + YPoly(2)) + r == f);
  CHECK(r.degree() < 1);
}

TEST_CASE("squarefree part and primitive scaling") {
  YPoly y = YPoly::y();
  YPoly f = (y - YPoly(1)) * (y - YPoly(1)) * (y + YPoly(3));
  YPoly sf = squarefree_part(f);
  CHECK(sf == monic((y - YPoly(1)) * (y + YPoly(3))));

  YPoly g = ypoly({Rational(1, 2), Rational(3, 4)});  // 1/2 + 3/4 y
  YPoly prim = int_primitive(g);
  CHECK(prim == ypoly({Rational(2), Rational(3)}));
  CHECK(int_primitive(prim) == prim);
}

TEST_CASE("rational root extraction with certified verification") {
  YPoly y = YPoly::y();
  // roots 0, 2, -1/3; the quadratic cofactor y^2 + 1 has none
  YPoly f = y * (y - YPoly(2)) * (y * Rational(3) + YPoly(1)) * (y * y + YPoly(1));
  RootSplit rs = extract_rational_roots(f);
  CHECK(rs.complete);
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.roots.count(Rational(0)) == 1);
  CHECK(rs.roots.count(Rational(2)) == 1);
  CHECK(rs.roots.count(Rational(-1, 3)) == 1);
  for (const Rational& root : rs.roots) CHECK(f.eval(root) == 0);
  CHECK(rs.remainder.eval(Rational(0)) != 0);
  CHECK(rs.remainder.degree() == 2);
}

TEST_CASE("modular inverse via extended euclid") {
  YPoly y = YPoly::y();
  YPoly m = y * y + YPoly(1);
  auto [g, s] = ext_gcd_mod(y + YPoly(1), m);
  CHECK(g == monic(YPoly(1)));
  // s * (y+1) = 1 mod (y^2+1)
  auto [q, r] = divmod(s * (y + YPoly(1)), m);
  CHECK(r == YPoly(1));
}

TEST_CASE("rational function field operations") {
  YPoly y = YPoly::y();
  RatFn a(y, y + YPoly(1));            // y / (y+1)
  RatFn b(YPoly(1), y);                // 1 / y
  RatFn s = a * b + b;                 // 1/(y+1) + 1/y = (2y+1)/(y(y+1))
  RatFn want(y * Rational(2) + YPoly(1), y * (y + YPoly(1)));
  CHECK(s == want);
  CHECK((s - s).is_zero());
  CHECK_THROWS_AS(RatFn(YPoly(1), YPoly(0)), error);
}
