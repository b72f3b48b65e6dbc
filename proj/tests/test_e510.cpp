#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <map>
#include <vector>

#include "e36/e510.hpp"

using namespace e36;

namespace {

// independent oracle for the odd bracket: wedge the two 2-forms into a 4-form
// and contract against the volume form. The field dual to dx_{c0}^..^dx_{c3}
// is sign * d/dx_i where i is the missing index and sign orients (i, c0..c3)
// to (1..5).
VectorField wedge_volume_oracle(const TwoForm& u, const TwoForm& v) {
  std::map<std::array<int, 4>, Poly5> four;
  for (int s = 0; s < 10; ++s) {
    if (u.b[s].is_zero()) continue;
    auto [j, k] = slot_pair(s);
    for (int s2 = 0; s2 < 10; ++s2) {
      if (v.b[s2].is_zero()) continue;
      auto [l, m] = slot_pair(s2);
      std::vector<int> idx{j, k, l, m};
      int sign = sort_sign(idx);
      if (sign == 0) continue;
      Poly5 c = u.b[s] * v.b[s2];
      four[{idx[0], idx[1], idx[2], idx[3]}] += sign > 0 ? c : -c;
    }
  }
  VectorField r;
  for (auto& [c, p] : four) {
    if (p.is_zero()) continue;
    int missing = 0 + 1 + 2 + 3 + 4 - c[0] - c[1] - c[2] - c[3];
    std::vector<int> full{missing, c[0], c[1], c[2], c[3]};
    int sign = sort_sign(full);
    r.a[missing] += sign > 0 ? p : -p;
  }
  return r;
}

TwoForm basis_form(int s) {
  TwoForm w;
  w.b[s] = Poly5::one();
  return w;
}

}  // namespace

TEST_CASE("odd bracket agrees with the wedge-volume oracle on constant forms") {
  for (int s = 0; s < 10; ++s)
    for (int s2 = 0; s2 < 10; ++s2) {
      TwoForm u = basis_form(s), v = basis_form(s2);
      CHECK(odd_bracket(u, v) == wedge_volume_oracle(u, v));
    }
}

TEST_CASE("odd bracket is symmetric and C[x]-bilinear") {
  TwoForm u = basis_form(pair_slot(0, 1));  // d12
  TwoForm v = basis_form(pair_slot(2, 3));  // d34
  CHECK(odd_bracket(u, v) == odd_bracket(v, u));
  CHECK(odd_bracket(u, v).a[4] == Poly5::one());  // eps(5,1,2,3,4) = +1

  TwoForm xu;
  xu.b[pair_slot(0, 1)] = Poly5::var(2);  // x3 d12
  VectorField got = odd_bracket(xu, v);
  CHECK(got == wedge_volume_oracle(xu, v));
  CHECK(got.a[4] == Poly5::var(2));
}

TEST_CASE("interior product and exterior derivative") {
  VectorField d1;
  d1.a[0] = Poly5::one();
  TwoForm w = basis_form(pair_slot(0, 1));  // d12
  OneForm c = interior(d1, w);
  CHECK(c[1] == Poly5::one());  // dx2
  for (int i : {0, 2, 3, 4}) CHECK(c[i].is_zero());

  // d(x5 d23) = dx5 ^ dx2 ^ dx3 is nonzero; d(x3 d35) vanishes
  TwoForm bad;
  bad.b[pair_slot(1, 2)] = Poly5::var(4);
  CHECK_FALSE(is_closed(bad));
  TwoForm good;
  good.b[pair_slot(2, 4)] = Poly5::var(2);
  CHECK(is_closed(good));
}

TEST_CASE("field commutator and Lie derivative") {
  VectorField e1, e2, e12;
  e1.a[1] = Poly5::var(0);   // x1 d/dx2
  e2.a[2] = Poly5::var(1);   // x2 d/dx3
  e12.a[2] = Poly5::var(0);  // x1 d/dx3
  CHECK(commutator(e1, e2) == e12);
  CHECK(commutator(e2, e1) == e12 * Rational(-1));
  CHECK(divergence(e1).is_zero());

  // L_{x1 d/dx2}(d24) = d(x1 dx4) = d14
  TwoForm w = basis_form(pair_slot(1, 3));
  CHECK(lie_derivative(e1, w) == basis_form(pair_slot(0, 3)));
}

TEST_CASE("super bracket assembles the three sectors") {
  SuperElement f1 = field_elem(2, Poly5::var(0));   // x1 d/dx2
  SuperElement f2 = field_elem(3, Poly5::var(1));   // x2 d/dx3
  SuperElement w1 = form_elem(2, 4, Poly5::one());  // d24
  SuperElement w2 = form_elem(3, 5, Poly5::one());  // d35

  CHECK(super_bracket(f1, f2) == field_elem(3, Poly5::var(0)));
  CHECK(super_bracket(f1, w1) == form_elem(1, 4, Poly5::one()));
  // [d24, d35] = eps(1,2,4,3,5) d/dx1 = - d/dx1
  CHECK(super_bracket(w1, w2) == field_elem(1, -Poly5::one()));

  SECTION("form order flips the sign of the element, not the bracket") {
    CHECK(form_elem(4, 2, Poly5::one()) == w1 * Rational(-1));
    CHECK(super_bracket(w2, w1) == super_bracket(w1, w2));
  }
}

TEST_CASE("validation rejects elements outside the algebra") {
  SuperElement bad_field = field_elem(1, Poly5::var(0));  // divergence 1
  CHECK_THROWS_AS(validate(bad_field), error);

  SuperElement bad_form = form_elem(2, 3, Poly5::var(4));  // x5 d23, not closed
  CHECK_THROWS_AS(validate(bad_form), error);
  CHECK_NOTHROW(validate(form_elem(3, 5, Poly5::var(2))));  // x3 d35
}

TEST_CASE("consistent and secondary gradings") {
  CHECK(consistent_degree(field_elem(1, Poly5::one())) == -2);
  CHECK(consistent_degree(form_elem(1, 4, Poly5::one())) == -1);
  CHECK(consistent_degree(field_elem(2, Poly5::var(0))) == 0);
  CHECK(consistent_degree(form_elem(3, 5, Poly5::var(2))) == 1);

  CHECK(secondary_degree(field_elem(1, Poly5::one())) == 0);
  CHECK(secondary_degree(field_elem(4, Poly5::one())) == -1);
  CHECK(secondary_degree(form_elem(1, 4, Poly5::one())) == 0);
  CHECK(secondary_degree(form_elem(4, 5, Poly5::one())) == 1);
  CHECK(secondary_degree(field_elem(1, Poly5::var(3))) == 1);

  SuperElement mixed = field_elem(1, Poly5::one()) + form_elem(4, 5, Poly5::one());
  CHECK_THROWS_AS(secondary_degree(mixed), error);
  CHECK_THROWS_AS(consistent_degree(SuperElement{}), error);

  CHECK(is_e36_member(field_elem(1, Poly5::one())));
  CHECK(is_e36_member(form_elem(3, 5, Poly5::var(2))));
  CHECK_FALSE(is_e36_member(field_elem(4, Poly5::one())));
  CHECK(is_e36_member(SuperElement{}));
}

TEST_CASE("homogeneous parts split by parity and degree") {
  SuperElement e = field_elem(1, Poly5::one()) + form_elem(1, 4, Poly5::one()) +
                   form_elem(3, 5, Poly5::var(2));
  auto parts = homogeneous_parts(e);
  REQUIRE(parts.size() == 3);
  CHECK(parts.count({0, -2}) == 1);
  CHECK(parts.count({1, -1}) == 1);
  CHECK(parts.count({1, 1}) == 1);
  SuperElement sum;
  for (auto& [k, piece] : parts) sum += piece;
  CHECK(sum == e);
}

TEST_CASE("element printing") {
  CHECK(to_string(form_elem(3, 5, Poly5::var(2))) == "x3*d35");
  CHECK(to_string(field_elem(1, Poly5::one())) == "dp1");
  CHECK(to_string(SuperElement{}) == "0");
  SuperElement m = field_elem(2, Poly5::var(0)) - form_elem(2, 3, Poly5::constant(2));
  CHECK(to_string(m) == "x1*dp2 - 2*d23");
}
