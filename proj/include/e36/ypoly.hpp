#pragma once

#include "e36/rational.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace e36 {

// dense univariate polynomial over Rational in the symbolic weight y
struct YPoly {
  std::vector<Rational> c;  // c[i] * y^i, no trailing zeros

  YPoly() = default;
  YPoly(int v) {
    if (v != 0) c.push_back(Rational(v));
  }
  explicit YPoly(const Rational& r) {
    if (r != 0) c.push_back(r);
  }

  static YPoly y() {
    YPoly p;
    p.c = {Rational(0), Rational(1)};
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }  // -1 for zero

  const Rational& lead() const { return c.back(); }

  bool operator==(const YPoly& o) const = default;
  bool operator<(const YPoly& o) const { return c < o.c; }

  friend YPoly operator+(const YPoly& a, const YPoly& b) {
    YPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }

  friend YPoly operator-(const YPoly& a, const YPoly& b) {
    YPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }

  friend YPoly operator-(const YPoly& a) { return YPoly(0) - a; }

  friend YPoly operator*(const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    YPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }

  friend YPoly operator*(const YPoly& a, const Rational& s) {
    if (s == 0) return {};
    YPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
  }

  Rational eval(const Rational& v) const {
    Rational r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * v + c[i];
    return r;
  }

  YPoly derivative() const {
    YPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * int(i));
    r.trim();
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      Rational a = c[i] < 0 ? Rational(-c[i]) : c[i];
      std::string mon = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
      std::string cs = rat_pretty(a);
      std::string piece = mon.empty() ? cs : (cs == "1" ? mon : cs + "*" + mon);
      if (out.empty())
        out = (c[i] < 0 ? "-" : "") + piece;
      else
        out += (c[i] < 0 ? " - " : " + ") + piece;
    }
    return out;
  }
};

inline std::pair<YPoly, YPoly> divmod(const YPoly& a, const YPoly& b) {
  if (b.is_zero()) throw error("polynomial division by zero");
  YPoly rem = a, quot;
  if (a.degree() >= b.degree()) quot.c.assign(a.degree() - b.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational f = rem.lead() / b.lead();
    quot.c[shift] += f;
    for (int i = 0; i <= b.degree(); ++i) rem.c[i + shift] -= f * b.c[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

inline YPoly div_exact(const YPoly& a, const YPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw error("inexact polynomial division");
  return q;
}

inline YPoly monic(const YPoly& a) {
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.lead());
}

inline YPoly gcd(YPoly a, YPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// extended euclid: returns (g, s) with s*a = g mod m, g = gcd(a, m) monic
inline std::pair<YPoly, YPoly> ext_gcd_mod(const YPoly& a, const YPoly& m) {
  YPoly r0 = m, r1 = a, s0 = YPoly(0), s1 = YPoly(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    YPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  Rational inv = Rational(1) / r0.lead();
  return {r0 * inv, s0 * inv};
}

inline YPoly squarefree_part(const YPoly& a) {
  if (a.degree() <= 0) return monic(a);
  YPoly g = gcd(a, a.derivative());
  return monic(div_exact(a, g));
}

// integer-primitive form: integer coprime coefficients, positive leading one
inline YPoly int_primitive(const YPoly& a) {
  if (a.is_zero()) return a;
  Int l = 1, g = 0;
  for (auto& x : a.c)
    if (x != 0) l = boost::multiprecision::lcm(l, denominator(x));
  YPoly r = a * Rational(l);
  for (auto& x : r.c)
    if (x != 0) g = boost::multiprecision::gcd(g, numerator(x));
  if (g != 0) r = r * Rational(Int(1), g);
  if (r.lead() < 0) r = r * Rational(-1);
  return r;
}

// factorization by trial division; the unfactored cofactor, if any, is kept as
// a pseudo-prime so its own divisors may be missed (complete reports whether
// the candidate divisor list is provably exhaustive)
inline std::vector<Int> divisors_best_effort(Int n, bool& complete) {
  complete = true;
  if (n < 0) n = -n;
  std::vector<std::pair<Int, int>> fac;
  if (n == 0) return {};
  auto push = [&](const Int& p) {
    if (!fac.empty() && fac.back().first == p)
      ++fac.back().second;
    else
      fac.push_back({p, 1});
  };
  for (Int d = 2; d * d <= n && d <= 1000000; ++d)
    while (n % d == 0) {
      push(d);
      n /= d;
    }
  if (n > 1) {
    push(n);
    if (n > Int(1000000) * 1000000) complete = false;  // may itself be composite
  }
  std::vector<Int> divs{1};
  for (auto& [p, e] : fac) {
    size_t base = divs.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
    if (divs.size() > 100000) {  // cap pathological divisor counts
      complete = false;
      break;
    }
  }
  return divs;
}

// fraction field of the polynomial ring, just enough for echelon reduction
struct RatFn {
  YPoly num, den = YPoly(1);

  RatFn() = default;
  RatFn(int v) : num(v) {}
  explicit RatFn(const Rational& r) : num(r) {}
  explicit RatFn(YPoly n) : num(std::move(n)) {}
  RatFn(YPoly n, YPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

  void reduce() {
    if (den.is_zero()) throw error("division by zero polynomial");
    if (num.is_zero()) {
      den = YPoly(1);
      return;
    }
    YPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = div_exact(num, g);
      den = div_exact(den, g);
    }
    Rational inv = Rational(1) / den.lead();
    num = num * inv;
    den = den * inv;
  }

  bool is_zero() const { return num.is_zero(); }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFn operator-(const RatFn& a) { return RatFn(-a.num, a.den); }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.num, a.den * b.den);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    return RatFn(a.num * b.den, a.den * b.num);
  }
  bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }
};

struct RootSplit {
  std::set<Rational> roots;  // all rational roots found, multiplicities removed
  YPoly remainder;           // monic cofactor without those roots
  bool complete = true;      // false when the candidate list may be short
};

inline RootSplit extract_rational_roots(const YPoly& f0) {
  RootSplit out;
  if (f0.is_zero()) throw error("root extraction on zero polynomial");
  YPoly f = monic(f0);
  // strip powers of y
  size_t k = 0;
  while (k < f.c.size() && f.c[k] == 0) ++k;
  if (k > 0) {
    out.roots.insert(Rational(0));
    f.c.erase(f.c.begin(), f.c.begin() + k);
  }
  if (f.degree() <= 0) {
    out.remainder = YPoly(1);
    return out;
  }
  YPoly zf = int_primitive(f);
  bool c1 = true, c2 = true;
  auto ps = divisors_best_effort(numerator(Rational(zf.c[0])), c1);
  auto qs = divisors_best_effort(numerator(Rational(zf.lead())), c2);
  out.complete = c1 && c2;
  for (auto& pn : ps)
    for (auto& qn : qs)
      for (int sgn : {1, -1}) {
        Rational cand(pn * sgn, qn);
        while (!f.is_zero() && f.degree() >= 1 && f.eval(cand) == 0) {
          out.roots.insert(cand);
          YPoly lin;
          lin.c = {-cand, Rational(1)};
          f = div_exact(f, lin);
        }
      }
  out.remainder = monic(f);
  return out;
}

}  // namespace e36
