#pragma once

#include "e36/rational.hpp"

#include <array>
#include <map>
#include <set>
#include <span>
#include <string>

namespace e36 {

// sparse polynomial in N commuting variables over Rational; keys are dense
// exponent arrays so map iteration (and therefore printing) is deterministic
template <int N>
struct Poly {
  using Key = std::array<int, N>;
  std::map<Key, Rational> t;

  static Poly zero() { return {}; }

  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.t[Key{}] = c;
    return p;
  }

  static Poly one() { return constant(1); }

  static Poly var(int i, int pow = 1) {
    check_var(i);
    Key k{};
    k[i] = pow;
    return monomial(k, 1);
  }

  static Poly monomial(const Key& k, const Rational& c) {
    Poly p;
    if (c != 0) p.t[k] = c;
    return p;
  }

  bool is_zero() const { return t.empty(); }

  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second == 0) t.erase(it);
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [k, c] : o.t) add_term(k, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    for (auto& [k, c] : o.t) add_term(k, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(const Poly& a) { return a * Rational(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ka, ca] : a.t)
      for (auto& [kb, cb] : b.t) {
        Key k;
        for (int i = 0; i < N; ++i) k[i] = ka[i] + kb[i];
        r.add_term(k, ca * cb);
      }
    return r;
  }

  friend Poly operator*(const Poly& a, const Rational& c) {
    Poly r;
    if (c == 0) return r;
    for (auto& [k, v] : a.t) r.t.emplace(k, v * c);
    return r;
  }

  friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

  bool operator==(const Poly& o) const { return t == o.t; }

  // d/dx_i, 0-based slot
  Poly partial(int i) const {
    check_var(i);
    Poly r;
    for (auto& [k, c] : t) {
      if (k[i] == 0) continue;
      Key k2 = k;
      k2[i] -= 1;
      r.add_term(k2, c * k[i]);
    }
    return r;
  }

  // multiply by a single variable raised to pow
  Poly shifted(int i, int pow) const {
    check_var(i);
    Poly r;
    for (auto& [k, c] : t) {
      Key k2 = k;
      k2[i] += pow;
      r.t.emplace(k2, c);
    }
    return r;
  }

  static int key_degree(const Key& k) {
    int d = 0;
    for (int e : k) d += e;
    return d;
  }

  // set of total degrees present; singleton means homogeneous
  std::set<int> degrees() const {
    std::set<int> s;
    for (auto& [k, c] : t) s.insert(key_degree(k));
    return s;
  }

  std::string to_string(std::span<const std::string> names) const {
    if (t.empty()) return "0";
    std::string out;
    for (auto& [k, c] : t) {
      std::string mon;
      for (int i = 0; i < N; ++i) {
        if (k[i] == 0) continue;
        if (!mon.empty()) mon += "*";
        mon += names[i];
        if (k[i] != 1) mon += "^" + std::to_string(k[i]);
      }
      Rational ac = c < 0 ? Rational(-c) : c;
      std::string cs = rat_pretty(ac);
      std::string term;
      if (mon.empty())
        term = cs;
      else if (cs == "1")
        term = mon;
      else
        term = cs + "*" + mon;
      if (out.empty())
        out = (c < 0 ? "-" : "") + term;
      else
        out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
  }

 private:
  static void check_var(int i) {
    if (i < 0 || i >= N) throw error("unknown variable index " + std::to_string(i));
  }
};

using Poly5 = Poly<5>;  // coefficients in the five ambient variables x1..x5
using Poly6 = Poly<6>;  // slots 0..2 are the dual generators dp1..dp3, slots 3..5 are x1..x3

}  // namespace e36
