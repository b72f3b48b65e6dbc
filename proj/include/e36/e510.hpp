#pragma once

#include "e36/perm.hpp"
#include "e36/poly.hpp"

#include <array>
#include <map>
#include <set>
#include <string>

namespace e36 {

// Elements are X + w where X is a polynomial vector field in five variables
// with zero divergence (even part) and w a closed polynomial 2-form (odd part).
// Bracket convention: [a,b] = ab - (-1)^{|a||b|} ba. The even-even bracket is
// the usual commutator, even acts on odd by Lie derivative, and the product of
// two 2-forms a*dxj^dxk and b*dxl^dxm is eps(i,j,k,l,m) * a*b * d/dx_i with i
// the complementary index (zero when indices repeat).

// slot of dx_j ^ dx_k for 0 <= j < k < 5:
// (0,1)=0 (0,2)=1 (0,3)=2 (0,4)=3 (1,2)=4 (1,3)=5 (1,4)=6 (2,3)=7 (2,4)=8 (3,4)=9
inline int pair_slot(int j, int k) { return j * (7 - j) / 2 + k - 1; }

inline std::pair<int, int> slot_pair(int s) {
  static const std::pair<int, int> tbl[10] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                              {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return tbl[s];
}

struct VectorField {
  std::array<Poly5, 5> a;  // a[i] * d/dx_{i+1}

  bool is_zero() const {
    for (auto& p : a)
      if (!p.is_zero()) return false;
    return true;
  }

  VectorField& operator+=(const VectorField& o) {
    for (int i = 0; i < 5; ++i) a[i] += o.a[i];
    return *this;
  }

  friend VectorField operator*(const VectorField& v, const Rational& c) {
    VectorField r;
    for (int i = 0; i < 5; ++i) r.a[i] = v.a[i] * c;
    return r;
  }

  bool operator==(const VectorField& o) const = default;
};

struct TwoForm {
  std::array<Poly5, 10> b;  // b[pair_slot(j,k)] * dx_{j+1} ^ dx_{k+1}

  bool is_zero() const {
    for (auto& p : b)
      if (!p.is_zero()) return false;
    return true;
  }

  TwoForm& operator+=(const TwoForm& o) {
    for (int i = 0; i < 10; ++i) b[i] += o.b[i];
    return *this;
  }

  friend TwoForm operator*(const TwoForm& w, const Rational& c) {
    TwoForm r;
    for (int i = 0; i < 10; ++i) r.b[i] = w.b[i] * c;
    return r;
  }

  bool operator==(const TwoForm& o) const = default;
};

using OneForm = std::array<Poly5, 5>;
using ThreeForm = std::map<std::array<int, 3>, Poly5>;  // key i<j<k, 0-based

inline Poly5 divergence(const VectorField& v) {
  Poly5 d;
  for (int i = 0; i < 5; ++i) d += v.a[i].partial(i);
  return d;
}

inline OneForm interior(const VectorField& v, const TwoForm& w) {
  OneForm r;
  for (int s = 0; s < 10; ++s) {
    if (w.b[s].is_zero()) continue;
    auto [j, k] = slot_pair(s);
    r[k] += w.b[s] * v.a[j];
    r[j] -= w.b[s] * v.a[k];
  }
  return r;
}

inline TwoForm exterior_derivative(const OneForm& c) {
  TwoForm r;
  for (int j = 0; j < 5; ++j)
    for (int k = j + 1; k < 5; ++k) r.b[pair_slot(j, k)] = c[k].partial(j) - c[j].partial(k);
  return r;
}

inline ThreeForm exterior_derivative(const TwoForm& w) {
  ThreeForm r;
  for (int s = 0; s < 10; ++s) {
    if (w.b[s].is_zero()) continue;
    auto [j, k] = slot_pair(s);
    for (int i = 0; i < 5; ++i) {
      if (i == j || i == k) continue;
      Poly5 d = w.b[s].partial(i);
      if (d.is_zero()) continue;
      std::vector<int> idx{i, j, k};
      int sign = sort_sign(idx);
      std::array<int, 3> key{idx[0], idx[1], idx[2]};
      auto& slot = r[key];
      slot += sign > 0 ? d : -d;
      if (slot.is_zero()) r.erase(key);
    }
  }
  return r;
}

inline bool is_closed(const TwoForm& w) { return exterior_derivative(w).empty(); }

struct SuperElement {
  VectorField ev;
  TwoForm od;

  bool is_zero() const { return ev.is_zero() && od.is_zero(); }

  SuperElement& operator+=(const SuperElement& o) {
    ev += o.ev;
    od += o.od;
    return *this;
  }

  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }

  friend SuperElement operator*(const SuperElement& a, const Rational& c) {
    return SuperElement{a.ev * c, a.od * c};
  }

  friend SuperElement operator*(const Rational& c, const SuperElement& a) { return a * c; }

  friend SuperElement operator-(SuperElement a, const SuperElement& b) {
    return a += b * Rational(-1);
  }

  friend SuperElement operator-(const SuperElement& a) { return a * Rational(-1); }

  SuperElement even_part() const { return SuperElement{ev, {}}; }
  SuperElement odd_part() const { return SuperElement{{}, od}; }

  bool operator==(const SuperElement& o) const = default;
};

// i is 1-based; coefficient times d/dx_i
inline SuperElement field_elem(int i, Poly5 coeff) {
  if (i < 1 || i > 5) throw error("field index out of range");
  SuperElement e;
  e.ev.a[i - 1] = std::move(coeff);
  return e;
}

// j,k are 1-based and may come in either order; dx_j ^ dx_k with sign fixup
inline SuperElement form_elem(int j, int k, Poly5 coeff) {
  if (j < 1 || j > 5 || k < 1 || k > 5) throw error("form index out of range");
  SuperElement e;
  if (j == k) return e;
  Rational sign = 1;
  if (j > k) {
    std::swap(j, k);
    sign = -1;
  }
  e.od.b[pair_slot(j - 1, k - 1)] = coeff * sign;
  return e;
}

// eagerly rejects elements outside the algebra (nonzero divergence, non-closed form)
inline void validate(const SuperElement& e) {
  Poly5 div = divergence(e.ev);
  if (!div.is_zero()) throw error("vector field has nonzero divergence");
  if (!is_closed(e.od)) throw error("2-form is not closed");
}

inline VectorField commutator(const VectorField& x, const VectorField& y) {
  VectorField r;
  for (int i = 0; i < 5; ++i) {
    Poly5 c;
    for (int j = 0; j < 5; ++j) {
      if (!x.a[j].is_zero()) c += x.a[j] * y.a[i].partial(j);
      if (!y.a[j].is_zero()) c -= y.a[j] * x.a[i].partial(j);
    }
    r.a[i] = std::move(c);
  }
  return r;
}

// valid for closed w only, where L_X = d i_X
inline TwoForm lie_derivative(const VectorField& x, const TwoForm& w) {
  return exterior_derivative(interior(x, w));
}

inline VectorField odd_bracket(const TwoForm& u, const TwoForm& v) {
  VectorField r;
  for (int s = 0; s < 10; ++s) {
    if (u.b[s].is_zero()) continue;
    auto [j, k] = slot_pair(s);
    for (int s2 = 0; s2 < 10; ++s2) {
      if (v.b[s2].is_zero()) continue;
      auto [l, m] = slot_pair(s2);
      for (int i = 0; i < 5; ++i) {
        int sign = eps5(i + 1, j + 1, k + 1, l + 1, m + 1);
        if (sign == 0) continue;
        Poly5 prod = u.b[s] * v.b[s2];
        r.a[i] += sign > 0 ? prod : -prod;
        break;  // at most one complementary index
      }
    }
  }
  return r;
}

inline SuperElement super_bracket(const SuperElement& a, const SuperElement& b) {
  SuperElement r;
  r.ev = commutator(a.ev, b.ev);
  r.ev += odd_bracket(a.od, b.od);
  r.od = lie_derivative(a.ev, b.od);
  TwoForm back = lie_derivative(b.ev, a.od);
  r.od += back * Rational(-1);
  validate(r);
  return r;
}

// term-wise degree maps; both throw on inhomogeneous or zero input
namespace detail {
inline void collect_degrees(const SuperElement& e, bool secondary, std::set<int>& s) {
  for (int i = 0; i < 5; ++i)
    for (auto& [k, c] : e.ev.a[i].t) {
      if (secondary)
        s.insert(k[3] + k[4] - (i >= 3 ? 1 : 0));
      else
        s.insert(2 * Poly5::key_degree(k) - 2);
    }
  for (int s2 = 0; s2 < 10; ++s2)
    for (auto& [k, c] : e.od.b[s2].t) {
      auto [j, l] = slot_pair(s2);
      if (secondary)
        s.insert(k[3] + k[4] + (j >= 3 ? 1 : 0) + (l >= 3 ? 1 : 0) - 1);
      else
        s.insert(2 * Poly5::key_degree(k) - 1);
    }
}
}  // namespace detail

inline int graded_degree(const SuperElement& e, bool secondary) {
  std::set<int> s;
  detail::collect_degrees(e, secondary, s);
  if (s.empty()) throw error("zero element has no degree");
  if (s.size() > 1) throw error("element is not homogeneous");
  return *s.begin();
}

inline int consistent_degree(const SuperElement& e) { return graded_degree(e, false); }
inline int secondary_degree(const SuperElement& e) { return graded_degree(e, true); }

// the subalgebra is exactly the secondary-degree-zero part; zero belongs
inline bool is_e36_member(const SuperElement& e) {
  std::set<int> s;
  detail::collect_degrees(e, true, s);
  if (s.empty()) return true;
  return s.size() == 1 && *s.begin() == 0;
}

// splits into homogeneous pieces keyed by (parity, consistent degree)
inline std::map<std::pair<int, int>, SuperElement> homogeneous_parts(const SuperElement& e) {
  std::map<std::pair<int, int>, SuperElement> parts;
  for (int i = 0; i < 5; ++i)
    for (auto& [k, c] : e.ev.a[i].t)
      parts[{0, 2 * Poly5::key_degree(k) - 2}].ev.a[i].add_term(k, c);
  for (int s = 0; s < 10; ++s)
    for (auto& [k, c] : e.od.b[s].t)
      parts[{1, 2 * Poly5::key_degree(k) - 1}].od.b[s].add_term(k, c);
  return parts;
}

inline const std::array<std::string, 5>& x_names() {
  static const std::array<std::string, 5> n{"x1", "x2", "x3", "x4", "x5"};
  return n;
}

inline std::string to_string(const SuperElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  auto emit = [&](const Poly5& p, const std::string& sym) {
    for (auto& [k, c] : p.t) {
      Poly5 mono = Poly5::monomial(k, c < 0 ? Rational(-c) : c);
      std::string piece = mono.to_string(x_names());
      if (piece == "1")
        piece = sym;
      else
        piece += "*" + sym;
      if (out.empty())
        out = (c < 0 ? "-" : "") + piece;
      else
        out += (c < 0 ? " - " : " + ") + piece;
    }
  };
  for (int i = 0; i < 5; ++i) emit(e.ev.a[i], "dp" + std::to_string(i + 1));
  for (int s = 0; s < 10; ++s) {
    auto [j, k] = slot_pair(s);
    emit(e.od.b[s], "d" + std::to_string(j + 1) + std::to_string(k + 1));
  }
  return out;
}

}  // namespace e36
