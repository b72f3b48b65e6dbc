#pragma once

#include "e36/e36_algebra.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace e36 {

// Polynomial model for sl3: six commuting generators, slots 0..2 printed as
// dp1..dp3 (the dual triple) and slots 3..5 as x1..x3, modulo the single
// relation dp1*x1 + dp2*x2 + dp3*x3 = 0. Canonical form rewrites dp1*x1 into
// -(dp2*x2 + dp3*x3); one relation makes the rewrite confluent, so no monomial
// of a reduced element contains both dp1 and x1

inline const std::array<std::string, 6>& model_names() {
  static const std::array<std::string, 6> n{"dp1", "dp2", "dp3", "x1", "x2", "x3"};
  return n;
}

namespace detail {
inline void reduce_term_into(Poly6::Key k, const Rational& c, Poly6& out) {
  if (k[0] > 0 && k[3] > 0) {
    k[0] -= 1;
    k[3] -= 1;
    Poly6::Key k2 = k;
    k2[1] += 1;
    k2[4] += 1;
    reduce_term_into(k2, -c, out);
    Poly6::Key k3 = k;
    k3[2] += 1;
    k3[5] += 1;
    reduce_term_into(k3, -c, out);
    return;
  }
  out.add_term(k, c);
}
}  // namespace detail

inline Poly6 model_reduce(const Poly6& p) {
  Poly6 out;
  for (auto& [k, c] : p.t) detail::reduce_term_into(k, c, out);
  return out;
}

inline bool is_model_canonical(const Poly6& p) {
  for (auto& [k, c] : p.t)
    if (k[0] > 0 && k[3] > 0) return false;
  return true;
}

struct ModelElement {
  Poly6 p;  // always kept reduced

  ModelElement() = default;
  explicit ModelElement(const Poly6& q) : p(model_reduce(q)) {}

  static ModelElement monomial(const Poly6::Key& k, const Rational& c = 1) {
    return ModelElement(Poly6::monomial(k, c));
  }

  bool is_zero() const { return p.is_zero(); }

  ModelElement& operator+=(const ModelElement& o) {
    p += o.p;  // sum of reduced stays reduced
    return *this;
  }

  friend ModelElement operator+(ModelElement a, const ModelElement& b) { return a += b; }

  friend ModelElement operator-(ModelElement a, const ModelElement& b) {
    a.p -= b.p;
    return a;
  }

  friend ModelElement operator*(const ModelElement& a, const Rational& c) {
    ModelElement r;
    r.p = a.p * c;
    return r;
  }

  friend ModelElement operator*(const ModelElement& a, const ModelElement& b) {
    return ModelElement(a.p * b.p);
  }

  bool operator==(const ModelElement& o) const = default;

  std::string to_string() const { return p.to_string(model_names()); }
};

// derivation action of x_i d/dx_j (1-based, i,j <= 3): sends x_k to
// delta_{jk} x_i and the dual generator dp_k to -delta_{ik} dp_j
inline ModelElement model_act_elem(int i, int j, const ModelElement& m) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw error("model action index out of range");
  Poly6 out;
  for (auto& [k, c] : m.p.t) {
    if (k[3 + j - 1] > 0) {
      Poly6::Key k2 = k;
      Rational mult = c * k2[3 + j - 1];
      k2[3 + j - 1] -= 1;
      k2[3 + i - 1] += 1;
      out.add_term(k2, mult);
    }
    if (k[i - 1] > 0) {
      Poly6::Key k2 = k;
      Rational mult = -c * k2[i - 1];
      k2[i - 1] -= 1;
      k2[j - 1] += 1;
      out.add_term(k2, mult);
    }
  }
  return ModelElement(out);
}

// bidegree of a monomial key: (x-degree, dual degree)
inline std::pair<int, int> key_bidegree(const Poly6::Key& k) {
  return {k[3] + k[4] + k[5], k[0] + k[1] + k[2]};
}

// (h1, h2) weight of a monomial key
inline std::pair<long long, long long> key_weight(const Poly6::Key& k) {
  long long w1 = (k[3] - k[0]) - (k[4] - k[1]);
  long long w2 = (k[4] - k[1]) - (k[5] - k[2]);
  return {w1, w2};
}

// canonical monomial basis of the bidegree (p,q) component, ascending key order
inline std::vector<Poly6::Key> component_basis(int p, int q) {
  std::vector<Poly6::Key> keys;
  enumerate_exponents(3, q, [&](const std::vector<int>& a) {
    enumerate_exponents(3, p, [&](const std::vector<int>& b) {
      if (a[0] > 0 && b[0] > 0) return;
      keys.push_back({a[0], a[1], a[2], b[0], b[1], b[2]});
    });
  });
  std::sort(keys.begin(), keys.end());
  return keys;
}

// highest weight monomial dp3^q * x1^p of the (p,q) component
inline Poly6::Key hw_key(int p, int q) { return {0, 0, q, p, 0, 0}; }

// finite irreducible piece the induced modules are built over: the (p,q)
// component tensored with the (r+1)-dimensional sl2 string and a Y scalar y.
// sl2 convention on v_0..v_r: h3 v_k = (r-2k) v_k, f3 v_k = v_{k+1},
// e3 v_k = k(r-k+1) v_{k-1}
struct IrrepF {
  int p = 0, q = 0, r = 0;
  Rational y;
  std::vector<Poly6::Key> mbasis;
  std::map<Poly6::Key, int> mindex;

  int mdim() const { return int(mbasis.size()); }
  int dim() const { return mdim() * (r + 1); }
  int findex(int mi, int k) const { return mi * (r + 1) + k; }
  int f_mindex(int f) const { return f / (r + 1); }
  int f_k(int f) const { return f % (r + 1); }

  Weight basis_weight(int f) const {
    auto [w1, w2] = key_weight(mbasis[f_mindex(f)]);
    return Weight{w1, w2, (long long)(r - 2 * f_k(f)), y};
  }
};

inline IrrepF build_irrep(int p, int q, int r, const Rational& y) {
  if (p < 0 || q < 0 || r < 0) throw error("irrep labels must be nonnegative");
  IrrepF F;
  F.p = p;
  F.q = q;
  F.r = r;
  F.y = y;
  F.mbasis = component_basis(p, q);
  for (int i = 0; i < int(F.mbasis.size()); ++i) F.mindex[F.mbasis[i]] = i;
  return F;
}

// expands a reduced model element, which must lie in the component spanned by
// F.mbasis, over the basis monomials
inline std::vector<std::pair<int, Rational>> model_expand(const IrrepF& F, const ModelElement& m) {
  std::vector<std::pair<int, Rational>> out;
  for (auto& [k, c] : m.p.t) {
    auto it = F.mindex.find(k);
    if (it == F.mindex.end()) throw error("model element leaves the component");
    out.push_back({it->second, c});
  }
  return out;
}

// action of a degree-zero element, given by its 12 basis coefficients in
// g0_basis_names order, on the F basis vector with index f. K is the scalar
// ring of the module being built (exact rationals, or polynomials in y when y
// is symbolic); yval is the Y scalar inside K
template <class K>
std::map<int, K> irrep_act(const IrrepF& F, const std::array<Rational, 12>& g, const K& yval,
                           int f) {
  std::map<int, K> out;
  auto add = [&](int fi, const K& v) {
    auto [it, fresh] = out.try_emplace(fi, v);
    if (!fresh) it->second = it->second + v;
    auto zero = K(0);
    if (it->second == zero) out.erase(it);
  };
  int mi = F.f_mindex(f), k = F.f_k(f);
  // sl3 block as a gl3 coefficient matrix c3[i][j] * x_{i+1} d/dx_{j+1}
  Rational c3[3][3] = {};
  c3[0][0] = g[0];
  c3[1][1] = g[1] - g[0];
  c3[2][2] = -g[1];
  c3[0][1] = g[4];
  c3[1][2] = g[5];
  c3[0][2] = g[6];
  c3[1][0] = g[7];
  c3[2][1] = g[8];
  c3[2][0] = g[9];
  ModelElement base = ModelElement::monomial(F.mbasis[mi]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (c3[i][j] == 0) continue;
      ModelElement img = model_act_elem(i + 1, j + 1, base);
      for (auto& [mj, c] : model_expand(F, img)) add(F.findex(mj, k), K(c3[i][j] * c));
    }
  // sl2 string
  if (g[2] != 0) add(f, K(g[2] * (F.r - 2 * k)));
  if (g[10] != 0 && k > 0) add(F.findex(mi, k - 1), K(g[10] * k * (F.r - k + 1)));
  if (g[11] != 0 && k < F.r) add(F.findex(mi, k + 1), K(g[11]));
  // central Y scalar
  if (g[3] != 0) add(f, yval * g[3]);
  return out;
}

}  // namespace e36
