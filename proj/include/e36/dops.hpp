#pragma once

#include "e36/model.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace e36 {

// element sum_alpha dhat^alpha (x) t_alpha of S (x) M, with S the polynomial
// ring in dhat1, dhat2, dhat3; components over a fixed irreducible summand
// simply stay inside one bidegree
using SM = std::map<std::array<int, 3>, ModelElement>;

inline void sm_add_term(SM& v, const std::array<int, 3>& al, const ModelElement& m) {
  if (m.is_zero()) return;
  auto [it, fresh] = v.try_emplace(al, m);
  if (!fresh) {
    it->second += m;
    if (it->second.is_zero()) v.erase(it);
  }
}

inline SM sm_of(const ModelElement& m) {
  SM v;
  sm_add_term(v, {0, 0, 0}, m);
  return v;
}

inline SM sm_add(SM a, const SM& b) {
  for (auto& [al, m] : b) sm_add_term(a, al, m);
  return a;
}

inline SM sm_scale(const SM& a, const Rational& c) {
  SM r;
  if (c == 0) return r;
  for (auto& [al, m] : a) r.emplace(al, m * c);
  return r;
}

inline SM sm_sub(SM a, const SM& b) {
  for (auto& [al, m] : b) sm_add_term(a, al, m * Rational(-1));
  return a;
}

// action of x_i d/dx_j: a derivation on the dhat part (the dhats span the
// dual of the defining representation) plus the model derivation
inline SM sm_gl(int i, int j, const SM& v) {
  SM out;
  for (auto& [al, m] : v) {
    if (al[i - 1] > 0) {
      auto a2 = al;
      Rational c(-a2[i - 1]);
      a2[i - 1]--;
      a2[j - 1]++;
      sm_add_term(out, a2, m * c);
    }
    sm_add_term(out, al, model_act_elem(i, j, m));
  }
  return out;
}

// linear combination of the x_i d/dx_j plus a multiple of the identity,
// packed into one operator letter so falling factorials stay short
struct GLCombo {
  std::map<std::pair<int, int>, Rational> g;
  Rational scalar;

  friend GLCombo operator+(GLCombo a, const GLCombo& b) {
    for (auto& [ij, c] : b.g) {
      a.g[ij] += c;
      if (a.g[ij] == 0) a.g.erase(ij);
    }
    a.scalar += b.scalar;
    return a;
  }
  GLCombo shifted(const Rational& s) const {
    GLCombo r = *this;
    r.scalar += s;
    return r;
  }
};

inline GLCombo gl_named(const std::string& name) {
  GLCombo c;
  auto put = [&](int i, int j) { c.g[{i, j}] = 1; };
  if (name == "h1") {
    c.g[{1, 1}] = 1;
    c.g[{2, 2}] = -1;
  } else if (name == "h2") {
    c.g[{2, 2}] = 1;
    c.g[{3, 3}] = -1;
  } else if (name == "e1")
    put(1, 2);
  else if (name == "e2")
    put(2, 3);
  else if (name == "e12")
    put(1, 3);
  else if (name == "f1")
    put(2, 1);
  else if (name == "f2")
    put(3, 2);
  else if (name == "f12")
    put(3, 1);
  else
    throw error("unknown sl(3) generator: " + name);
  return c;
}

struct OpAtom {
  int kind = 0;  // 0 dhat multiplication, 1 model multiplication, 2 sl(3) combination
  int i = 0;
  ModelElement m;
  GLCombo gl;

  static OpAtom dhat(int idx) {
    OpAtom a;
    a.kind = 0;
    a.i = idx;
    return a;
  }
  static OpAtom model(ModelElement mm) {
    OpAtom a;
    a.kind = 1;
    a.m = std::move(mm);
    return a;
  }
  static OpAtom sl3(GLCombo c) {
    OpAtom a;
    a.kind = 2;
    a.gl = std::move(c);
    return a;
  }
};

inline SM op_apply(const OpAtom& a, const SM& v) {
  SM out;
  if (a.kind == 0) {
    for (auto& [al, m] : v) {
      auto a2 = al;
      a2[a.i - 1]++;
      out.emplace(a2, m);
    }
  } else if (a.kind == 1) {
    for (auto& [al, m] : v) sm_add_term(out, al, a.m * m);
  } else {
    if (a.gl.scalar != 0) out = sm_scale(v, a.gl.scalar);
    for (auto& [ij, c] : a.gl.g) out = sm_add(out, sm_scale(sm_gl(ij.first, ij.second, v), c));
  }
  return out;
}

// formal sum of scaled words; within a word the rightmost atom applies first
struct Operator {
  std::vector<std::pair<Rational, std::vector<OpAtom>>> terms;

  static Operator identity() { return Operator{{{Rational(1), {}}}}; }
  static Operator atom(OpAtom a) { return Operator{{{Rational(1), {std::move(a)}}}}; }

  friend Operator operator+(Operator a, const Operator& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
  friend Operator operator*(const Operator& a, const Operator& b) {
    Operator r;
    for (auto& [ca, wa] : a.terms)
      for (auto& [cb, wb] : b.terms) {
        std::vector<OpAtom> w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.terms.push_back({ca * cb, std::move(w)});
      }
    return r;
  }
  friend Operator operator*(Operator a, const Rational& c) {
    for (auto& t : a.terms) t.first *= c;
    return a;
  }
};

inline SM op_apply(const Operator& op, const SM& v) {
  SM out;
  for (auto& [c, word] : op.terms) {
    SM cur = v;
    for (size_t k = word.size(); k-- > 0;) cur = op_apply(word[k], cur);
    out = sm_add(out, sm_scale(cur, c));
  }
  return out;
}

inline Operator op_dhat(int i) { return Operator::atom(OpAtom::dhat(i)); }
inline Operator op_model(const ModelElement& m) { return Operator::atom(OpAtom::model(m)); }
inline Operator op_sl3(const std::string& name, const Rational& shift = Rational(0)) {
  return Operator::atom(OpAtom::sl3(gl_named(name).shifted(shift)));
}

// falling factorial of one sl(3) letter: c (c-1) ... (c-n+1)
inline Operator op_falling(const GLCombo& c, int n) {
  Operator r = Operator::identity();
  for (int j = 0; j < n; ++j) r = r * Operator::atom(OpAtom::sl3(c.shifted(Rational(-j))));
  return r;
}

inline Operator op_pow(const Operator& a, int n) {
  Operator r = Operator::identity();
  for (int j = 0; j < n; ++j) r = r * a;
  return r;
}

// left multiplications that also make sense over the whole model
inline const Operator& dbar_op(int i) {
  static const std::array<Operator, 3> ops = [] {
    ModelElement x1 = ModelElement::monomial({0, 0, 0, 1, 0, 0});
    ModelElement x2 = ModelElement::monomial({0, 0, 0, 0, 1, 0});
    ModelElement x3 = ModelElement::monomial({0, 0, 0, 0, 0, 1});
    ModelElement dp2 = ModelElement::monomial({0, 1, 0, 0, 0, 0});
    ModelElement dp3 = ModelElement::monomial({0, 0, 1, 0, 0, 0});
    Operator d1 = op_dhat(1) * op_model(x1) + op_dhat(2) * op_model(x2) + op_dhat(3) * op_model(x3);
    Operator d2 = op_dhat(2) * op_model(dp3) + op_dhat(3) * op_model(dp2) * Rational(-1);
    Operator d3 = op_dhat(3);
    return std::array<Operator, 3>{d1, d2, d3};
  }();
  if (i < 1 || i > 3) throw error("operator index out of range");
  return ops[i - 1];
}

inline SM dbar_apply(int i, const SM& v) { return op_apply(dbar_op(i), v); }

inline GLCombo gl_h() { return (gl_named("h1") + gl_named("h2")).shifted(Rational(1)); }

inline Operator op_A() { return op_dhat(1) * op_sl3("h1") + op_dhat(2) * op_sl3("f1"); }
inline Operator op_B() {
  return op_sl3("f12") * op_sl3("h1") + op_sl3("f2") * op_sl3("f1");
}

inline const Operator& d_op(int i) {
  static const std::array<Operator, 3> ops = [] {
    Operator d3 = op_dhat(3);
    Operator d2 = op_dhat(2) * op_sl3("h2") + op_dhat(3) * op_sl3("f2");
    Operator d1 = op_A() * Operator::atom(OpAtom::sl3(gl_h())) + op_dhat(3) * op_B();
    return std::array<Operator, 3>{d1, d2, d3};
  }();
  if (i < 1 || i > 3) throw error("operator index out of range");
  return ops[i - 1];
}

inline SM d_apply(int i, const SM& v) { return op_apply(d_op(i), v); }

// the shifted family dhat2 (h2+m) + dhat3 f2
inline Operator d2_shift_op(const Rational& m) {
  return op_dhat(2) * op_sl3("h2", m) + op_dhat(3) * op_sl3("f2");
}

// closed form of the k-th power of D1, D2 or A; see the commutation relations
// these three share: D = a h + del b with h a = a (h-1), h del = del (h+1),
// h b = b (h-2), a b = b a, a del = del a, b del = del b - a
inline Operator dpow_expand(int k, const std::string& which) {
  if (k < 1) throw error("power must be positive");
  Operator a, b, del;
  GLCombo h;
  if (which == "D1") {
    a = op_A();
    b = op_B();
    del = op_dhat(3);
    h = gl_h();
  } else if (which == "D2") {
    a = op_dhat(2);
    b = op_sl3("f2");
    del = op_dhat(3);
    h = gl_named("h2");
  } else if (which == "A") {
    a = op_dhat(1);
    b = op_sl3("f1");
    del = op_dhat(2);
    h = gl_named("h1");
  } else {
    throw error("unknown operator: " + which);
  }
  Operator sum;
  for (int m = 0; m <= k; ++m) {
    Operator term = op_pow(del, m) * op_pow(b, m) * op_pow(a, k - m) *
                    op_falling(h.shifted(Rational(-m)), k - m) * Rational(binomial(k, m));
    sum = sum.terms.empty() ? term : sum + term;
  }
  return sum;
}

struct LhtResult {
  std::array<int, 3> sigma;
  ModelElement leading;
};

// lexicographically highest term, first exponent most significant
inline LhtResult lht(const SM& v) {
  if (v.empty()) throw error("zero element has no leading term");
  auto it = std::prev(v.end());
  return {it->first, it->second};
}

inline bool sm_is_hwv(const SM& v) {
  return !v.empty() && op_apply(op_sl3("e1"), v).empty() && op_apply(op_sl3("e2"), v).empty();
}

// the unique coefficients expressing a highest weight vector of S (x) F(p,q)
// through powers of the D operators applied to the component's own highest
// weight monomial; peeled greedily off the leading term, so the divisor
// vanishing signals an exponent out of range
inline std::map<std::array<int, 3>, Rational> hwv_decompose(const SM& w0, int p, int q) {
  if (!sm_is_hwv(w0)) throw error("not a highest weight vector");
  ModelElement m0 = ModelElement::monomial(hw_key(p, q));
  SM rem = w0;
  std::map<std::array<int, 3>, Rational> out;
  while (!rem.empty()) {
    auto [sig, t] = lht(rem);
    auto it = t.p.t.find(hw_key(p, q));
    Rational cbar = it == t.p.t.end() ? Rational(0) : it->second;
    if (cbar == 0 || !(m0 * cbar == t)) throw error("not a highest weight vector");
    Rational denom = falling(Rational(p), sig[0]) * falling(Rational(p + q + 1), sig[0]) *
                     falling(Rational(q), sig[1]);
    if (denom == 0) throw error("exponent exceeds the weight bounds");
    Rational c = cbar / denom;
    SM dm0 = sm_of(m0);
    for (int k = 0; k < sig[2]; ++k) dm0 = d_apply(3, dm0);
    for (int k = 0; k < sig[1]; ++k) dm0 = d_apply(2, dm0);
    for (int k = 0; k < sig[0]; ++k) dm0 = d_apply(1, dm0);
    rem = sm_sub(rem, sm_scale(dm0, c));
    if (!rem.empty() && !(std::prev(rem.end())->first < sig))
      throw error("decomposition failed to make progress");
    out[sig] = c;
  }
  return out;
}

inline std::string sm_to_string(const SM& v) {
  if (v.empty()) return "0";
  std::string out;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    auto& [al, m] = *it;
    if (!out.empty()) out += " + ";
    std::string pre;
    for (int i = 1; i <= 3; ++i)
      if (al[i - 1] > 0) {
        pre += "dhat" + std::to_string(i);
        if (al[i - 1] > 1) pre += "^" + std::to_string(al[i - 1]);
        pre += "*";
      }
    out += pre + "[" + m.to_string() + "]";
  }
  return out;
}

}  // namespace e36
