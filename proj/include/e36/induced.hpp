#pragma once

#include "e36/e36_algebra.hpp"
#include "e36/model.hpp"
#include "e36/ypoly.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace e36 {

inline bool k_is_zero(const Rational& x) { return x == 0; }
inline bool k_is_zero(const YPoly& x) { return x.is_zero(); }

inline std::string k_to_string(const Rational& x) { return rat_pretty(x); }
inline std::string k_to_string(const YPoly& x) { return "(" + x.to_string() + ")"; }

// basis monomial dhat1^a1 dhat2^a2 dhat3^a3 * (dminus letters, ascending) *
// (dplus letters, ascending), applied to a generator of the fiber
struct PBW {
  std::array<int, 3> al{0, 0, 0};  // dhat exponents
  std::uint8_t dm = 0, dp = 0;     // index bitmasks, bit (i-1) for index i

  auto operator<=>(const PBW&) const = default;

  int odd_count() const { return std::popcount(dm) + std::popcount(dp); }
  int depth() const { return 2 * (al[0] + al[1] + al[2]) + odd_count(); }
};

struct Letter {
  int kind;  // 0 dhat, 1 dminus, 2 dplus
  int i;     // 1..3
};

inline const SuperElement& letter_elem(const Letter& l) {
  static const std::array<SuperElement, 9> tbl = [] {
    std::array<SuperElement, 9> t;
    for (int i = 1; i <= 3; ++i) {
      t[i - 1] = field_elem(i, Poly5::one());
      t[3 + i - 1] = named_element("dminus" + std::to_string(i));
      t[6 + i - 1] = named_element("dplus" + std::to_string(i));
    }
    return t;
  }();
  return tbl[l.kind * 3 + l.i - 1];
}

// [dplus_j, dminus_i] = coeff * dhat_k, read off the algebra itself
inline std::pair<int, Rational> cross_bracket(int j, int i) {
  static const auto tbl = [] {
    std::array<std::array<std::pair<int, Rational>, 3>, 3> t{};
    for (int jj = 1; jj <= 3; ++jj)
      for (int ii = 1; ii <= 3; ++ii) {
        t[jj - 1][ii - 1] = {1, Rational(0)};
        SuperElement b = super_bracket(letter_elem({2, jj}), letter_elem({1, ii}));
        for (int k = 0; k < 5; ++k)
          if (!b.ev.a[k].is_zero()) t[jj - 1][ii - 1] = {k + 1, b.ev.a[k].t.begin()->second};
      }
    return t;
  }();
  return tbl[j - 1][i - 1];
}

// element of the induced module with coefficients in K (Rational, or YPoly
// when the central weight is kept symbolic); terms are keyed by the basis
// monomial and the fiber basis index
template <class K>
struct Induced {
  std::map<std::pair<PBW, int>, K> t;

  bool is_zero() const { return t.empty(); }

  void add_term(const PBW& m, int f, const K& c) {
    if (k_is_zero(c)) return;
    auto [it, fresh] = t.try_emplace(std::pair{m, f}, c);
    if (!fresh) {
      it->second = it->second + c;
      if (k_is_zero(it->second)) t.erase(it);
    }
  }

  Induced& operator+=(const Induced& o) {
    for (auto& [k, c] : o.t) add_term(k.first, k.second, c);
    return *this;
  }
  Induced& operator-=(const Induced& o) {
    for (auto& [k, c] : o.t) add_term(k.first, k.second, -c);
    return *this;
  }
  friend Induced operator+(Induced a, const Induced& b) { return a += b; }
  friend Induced operator-(Induced a, const Induced& b) { return a -= b; }
  friend Induced operator*(const Induced& a, const K& s) {
    Induced r;
    if (k_is_zero(s)) return r;
    for (auto& [k, c] : a.t) {
      K v = c * s;
      if (!k_is_zero(v)) r.t.emplace(k, v);
    }
    return r;
  }
  bool operator==(const Induced& o) const { return t == o.t; }

  static Induced monomial(const PBW& m, int f, const K& c = K(1)) {
    Induced r;
    r.add_term(m, f, c);
    return r;
  }
};

// left multiplication by one letter, rewritten back into the normal form;
// a dplus crossing the dminus block emits the bracket terms as dhat letters
template <class K>
Induced<K> leftmul(const Letter& u, const Induced<K>& w) {
  Induced<K> r;
  for (auto& [key, c] : w.t) {
    const PBW& m = key.first;
    int f = key.second;
    if (u.kind == 0) {
      PBW n = m;
      n.al[u.i - 1]++;
      r.add_term(n, f, c);
    } else if (u.kind == 1) {
      std::uint8_t bit = std::uint8_t(1u << (u.i - 1));
      if (m.dm & bit) continue;
      int below = std::popcount(std::uint8_t(m.dm & (bit - 1)));
      PBW n = m;
      n.dm |= bit;
      r.add_term(n, f, below % 2 ? -c : c);
    } else {
      int sign = 1;
      for (int i = 1; i <= 3; ++i) {
        std::uint8_t ib = std::uint8_t(1u << (i - 1));
        if (!(m.dm & ib)) continue;
        auto [k3, coef] = cross_bracket(u.i, i);
        if (coef != 0) {
          PBW n = m;
          n.dm = std::uint8_t(n.dm & ~ib);
          n.al[k3 - 1]++;
          r.add_term(n, f, c * K(coef * sign));
        }
        sign = -sign;
      }
      std::uint8_t bit = std::uint8_t(1u << (u.i - 1));
      if (!(m.dp & bit)) {
        int below = std::popcount(std::uint8_t(m.dp & (bit - 1)));
        PBW n = m;
        n.dp |= bit;
        r.add_term(n, f, (sign < 0) != (below % 2 == 1) ? -c : c);
      }
    }
  }
  return r;
}

// the word spelled by a basis monomial, leftmost factor first
inline std::vector<Letter> letters_of(const PBW& m) {
  std::vector<Letter> w;
  for (int i = 1; i <= 3; ++i)
    for (int k = 0; k < m.al[i - 1]; ++k) w.push_back({0, i});
  for (int i = 1; i <= 3; ++i)
    if (m.dm & (1u << (i - 1))) w.push_back({1, i});
  for (int i = 1; i <= 3; ++i)
    if (m.dp & (1u << (i - 1))) w.push_back({2, i});
  return w;
}

// evaluation context for the fiber: the representation plus the value the
// central weight takes in K (the label itself, or the indeterminate)
template <class K>
struct FCtx {
  const IrrepF* F;
  K y;
};

inline FCtx<Rational> fixed_ctx(const IrrepF& F) { return {&F, F.y}; }
inline FCtx<YPoly> parametric_ctx(const IrrepF& F) { return {&F, YPoly::y()}; }

// the context keeps a pointer, so a temporary fiber must not be passed
FCtx<Rational> fixed_ctx(IrrepF&&) = delete;
FCtx<YPoly> parametric_ctx(IrrepF&&) = delete;

// action of a homogeneous element on a pure tensor 1 (x) v_f: parts of
// positive degree vanish, degree zero acts through the fiber, degrees -1 and
// -2 multiply in as letters
template <class K>
Induced<K> base_act(const SuperElement& a, int f, const FCtx<K>& ctx) {
  Induced<K> r;
  for (auto& [pd, part] : homogeneous_parts(a)) {
    int deg = pd.second;
    if (deg >= 1) continue;
    if (deg == 0) {
      auto g = g0_decompose(part);
      for (auto& [f2, val] : irrep_act(*ctx.F, g, ctx.y, f)) r.add_term(PBW{}, f2, val);
    } else if (deg == -1) {
      for (int s = 0; s < 10; ++s) {
        const Poly5& cp = part.od.b[s];
        if (cp.is_zero()) continue;
        auto [j, k] = slot_pair(s);
        if (j >= 3 || k < 3) throw error("action leaves the subalgebra");
        PBW n;
        if (k == 3)
          n.dp = std::uint8_t(1u << j);
        else
          n.dm = std::uint8_t(1u << j);
        r.add_term(n, f, K(cp.t.begin()->second));
      }
    } else if (deg == -2) {
      for (int i = 0; i < 5; ++i) {
        const Poly5& cp = part.ev.a[i];
        if (cp.is_zero()) continue;
        if (i >= 3) throw error("action leaves the subalgebra");
        PBW n;
        n.al[i] = 1;
        r.add_term(n, f, K(cp.t.begin()->second));
      }
    }
  }
  return r;
}

// a . (u w) = [a,u] w + (-1)^{|a||u|} u (a . w), peeled one letter at a time
template <class K>
Induced<K> act_word(const SuperElement& a, int apar, const std::vector<Letter>& w, size_t pos,
                    int f, const FCtx<K>& ctx) {
  if (pos == w.size()) return base_act(a, f, ctx);
  const Letter& u = w[pos];
  Induced<K> r;
  SuperElement b = super_bracket(a, letter_elem(u));
  int upar = u.kind == 0 ? 0 : 1;
  if (!b.is_zero()) r += act_word(b, (apar + upar) % 2, w, pos + 1, f, ctx);
  Induced<K> moved = leftmul(u, act_word(a, apar, w, pos + 1, f, ctx));
  if (apar && upar)
    r -= moved;
  else
    r += moved;
  return r;
}

template <class K>
Induced<K> act(const SuperElement& a0, const Induced<K>& w, const FCtx<K>& ctx) {
  Induced<K> r;
  for (const SuperElement& a : {a0.even_part(), a0.odd_part()}) {
    if (a.is_zero()) continue;
    int apar = a.od.is_zero() ? 0 : 1;
    for (auto& [key, c] : w.t) {
      auto word = letters_of(key.first);
      r += act_word(a, apar, word, 0, key.second, ctx) * c;
    }
  }
  return r;
}

template <class K>
Induced<K> act(const std::string& name, const Induced<K>& w, const FCtx<K>& ctx) {
  return act(named_element(name), w, ctx);
}

// weight of a basis monomial applied to the f-th fiber vector; the central
// eigenvalue is the fiber label minus depth/3
inline Weight pbw_weight(const PBW& m, int f, const IrrepF& F) {
  static const auto lw = [] {
    std::array<Weight, 9> t;
    for (int kind = 0; kind < 3; ++kind)
      for (int i = 1; i <= 3; ++i) t[kind * 3 + i - 1] = g0_weight(letter_elem({kind, i}));
    return t;
  }();
  Weight w = F.basis_weight(f);
  for (auto& l : letters_of(m)) {
    const Weight& u = lw[l.kind * 3 + l.i - 1];
    w.a += u.a;
    w.b += u.b;
    w.r += u.r;
    w.y += u.y;
  }
  return w;
}

// the common weight of all terms, if there is one
template <class K>
std::optional<Weight> common_weight(const Induced<K>& w, const IrrepF& F) {
  std::optional<Weight> out;
  for (auto& [key, c] : w.t) {
    Weight wt = pbw_weight(key.first, key.second, F);
    if (!out)
      out = wt;
    else if (!(*out == wt))
      return std::nullopt;
  }
  return out;
}

template <class K>
bool annihilated_by(const std::vector<std::string>& names, const Induced<K>& w,
                    const FCtx<K>& ctx) {
  for (auto& n : names)
    if (!act(named_element(n), w, ctx).is_zero()) return false;
  return true;
}

template <class K>
bool is_hw_vector(const Induced<K>& w, const FCtx<K>& ctx) {
  if (w.is_zero()) return false;
  return common_weight(w, *ctx.F).has_value() && annihilated_by({"e1", "e2", "e3"}, w, ctx);
}

// highest weight vector killed by both degree +1 generators
template <class K>
bool is_singular_vector(const Induced<K>& w, const FCtx<K>& ctx) {
  return is_hw_vector(w, ctx) && annihilated_by({"e0", "e0prime"}, w, ctx);
}

// all basis monomials of the given depth, sorted
inline std::vector<PBW> pbw_monomials(int depth) {
  std::vector<PBW> out;
  for (int dm = 0; dm < 8; ++dm)
    for (int dp = 0; dp < 8; ++dp) {
      int o = std::popcount(unsigned(dm)) + std::popcount(unsigned(dp));
      if (o > depth || (depth - o) % 2) continue;
      int na = (depth - o) / 2;
      for (int a1 = 0; a1 <= na; ++a1)
        for (int a2 = 0; a2 + a1 <= na; ++a2) {
          PBW m;
          m.al = {a1, a2, na - a1 - a2};
          m.dm = std::uint8_t(dm);
          m.dp = std::uint8_t(dp);
          out.push_back(m);
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// expansion of the monomial read with the dplus block first (the opposite
// normal form) in the standard basis
template <class K>
Induced<K> expand_plus_first(const PBW& m, int f) {
  std::vector<Letter> w;
  for (int i = 1; i <= 3; ++i)
    for (int k = 0; k < m.al[i - 1]; ++k) w.push_back({0, i});
  for (int i = 1; i <= 3; ++i)
    if (m.dp & (1u << (i - 1))) w.push_back({2, i});
  for (int i = 1; i <= 3; ++i)
    if (m.dm & (1u << (i - 1))) w.push_back({1, i});
  Induced<K> r = Induced<K>::monomial(PBW{}, f);
  for (size_t k = w.size(); k-- > 0;) r = leftmul(w[k], r);
  return r;
}

// coordinates in the opposite normal form (dplus block before dminus block);
// triangular elimination from the terms with the most odd letters down
template <class K>
std::map<std::pair<PBW, int>, K> to_plus_first(const Induced<K>& w0) {
  Induced<K> w = w0;
  std::map<std::pair<PBW, int>, K> out;
  while (!w.is_zero()) {
    auto best = w.t.begin();
    for (auto it = w.t.begin(); it != w.t.end(); ++it)
      if (it->first.first.odd_count() > best->first.first.odd_count()) best = it;
    PBW m = best->first.first;
    int f = best->first.second;
    // the leading coefficient of the expansion is the block-swap sign
    int s = std::popcount(m.dm) * std::popcount(m.dp) % 2 ? -1 : 1;
    K c = s < 0 ? -best->second : best->second;
    out[{m, f}] = c;
    w -= expand_plus_first<K>(m, f) * c;
  }
  return out;
}

template <class K, class Pred>
Induced<K> filter_terms(const Induced<K>& w, Pred p) {
  Induced<K> r;
  for (auto& [k, c] : w.t)
    if (p(k.first, k.second)) r.t.emplace(k, c);
  return r;
}

inline std::string pbw_to_string(const PBW& m) {
  std::string s;
  auto app = [&](const std::string& piece) {
    if (!s.empty()) s += "*";
    s += piece;
  };
  for (int i = 1; i <= 3; ++i)
    if (m.al[i - 1] > 0) {
      std::string p = "dhat" + std::to_string(i);
      if (m.al[i - 1] > 1) p += "^" + std::to_string(m.al[i - 1]);
      app(p);
    }
  for (int i = 1; i <= 3; ++i)
    if (m.dm & (1u << (i - 1))) app("dminus" + std::to_string(i));
  for (int i = 1; i <= 3; ++i)
    if (m.dp & (1u << (i - 1))) app("dplus" + std::to_string(i));
  return s.empty() ? "1" : s;
}

template <class K>
std::string to_string(const Induced<K>& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (auto& [key, c] : w.t) {
    if (!out.empty()) out += " + ";
    out += k_to_string(c) + " " + pbw_to_string(key.first) + " (x) v" +
           std::to_string(key.second);
  }
  return out;
}

}  // namespace e36
