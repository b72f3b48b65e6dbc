#pragma once

// Statement verifiers. Each checker replays one named claim with exact
// arithmetic and records what was computed next to what the source text says;
// a mismatch that reproduces a documented misprint is marked as a deviation so
// it stays distinguishable from a genuine failure. Reports are deterministic:
// fixed iteration orders, no randomness beyond a fixed linear-congruential
// stream where a spot check wants generic coefficients.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dops.hpp"
#include "induced.hpp"
#include "search.hpp"

namespace e36 {

struct LemmaDetail {
  std::string claim;
  std::string computed;
  std::string expected;
  bool match = false;
  bool known_deviation = false;  // anticipated misprint, not an engine bug
};

struct LemmaReport {
  std::string id;
  std::map<std::string, long long> parameters;
  std::string status;  // pass | fail | deviation
  std::vector<LemmaDetail> details;

  void note(const std::string& claim, const std::string& computed, const std::string& expected) {
    details.push_back({claim, computed, expected, computed == expected, false});
  }
  void note_bool(const std::string& claim, bool ok) {
    note(claim, ok ? "holds" : "fails", "holds");
  }
  void note_deviation(const std::string& claim, const std::string& computed,
                      const std::string& expected) {
    details.push_back({claim, computed, expected, computed == expected, true});
  }
  void finalize() {
    bool all = true, covered = true;
    for (auto& d : details)
      if (!d.match) {
        all = false;
        if (!d.known_deviation) covered = false;
      }
    status = all ? "pass" : covered ? "deviation" : "fail";
  }
};

namespace detail {

inline long long get_param(const std::map<std::string, long long>& p, const std::string& k,
                           long long dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

// deterministic small-coefficient stream for spot checks
struct CoeffStream {
  std::uint64_t s = 0x243f6a8885a308d3ull;
  Rational next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    long long n = (long long)((s >> 33) % 19) - 9;
    return Rational(n == 0 ? 1 : n);
  }
};

// ---- model-level helpers ----

// exact kernel of the two raising operators on one bigraded component
inline std::vector<std::vector<Rational>> model_hwv_kernel(int p, int q) {
  auto basis = component_basis(p, q);
  std::map<Poly6::Key, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);
  int n = int(basis.size());
  Mat<Rational> A(2 * n, n);
  for (int j = 0; j < n; ++j) {
    ModelElement base = ModelElement::monomial(basis[j]);
    const std::pair<int, int> raise[2] = {{1, 2}, {2, 3}};
    for (int o = 0; o < 2; ++o) {
      ModelElement img = model_act_elem(raise[o].first, raise[o].second, base);
      for (auto& [k, c] : img.p.t) A.at(o * n + index.at(k), j) = c;
    }
  }
  return kernel_basis(A);
}

// ---- operator-calculus helpers on S (x) M ----

inline bool sm_eq(const SM& a, const SM& b) {
  SM d = sm_sub(a, b);
  for (auto& [k, m] : d)
    if (!m.is_zero()) return false;
  return true;
}

inline bool op_eq_on(const Operator& x, const Operator& y, const std::vector<SM>& span) {
  for (auto& v : span)
    if (!sm_eq(op_apply(x, v), op_apply(y, v))) return false;
  return true;
}

inline Operator op_commutator(const Operator& x, const Operator& y) {
  return x * y + y * x * Rational(-1);
}

inline bool op_zero_on(const Operator& x, const std::vector<SM>& span) {
  for (auto& v : span)
    if (!sm_eq(op_apply(x, v), SM{})) return false;
  return true;
}

// dhat-prefixed component bases, the extensional spanning sets for operator
// identities
inline std::vector<SM> sm_span(int pmax, int qmax, int bmax) {
  std::vector<std::array<int, 3>> betas;
  for (int t = 0; t <= bmax; ++t)
    enumerate_exponents(3, t, [&](const std::vector<int>& e) {
      betas.push_back({e[0], e[1], e[2]});
    });
  std::vector<SM> out;
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q)
      for (auto& key : component_basis(p, q))
        for (auto& b : betas) {
          SM v;
          v[b] = ModelElement::monomial(key);
          out.push_back(std::move(v));
        }
  return out;
}

inline ModelElement sm_coeff(const SM& v, const std::array<int, 3>& key) {
  auto it = v.find(key);
  return it == v.end() ? ModelElement{} : it->second;
}

// (h1, h2) weight shared by every term, when there is one
inline std::optional<std::pair<long long, long long>> sm_weight(const SM& v) {
  static const long long wd[3][2] = {{-1, 0}, {1, -1}, {0, 1}};
  std::optional<std::pair<long long, long long>> out;
  for (auto& [b, me] : v)
    for (auto& [k, c] : me.p.t) {
      auto w = key_weight(k);
      for (int i = 0; i < 3; ++i) {
        w.first += b[i] * wd[i][0];
        w.second += b[i] * wd[i][1];
      }
      if (!out)
        out = w;
      else if (*out != w)
        return std::nullopt;
    }
  return out;
}

inline Operator dbar_pow(const std::array<int, 3>& al) {
  Operator r = Operator::identity();
  for (int i = 1; i <= 3; ++i) r = r * op_pow(dbar_op(i), al[i - 1]);
  return r;
}

inline Operator d_pow_word(const std::array<int, 3>& al) {
  // canonical word order: the index-1 block outermost
  return op_pow(d_op(1), al[0]) * op_pow(d_op(2), al[1]) * op_pow(d_op(3), al[2]);
}

inline Operator falling_weights(const std::array<int, 3>& al) {
  return op_falling(gl_h(), al[0]) * op_falling(gl_named("h1"), al[0]) *
         op_falling(gl_named("h2"), al[1]);
}

inline bool lex_le(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  return !(b < a);
}

}  // namespace detail

// ---- highest weight lines in the exterior blocks ----

struct LambdaLine {
  std::string tag;  // matched formula label, empty when nothing fits
  int degree = 0;   // exterior degree of the block
  long long a = 0, b = 0;
  bool matched = false;
  Induced<Rational> vec;
};

namespace detail {

inline bool induced_proportional(const Induced<Rational>& u, const Induced<Rational>& v) {
  if (u.is_zero() || v.is_zero()) return false;
  auto iu = u.t.begin(), iv = v.t.begin();
  if (u.t.size() != v.t.size() || iu->first != iv->first) return false;
  Rational c = iu->second / iv->second;
  return u == v * c;
}

// one letter-block term: expand the model monomial over the fiber basis
inline void lambda_term(const IrrepF& F, int kind, unsigned mask, const Poly6::Key& key,
                        const Rational& coeff, Induced<Rational>& out) {
  ModelElement me = ModelElement::monomial(key);
  if (me.is_zero()) return;
  PBW mono;
  if (kind == 2)
    mono.dp = std::uint8_t(mask);
  else
    mono.dm = std::uint8_t(mask);
  for (auto& [mi, c] : model_expand(F, me)) out.add_term(mono, F.findex(mi, 0), coeff * c);
}

struct LambdaFamily {
  const char* tag;
  int degree;
  long long da, db;  // weight offset from the fiber highest weight
};

inline const std::array<LambdaFamily, 8>& lambda_families() {
  static const std::array<LambdaFamily, 8> fams = {{
      {"(00)'", 0, 0, 0},
      {"(+0)", 1, 1, 0},
      {"(-+)", 1, -1, 1},
      {"(0-)", 1, 0, -1},
      {"(0+)", 2, 0, 1},
      {"(-0)", 2, -1, 0},
      {"(+-)", 2, 1, -1},
      {"(00)''", 3, 0, 0},
  }};
  return fams;
}

// the printed candidate of the given family at block weight (m, n), or an
// empty element when an exponent would go negative
inline Induced<Rational> lambda_family_vector(const IrrepF& F, int kind, int fam, long long ml,
                                              long long nl) {
  Induced<Rational> u;
  int m = int(ml), n = int(nl);
  if (m < 0 || n < 0) return u;
  auto key = [&](int dp1, int dp2, int dp3, int x1, int x2, int x3) {
    return Poly6::Key{dp1, dp2, dp3, x1, x2, x3};
  };
  switch (fam) {
    case 0:
      lambda_term(F, kind, 0u, key(0, 0, n, m, 0, 0), 1, u);
      break;
    case 1:
      if (m >= 1) lambda_term(F, kind, 1u, key(0, 0, n, m - 1, 0, 0), 1, u);
      break;
    case 2:
      if (n >= 1) {
        lambda_term(F, kind, 1u, key(0, 0, n - 1, m, 1, 0), 1, u);
        lambda_term(F, kind, 2u, key(0, 0, n - 1, m + 1, 0, 0), -1, u);
      }
      break;
    case 3:
      for (int i = 0; i < 3; ++i) {
        Poly6::Key k = key(0, 0, n, m, 0, 0);
        k[i] += 1;
        lambda_term(F, kind, 1u << i, k, 1, u);
      }
      break;
    case 4:
      if (n >= 1) lambda_term(F, kind, 3u, key(0, 0, n - 1, m, 0, 0), 1, u);
      break;
    case 5:
      lambda_term(F, kind, 3u, key(0, 0, n, m, 0, 1), 1, u);
      lambda_term(F, kind, 5u, key(0, 0, n, m, 1, 0), -1, u);
      lambda_term(F, kind, 6u, key(0, 0, n, m + 1, 0, 0), 1, u);
      break;
    case 6:
      if (m >= 1) {
        lambda_term(F, kind, 3u, key(0, 1, n, m - 1, 0, 0), 1, u);
        lambda_term(F, kind, 5u, key(0, 0, n + 1, m - 1, 0, 0), 1, u);
      }
      break;
    case 7:
      lambda_term(F, kind, 7u, key(0, 0, n, m, 0, 0), 1, u);
      break;
  }
  return u;
}

}  // namespace detail

// all sl(3)-highest lines in the exterior block over the (p, q) fiber, each
// labelled with the matching closed-form candidate; the line count is
// cross-checked against an independent fraction-free rank
inline std::vector<LambdaLine> enumerate_hwv_lambda(int p, int q, char sign) {
  if (p < 0 || q < 0) throw error("weights must be non-negative");
  if (sign != '+' && sign != '-') throw error("sign must be '+' or '-'");
  IrrepF F = build_irrep(p, q, 0, Rational(0));
  auto ctx = fixed_ctx(F);
  int kind = sign == '+' ? 2 : 1;
  std::vector<LambdaLine> out;
  for (int deg = 0; deg <= 3; ++deg) {
    std::map<std::pair<long long, long long>, ModBasis> groups;
    for (unsigned mask = 0; mask < 8; ++mask) {
      if (std::popcount(mask) != deg) continue;
      PBW mono;
      if (kind == 2)
        mono.dp = std::uint8_t(mask);
      else
        mono.dm = std::uint8_t(mask);
      for (int f = 0; f < F.dim(); ++f) {
        Weight w = pbw_weight(mono, f, F);
        groups[{w.a, w.b}].push_back({mono, f});
      }
    }
    for (auto& [wt, basis] : groups) {
      Mat<Rational> A = action_matrix({"e1", "e2"}, basis, ctx);
      auto ker = kernel_basis(A);
      Mat<Rational> B = A;
      int rk = bareiss(
          B, [](const Rational& x) { return x == 0; },
          [](const Rational& a, const Rational& b) { return a / b; });
      if (int(ker.size()) != A.cols - rk) throw error("kernel size disagrees with rank");
      for (auto& co : ker) {
        std::vector<Rational> cv = co;
        normalize_primitive(cv);
        LambdaLine line;
        line.degree = deg;
        line.a = wt.first;
        line.b = wt.second;
        line.vec = from_coords(basis, cv);
        // the enumeration is per block, where only the first-factor raising
        // operators stay inside; e3 swaps the letter kinds
        if (!annihilated_by({"e1", "e2"}, line.vec, ctx))
          throw error("kernel vector failed re-verification");
        for (size_t fi = 0; fi < detail::lambda_families().size(); ++fi) {
          const auto& fam = detail::lambda_families()[fi];
          if (fam.degree != deg || wt.first - p != fam.da || wt.second - q != fam.db) continue;
          line.tag = fam.tag;
          Induced<Rational> cand =
              detail::lambda_family_vector(F, kind, int(fi), wt.first, wt.second);
          line.matched = detail::induced_proportional(line.vec, cand);
          break;
        }
        out.push_back(std::move(line));
      }
    }
  }
  return out;
}

// the highest lines additionally killed by the degree-one operator of the
// block: x3 d35 on the plus block, x3 d34 on the minus block. Tags follow the
// five-entry classification T0..T4
inline std::vector<LambdaLine> kernel_e0prime(int p, int q, bool plus_block) {
  IrrepF F = build_irrep(p, q, 0, Rational(0));
  auto ctx = fixed_ctx(F);
  const SuperElement& op = named_element(plus_block ? "e0prime" : "e1prime");
  static const std::map<std::string, std::string> t_of = {
      {"(00)'", "T0"}, {"(+0)", "T1"}, {"(0-)", "T2"}, {"(+-)", "T3"}, {"(00)''", "T4"}};
  std::vector<LambdaLine> out;
  for (auto& l : enumerate_hwv_lambda(p, q, plus_block ? '+' : '-')) {
    if (!act(op, l.vec, ctx).is_zero()) continue;
    LambdaLine k = l;
    auto it = t_of.find(l.tag);
    if (it != t_of.end()) {
      k.tag = it->second;
      k.matched = l.matched;
    } else {
      k.tag.clear();
      k.matched = false;
    }
    out.push_back(std::move(k));
  }
  return out;
}

// classification predicted for the (p, q) fiber
inline std::set<std::string> expected_t_tags(int p, int q) {
  std::set<std::string> t{"T0"};
  if (q == 0) t.insert("T1");
  if (p == 0 && q >= 1) t.insert("T2");
  if (p == 0 && q == 1) t.insert("T3");
  if (p == 0 && q == 0) t.insert("T4");
  return t;
}

namespace detail {

inline std::string tagset_str(const std::set<std::string>& s) {
  std::string out = "{";
  for (auto& t : s) {
    if (out.size() > 1) out += ",";
    out += t;
  }
  return out + "}";
}

// ---- the individual checkers ----

inline void check_relations(LemmaReport& rep) {
  for (auto& rc : relation_suite()) {
    if (rc.deviation)
      rep.note_deviation(rc.claim, rc.computed, rc.expected);
    else
      rep.note(rc.claim, rc.computed, rc.expected);
  }
}

inline void check_3_1(LemmaReport& rep) {
  int mmax = int(get_param(rep.parameters, "mmax", 4));
  int hmax = int(get_param(rep.parameters, "hmax", 3));
  bool dims = true;
  for (int m = 0; m <= mmax; ++m)
    for (int n = 0; n <= mmax; ++n) {
      Int want = binomial(m + 2, 2) * binomial(n + 2, 2) -
                 binomial(m + 1, 2) * binomial(n + 1, 2);
      if (Int(component_basis(m, n).size()) != want) dims = false;
    }
  rep.note_bool("bigraded component dimensions match the Weyl values up to " +
                    std::to_string(mmax),
                dims);
  bool mult1 = true, hw = true;
  for (int m = 0; m <= hmax; ++m)
    for (int n = 0; n <= hmax; ++n) {
      auto ker = model_hwv_kernel(m, n);
      if (ker.size() != 1) {
        mult1 = false;
        continue;
      }
      auto basis = component_basis(m, n);
      ModelElement v;
      for (size_t j = 0; j < basis.size(); ++j)
        v += ModelElement::monomial(basis[j], ker[0][j]);
      ModelElement top = ModelElement::monomial(hw_key(m, n));
      bool prop = !v.is_zero() && !top.is_zero();
      if (prop) {
        // proportional iff v - c*top vanishes for the matching coefficient
        Rational c;
        auto it = v.p.t.find(hw_key(m, n));
        if (it == v.p.t.end())
          prop = false;
        else
          prop = (v - top * it->second).is_zero();
      }
      if (!prop) hw = false;
    }
  rep.note_bool("each bigraded component carries exactly one highest line up to " +
                    std::to_string(hmax),
                mult1);
  rep.note_bool("the highest line of the (m,n) component is spanned by dp3^n x1^m", hw);
  rep.note_deviation(
      "printed bigrading of the weight-(m,n) component",
      "x-degree m and dual degree n (the printed degrees are swapped against the printed "
      "highest vector dp3^n x1^m)",
      "dual degree m and x-degree n as printed");
}

inline void check_3_2(LemmaReport& rep) {
  int smax = int(get_param(rep.parameters, "smax", 2));
  int mmax = int(get_param(rep.parameters, "mmax", 2));
  // the three canonical invariants are killed by both raising operators
  bool inv = true;
  for (int i = 1; i <= 3; ++i) {
    SM Di = op_apply(dbar_op(i), sm_of(ModelElement::monomial({0, 0, 0, 0, 0, 0})));
    for (const char* e : {"e1", "e2"})
      if (!sm_eq(op_apply(op_sl3(e), Di), SM{})) inv = false;
  }
  rep.note_bool("Dbar_1, Dbar_2, Dbar_3 are invariant under both raising operators", inv);

  // weight bookkeeping: the alpha-th product shifts the block weight by
  // (alpha_2, alpha_3)
  bool wts = true;
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int a2 = 0; a2 <= 1; ++a2)
      for (int a3 = 0; a3 <= 1; ++a3)
        for (int m = 0; m <= 1; ++m)
          for (int n = 0; n <= 1; ++n) {
            SM v = op_apply(dbar_pow({a1, a2, a3}), sm_of(ModelElement::monomial(hw_key(m, n))));
            auto w = sm_weight(v);
            if (!w || w->first != m + a2 || w->second != n + a3) wts = false;
          }
  rep.note_bool("Dbar^alpha applied to the (m,n) highest vector has weight (m+alpha2, n+alpha3)",
                wts);

  // completeness: in each sector the products span the full highest space
  bool span = true;
  for (int k = 0; k <= smax && span; ++k)
    for (int m = 0; m <= mmax && span; ++m)
      for (int n = 0; n <= mmax && span; ++n) {
        // candidate products landing in S^k (x) component (m, n)
        std::vector<SM> cands;
        for (int a1 = 0; a1 <= std::min(k, m); ++a1)
          for (int a2 = 0; a2 + a1 <= k && a2 <= n; ++a2) {
            int a3 = k - a1 - a2;
            cands.push_back(op_apply(dbar_pow({a1, a2, a3}),
                                  sm_of(ModelElement::monomial(hw_key(m - a1, n - a2)))));
          }
        // coordinates over the sector basis
        std::vector<std::pair<std::array<int, 3>, Poly6::Key>> flat;
        std::map<std::pair<std::array<int, 3>, Poly6::Key>, int> index;
        enumerate_exponents(3, k, [&](const std::vector<int>& e) {
          for (auto& key : component_basis(m, n)) {
            index[{{e[0], e[1], e[2]}, key}] = int(flat.size());
            flat.push_back({{e[0], e[1], e[2]}, key});
          }
        });
        Mat<Rational> A(2 * int(flat.size()), int(flat.size()));
        for (int j = 0; j < int(flat.size()); ++j) {
          SM v;
          v[flat[j].first] = ModelElement::monomial(flat[j].second);
          const char* ops[2] = {"e1", "e2"};
          for (int o = 0; o < 2; ++o) {
            SM img = op_apply(op_sl3(ops[o]), v);
            for (auto& [bk, me] : img)
              for (auto& [mk, c] : me.p.t)
                A.at(o * int(flat.size()) + index.at({bk, mk}), j) += c;
          }
        }
        size_t hw_dim = kernel_basis(A).size();
        if (hw_dim != cands.size()) span = false;
        // independence of the products themselves
        Mat<Rational> C(int(cands.size()), int(flat.size()));
        for (size_t r = 0; r < cands.size(); ++r)
          for (auto& [bk, me] : cands[r])
            for (auto& [mk, c] : me.p.t) C.at(int(r), index.at({bk, mk})) += c;
        if (rank(C) != int(cands.size())) span = false;
      }
  rep.note_bool(
      "per sector, the invariant products of the highest vectors are independent and count the "
      "full highest space",
      span);
}

inline void check_3_3(LemmaReport& rep) {
  int pmax = int(get_param(rep.parameters, "pmax", 2));
  auto span = sm_span(pmax, pmax, 1);
  bool comm = true;
  for (int i = 1; i <= 3 && comm; ++i)
    for (int j = i + 1; j <= 3 && comm; ++j)
      if (!op_zero_on(op_commutator(d_op(i), d_op(j)), span)) comm = false;
  rep.note_bool("the three descent operators commute pairwise", comm);
  bool mixed = true;
  for (auto [i, j] : {std::pair{2, 1}, {3, 1}, {3, 2}})
    if (!op_zero_on(op_commutator(d_op(i), dbar_op(j)), span)) mixed = false;
  rep.note_bool("the i-th descent operator commutes with multiplication by the j-th invariant "
                "for j < i",
                mixed);
}

inline void check_3_4(LemmaReport& rep) {
  int pmax = int(get_param(rep.parameters, "pmax", 2));
  int qmax = int(get_param(rep.parameters, "qmax", 2));
  int amax = int(get_param(rep.parameters, "amax", 2));

  // exact bridge between the two product families on the embedded fiber
  bool bridge = true;
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) {
      SM m0 = sm_of(ModelElement::monomial(hw_key(p, q)));
      for (int a1 = 0; a1 <= amax; ++a1)
        for (int a2 = 0; a2 <= amax; ++a2)
          for (int a3 = 0; a3 <= 1; ++a3) {
            SM lhs = op_apply(d_pow_word({a1, a2, a3}), m0);
            Rational c = falling(Rational(p), a1) * falling(Rational(p + q + 1), a1) *
                         falling(Rational(q), a2);
            SM rhs;
            if (c != 0 && a1 <= p && a2 <= q)
              rhs = sm_scale(op_apply(dbar_pow({a1, a2, a3}),
                                   sm_of(ModelElement::monomial(hw_key(p - a1, q - a2)))),
                             c);
            if (!sm_eq(lhs, rhs)) bridge = false;
          }
    }
  rep.note_bool("D^alpha on the (p,q) highest vector equals p^[a1] (p+q+1)^[a1] q^[a2] times "
                "Dbar^alpha on the lowered highest vector, vanishing exactly beyond the bounds",
                bridge);

  // round trip: a combination of descent products is recovered coefficient by
  // coefficient from its expansion
  bool round = true;
  CoeffStream cs;
  for (auto [p, q] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
    SM m0 = sm_of(ModelElement::monomial(hw_key(p, q)));
    std::map<std::array<int, 3>, Rational> coeffs;
    SM w;
    for (int a1 = 0; a1 <= std::min(p, 2); ++a1)
      for (int a2 = 0; a2 <= std::min(q, 2); ++a2)
        for (int a3 = 0; a3 <= 1; ++a3) {
          Rational c = cs.next();
          coeffs[{a1, a2, a3}] = c;
          w = sm_add(w, sm_scale(op_apply(d_pow_word({a1, a2, a3}), m0), c));
        }
    if (!(hwv_decompose(w, p, q) == coeffs)) round = false;
  }
  rep.note_bool("decomposition recovers every coefficient of a seeded descent combination",
                round);

  // sector dimension count: the products exhaust the highest space
  bool counts = true;
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}}) {
    IrrepF F = build_irrep(p, q, 0, Rational(0));
    for (int k = 1; k <= 2; ++k) {
      long long nval = 0;
      for (int a1 = 0; a1 <= std::min(k, p); ++a1)
        for (int a2 = 0; a2 + a1 <= k && a2 <= q; ++a2) ++nval;
      // highest vectors of S^k (x) F counted through the exterior-free model
      std::vector<std::pair<std::array<int, 3>, int>> flat;
      std::map<std::pair<std::array<int, 3>, int>, int> index;
      enumerate_exponents(3, k, [&](const std::vector<int>& e) {
        for (int mi = 0; mi < F.mdim(); ++mi) {
          index[{{e[0], e[1], e[2]}, mi}] = int(flat.size());
          flat.push_back({{e[0], e[1], e[2]}, mi});
        }
      });
      Mat<Rational> A(2 * int(flat.size()), int(flat.size()));
      for (int j = 0; j < int(flat.size()); ++j) {
        SM v;
        v[flat[j].first] = ModelElement::monomial(F.mbasis[flat[j].second]);
        const char* ops[2] = {"e1", "e2"};
        for (int o = 0; o < 2; ++o) {
          SM img = op_apply(op_sl3(ops[o]), v);
          for (auto& [bk, me] : img)
            for (auto& [mk, c] : me.p.t) {
              A.at(o * int(flat.size()) + index.at({bk, F.mindex.at(mk)}), j) += c;
            }
        }
      }
      if ((long long)kernel_basis(A).size() != nval) counts = false;
    }
  }
  rep.note_bool("the number of highest lines per symmetric degree equals the count of admissible "
                "exponents",
                counts);
}

inline void check_3_5(LemmaReport& rep) {
  int pmax = int(get_param(rep.parameters, "pmax", 2));
  int amax = int(get_param(rep.parameters, "amax", 2));

  // invariant products only raise the exponent by alpha itself
  bool top_bar = true;
  for (int a1 = 0; a1 <= amax; ++a1)
    for (int a2 = 0; a2 <= amax; ++a2)
      for (int a3 = 0; a3 <= 1; ++a3)
        for (int m = 0; m <= 1; ++m)
          for (int n = 0; n <= 1; ++n) {
            SM v = op_apply(dbar_pow({a1, a2, a3}), sm_of(ModelElement::monomial(hw_key(m, n))));
            auto l = lht(v);
            Poly6::Key want = hw_key(m + a1, n + a2);
            if (l.sigma != std::array<int, 3>{a1, a2, a3} ||
                !(l.leading == ModelElement::monomial(want)))
              top_bar = false;
          }
  rep.note_bool("the leading term of Dbar^alpha on dp3^n x1^m is dhat^alpha dp3^(n+a2) "
                "x1^(m+a1)",
                top_bar);

  // operator-level leading term: the dhat^alpha coefficient of D^alpha is the
  // falling weight product, and nothing beats it lexicographically
  bool top_d = true;
  for (int a1 = 0; a1 <= amax && top_d; ++a1)
    for (int a2 = 0; a2 <= amax && top_d; ++a2)
      for (int a3 = 0; a3 <= 1 && top_d; ++a3) {
        std::array<int, 3> al{a1, a2, a3};
        Operator H = falling_weights(al);
        for (int p = 0; p <= pmax && top_d; ++p)
          for (int q = 0; q <= pmax && top_d; ++q)
            for (auto& key : component_basis(p, q)) {
              SM v = sm_of(ModelElement::monomial(key));
              SM dv = op_apply(d_pow_word(al), v);
              SM hv = op_apply(H, v);
              ModelElement want = sm_coeff(hv, {0, 0, 0});
              if (!(sm_coeff(dv, al) == want)) top_d = false;
              if (!dv.empty() && !lex_le(lht(dv).sigma, al)) top_d = false;
            }
      }
  rep.note_bool("the dhat^alpha coefficient of D^alpha is h^[a1] h1^[a1] h2^[a2] and no higher "
                "exponent occurs",
                top_d);

  // scalar form on the embedded highest vectors
  bool cor = true;
  for (int a1 = 0; a1 <= amax; ++a1)
    for (int a2 = 0; a2 <= amax; ++a2)
      for (int a3 = 0; a3 <= 1; ++a3)
        for (int p = 0; p <= pmax; ++p)
          for (int q = 0; q <= pmax; ++q) {
            SM dv = op_apply(d_pow_word({a1, a2, a3}), sm_of(ModelElement::monomial(hw_key(p, q))));
            Rational c = falling(Rational(p), a1) * falling(Rational(p + q + 1), a1) *
                         falling(Rational(q), a2);
            ModelElement want = ModelElement::monomial(hw_key(p, q)) * c;
            if (!(sm_coeff(dv, {a1, a2, a3}) == want)) cor = false;
          }
  rep.note_bool("on the (p,q) highest vector the leading coefficient is p^[a1] (p+q+1)^[a1] "
                "q^[a2] dp3^q x1^p",
                cor);
}

inline void check_3_7(LemmaReport& rep) {
  int pmax = int(get_param(rep.parameters, "pmax", 3));
  auto span = sm_span(pmax, pmax, 1);
  bool comm = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      if (!op_zero_on(op_commutator(d_op(i), d_op(j)), span)) comm = false;
  rep.note_bool("the descent operators commute on every component up to the bound", comm);

  // bracket identities the commutation proof runs on
  auto small = sm_span(2, 2, 1);
  Operator A = op_A(), B = op_B();
  rep.note_bool("[A, dhat2] = 0", op_zero_on(op_commutator(A, op_dhat(2)), small));
  rep.note_bool("[A, dhat3] = 0", op_zero_on(op_commutator(A, op_dhat(3)), small));
  rep.note_bool("[A, h2] = 0", op_zero_on(op_commutator(A, op_sl3("h2")), small));
  rep.note_bool("[B, dhat3] = -A",
                op_eq_on(op_commutator(B, op_dhat(3)), A * Rational(-1), small));
  rep.note_bool("[B, f2] = 0", op_zero_on(op_commutator(B, op_sl3("f2")), small));
  rep.note_bool(
      "[A, f2] = dhat1 f2 - dhat2 f12",
      op_eq_on(op_commutator(A, op_sl3("f2")),
               op_dhat(1) * op_sl3("f2") + op_dhat(2) * op_sl3("f12") * Rational(-1), small));
}

inline void check_3_8(LemmaReport& rep) {
  int kmax = int(get_param(rep.parameters, "kmax", 4));
  auto span = sm_span(2, 2, 1);
  const struct {
    const char* name;
    Operator op;
  } insts[3] = {{"D1", d_op(1)}, {"D2", d_op(2)}, {"A", op_A()}};
  for (auto& inst : insts) {
    bool ok = true;
    for (int k = 1; k <= kmax; ++k)
      if (!op_eq_on(op_pow(inst.op, k), dpow_expand(k, inst.name), span)) ok = false;
    rep.note_bool(std::string("the binomial expansion of powers holds for ") + inst.name +
                      " up to k = " + std::to_string(kmax),
                  ok);
  }
  // leading terms of pure powers
  bool lead = true;
  for (int k = 1; k <= 2; ++k) {
    Operator h1k = op_pow(op_dhat(1), k) * op_falling(gl_h(), k) * op_falling(gl_named("h1"), k);
    Operator h2k = op_pow(op_dhat(2), k) * op_falling(gl_named("h2"), k);
    for (auto& v : sm_span(2, 2, 0)) {
      SM d1 = op_apply(op_pow(d_op(1), k), v);
      SM d2 = op_apply(op_pow(d_op(2), k), v);
      std::array<int, 3> t1{k, 0, 0}, t2{0, k, 0};
      if (!(sm_coeff(d1, t1) == sm_coeff(op_apply(h1k, v), t1))) lead = false;
      if (!d1.empty() && !lex_le(lht(d1).sigma, t1)) lead = false;
      if (!(sm_coeff(d2, t2) == sm_coeff(op_apply(h2k, v), t2))) lead = false;
      if (!d2.empty() && !lex_le(lht(d2).sigma, t2)) lead = false;
    }
  }
  rep.note_bool("pure powers lead with dhat1^k h^[k] h1^[k] and dhat2^k h2^[k]", lead);
}

inline void check_3_10(LemmaReport& rep) {
  auto span = sm_span(2, 2, 2);
  rep.note_bool("[D2, dhat3] = 0", op_zero_on(op_commutator(d_op(2), op_dhat(3)), span));
  rep.note_bool("[D2, dhat1] = 0", op_zero_on(op_commutator(d_op(2), op_dhat(1)), span));

  // the shifted-weight exchange rule. Words act right to left here, and under
  // that reading the printed shift has the wrong sign; reading the same words
  // left to right reproduces the printed form, so both variants are recorded
  auto shift_ok = [&](int m) {
    return op_eq_on(d_op(2) * op_dhat(2), op_dhat(2) * d2_shift_op(Rational(m)), span);
  };
  std::string got = shift_ok(-1) && !shift_ok(1) ? "shift -1" : shift_ok(1) ? "shift +1" : "none";
  rep.note_deviation("right-to-left exchange D2 dhat2 = dhat2 D2{shift}", got, "shift +1");
  bool l2r = op_eq_on(op_dhat(2) * d_op(2), d2_shift_op(Rational(1)) * op_dhat(2), span);
  rep.note_bool("the printed shift +1 is recovered when the same words compose left to right",
                l2r);

  // leading-term consequence, with the shift that holds right to left
  bool cor = true;
  CoeffStream cs;
  for (auto [p, q] : {std::pair{1, 1}, {2, 2}}) {
    SM f;
    std::array<int, 3> top{2, 1, 0};
    f[top] = ModelElement::monomial(hw_key(p, q), cs.next());
    f[{1, 2, 1}] = ModelElement::monomial(hw_key(p, q), cs.next());
    f[{0, 0, 0}] = ModelElement::monomial(hw_key(p, q), cs.next());
    SM lhs = op_apply(d_op(2), f);
    SM shifted = op_apply(d2_shift_op(Rational(-top[1])), sm_of(lht(f).leading));
    SM rhs;
    for (auto& [b, me] : shifted) {
      std::array<int, 3> k{top[0] + b[0], top[1] + b[1], top[2] + b[2]};
      sm_add_term(rhs, k, me);
    }
    if (lhs.empty() || rhs.empty() || !(lht(lhs).sigma == lht(rhs).sigma) ||
        !(lht(lhs).leading == lht(rhs).leading))
      cor = false;
  }
  rep.note_bool("leading terms transport through dhat^alpha with the working shift -alpha2", cor);
}

inline void check_3_12(LemmaReport& rep) {
  long long ponly = get_param(rep.parameters, "p", -1);
  long long qonly = get_param(rep.parameters, "q", -1);
  std::vector<std::pair<int, int>> grid;
  if (ponly >= 0 && qonly >= 0)
    grid.push_back({int(ponly), int(qonly)});
  else
    grid = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}};
  for (auto [p, q] : grid) {
    std::set<std::string> plus_tags, minus_tags;
    for (char sign : {'+', '-'}) {
      auto lines = enumerate_hwv_lambda(p, q, sign);
      bool all_matched = true;
      std::set<std::string> tags;
      for (auto& l : lines) {
        if (l.tag.empty() || !l.matched) all_matched = false;
        tags.insert(l.tag);
      }
      // formula side: every nonzero candidate must appear exactly once
      IrrepF F = build_irrep(p, q, 0, Rational(0));
      int kind = sign == '+' ? 2 : 1;
      std::set<std::string> want;
      for (size_t fi = 0; fi < lambda_families().size(); ++fi) {
        const auto& fam = lambda_families()[fi];
        Induced<Rational> cand =
            lambda_family_vector(F, kind, int(fi), p + fam.da, q + fam.db);
        if (!cand.is_zero()) want.insert(fam.tag);
      }
      std::string where = "(" + std::to_string(p) + "," + std::to_string(q) + ") sign " + sign;
      rep.note("highest lines at " + where + " carry the family labels",
               all_matched ? tagset_str(tags) : "unmatched line present", tagset_str(want));
      if (p >= 1 && q >= 1) {
        // away from the degenerate corner every specialized formula is nonzero
        // and the counts must agree exactly
        long long nlines = (long long)lines.size();
        rep.note("line count equals nonzero-candidate count at " + where, std::to_string(nlines),
                 std::to_string(want.size()));
      }
      (sign == '+' ? plus_tags : minus_tags) = tags;
    }
    rep.note_bool("the plus and minus blocks give identical label sets at (" +
                      std::to_string(p) + "," + std::to_string(q) + ")",
                  plus_tags == minus_tags);
  }
}

inline void check_t_kernel(LemmaReport& rep, bool plus_block) {
  int pmax = int(get_param(rep.parameters, "pmax", 4));
  int qmax = int(get_param(rep.parameters, "qmax", 4));
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) {
      auto lines = kernel_e0prime(p, q, plus_block);
      std::set<std::string> tags;
      bool all_matched = true;
      for (auto& l : lines) {
        if (l.tag.empty() || !l.matched) all_matched = false;
        tags.insert(l.tag);
      }
      rep.note("annihilated highest lines at (" + std::to_string(p) + "," + std::to_string(q) +
                   ") follow the five-entry classification",
               all_matched ? tagset_str(tags) : "unclassified line present",
               tagset_str(expected_t_tags(p, q)));
    }
  if (!plus_block) {
    // the block relation that drives the classification carries the misprint
    SuperElement got = super_bracket(named_element("e1prime"), named_element("dminus2"));
    rep.note_deviation("the minus-block relation on the second letter", to_string(got),
                       to_string(named_element("f3")));
  }
}

inline void check_4_2(LemmaReport& rep) {
  // bracket table the filtration argument runs on
  bool table = true;
  for (auto& rc : relation_suite())
    if (rc.claim.rfind("[e0prime,", 0) == 0 && !rc.ok) table = false;
  rep.note_bool("the degree-one bracket table reproduces", table);

  struct Fiber {
    int p, q, r;
    Rational y;
  };
  const Fiber fibers[2] = {{1, 1, 0, Rational(0)}, {0, 1, 1, Rational(1, 2)}};

  // one-step filtration: images stay inside the two allowed blocks
  bool filt = true;
  for (auto& fb : fibers) {
    IrrepF F = build_irrep(fb.p, fb.q, fb.r, fb.y);
    auto ctx = fixed_ctx(F);
    for (int depth = 1; depth <= 6 && filt; ++depth)
      for (const PBW& mono : pbw_monomials(depth)) {
        int m = mono.al[0] + mono.al[1] + mono.al[2];
        int i = std::popcount(unsigned(mono.dm)), j = std::popcount(unsigned(mono.dp));
        if (m > 2 || i > 2 || j > 2) continue;
        for (int f = 0; f < F.dim(); ++f) {
          auto img = act("e0prime", Induced<Rational>::monomial(mono, f), ctx);
          auto ok = filter_terms(img, [&](const PBW& t, int) {
            int tm = t.al[0] + t.al[1] + t.al[2];
            int ti = std::popcount(unsigned(t.dm)), tj = std::popcount(unsigned(t.dp));
            return (tm == m - 1 && ti == i + 1 && tj == j) ||
                   (tm == m && ti == i && tj == j - 1);
          });
          if (!(img == ok)) filt = false;
        }
      }
  }
  rep.note_bool("the degree-one action lowers one block index at a time", filt);

  // reorder inclusion: a plus-first word expands into blocks with both letter
  // counts lowered by the same symmetric shift
  bool reorder = true;
  {
    IrrepF F = build_irrep(1, 1, 0, Rational(0));
    for (unsigned dm = 0; dm < 8; ++dm)
      for (unsigned dp = 0; dp < 8; ++dp) {
        int i = std::popcount(dm), j = std::popcount(dp);
        PBW mono;
        mono.dm = std::uint8_t(dm);
        mono.dp = std::uint8_t(dp);
        for (int f = 0; f < F.dim(); ++f) {
          auto exp = expand_plus_first<Rational>(mono, f);
          for (auto& [key, c] : exp.t) {
            int s = key.first.al[0] + key.first.al[1] + key.first.al[2];
            if (std::popcount(unsigned(key.first.dm)) != i - s ||
                std::popcount(unsigned(key.first.dp)) != j - s)
              reorder = false;
          }
        }
      }
  }
  rep.note_bool("reordering the letter blocks only sheds symmetric pairs into the even block",
                reorder);

  // central eigenvalue bookkeeping per block
  bool yform = true;
  {
    IrrepF F = build_irrep(1, 0, 1, Rational(5, 3));
    for (int depth = 0; depth <= 4; ++depth)
      for (const PBW& mono : pbw_monomials(depth))
        for (int f = 0; f < F.dim(); ++f) {
          int m = mono.al[0] + mono.al[1] + mono.al[2];
          int ij = std::popcount(unsigned(mono.dm)) + std::popcount(unsigned(mono.dp));
          Weight w = pbw_weight(mono, f, F);
          if (!(w.y == F.y - Rational(ij, 3) - Rational(2 * m, 3))) yform = false;
        }
  }
  rep.note_bool("the central eigenvalue drops by a third per letter and two thirds per even "
                "generator",
                yform);
}

inline void check_4_4(LemmaReport& rep) {
  int nmax = int(get_param(rep.parameters, "nmax", 3));
  struct Fiber {
    int p, q, r;
    Rational y;
  };
  const Fiber fibers[2] = {{1, 0, 0, Rational(1)}, {0, 0, 1, Rational(1, 2)}};
  for (auto& fb : fibers) {
    IrrepF F = build_irrep(fb.p, fb.q, fb.r, fb.y);
    auto ctx = fixed_ctx(F);
    bool ok = true;
    for (int n = 1; n <= nmax; ++n)
      for (int k = 1; k <= n && k <= 3; ++k) {
        std::vector<SuperElement> gs;
        enumerate_exponents(3, n, [&](const std::vector<int>& e) {
          Poly5::Key key{e[0], e[1], e[2], 0, 1};
          gs.push_back(field_elem(4, Poly5::monomial(key, 1)));
        });
        for (const PBW& mono : pbw_monomials(2 * (n - k) + 2 * k)) {
          if (mono.al[0] + mono.al[1] + mono.al[2] != n - k) continue;
          if (std::popcount(unsigned(mono.dm)) != k || std::popcount(unsigned(mono.dp)) != k)
            continue;
          for (int f = 0; f < F.dim(); ++f)
            for (auto& g : gs)
              if (!act(g, Induced<Rational>::monomial(mono, f), ctx).is_zero()) ok = false;
        }
      }
    rep.note_bool("x-monomial multiples of x5 dp4 of degree n kill the balanced blocks of "
                      "codegree n on the (" +
                      std::to_string(fb.p) + "," + std::to_string(fb.q) + ";" +
                      std::to_string(fb.r) + ") fiber",
                  ok);
  }
}

inline void check_4_6(LemmaReport& rep) {
  // weights of the mixed letter pairs
  IrrepF F = build_irrep(0, 0, 0, Rational(0));
  std::map<std::pair<long long, long long>, int> mult;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PBW mono;
      mono.dm = std::uint8_t(1u << i);
      mono.dp = std::uint8_t(1u << j);
      Weight w = pbw_weight(mono, 0, F);
      ++mult[{w.a, w.b}];
    }
  const std::map<std::pair<long long, long long>, int> want = {
      {{2, 0}, 1}, {{0, 1}, 2}, {{1, -1}, 2}, {{-2, 2}, 1}, {{-1, 0}, 2}, {{0, -2}, 1}};
  std::string got;
  for (auto& [w, c] : mult)
    got += "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")x" +
           std::to_string(c) + " ";
  std::string exp;
  for (auto& [w, c] : want)
    exp += "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")x" +
           std::to_string(c) + " ";
  rep.note("the six weights of the mixed letter pairs with multiplicities", got, exp);

  // each weight pins the exponent offset: the offset system has the printed
  // six solutions
  const std::pair<std::pair<long long, long long>, std::array<int, 3>> table[6] = {
      {{2, 0}, {-1, 1, 1}}, {{0, 1}, {0, 0, 1}},  {{1, -1}, {0, 1, 0}},
      {{-2, 2}, {1, -1, 1}}, {{-1, 0}, {1, 0, 0}}, {{0, -2}, {1, 1, -1}},
  };
  bool offs = true;
  for (auto& [lam, want_d] : table) {
    // solve -d1+d2 = lam1, -d2+d3 = lam2, d1+d2+d3 = 1 over the integers
    long long num = 1 - lam.first - (lam.first + lam.second);
    if (num % 3 != 0) {
      offs = false;
      continue;
    }
    long long d1 = num / 3;
    std::array<int, 3> d{int(d1), int(d1 + lam.first), int(d1 + lam.first + lam.second)};
    if (d != want_d) offs = false;
  }
  rep.note_bool("the exponent offsets forced by the six weights match the printed list", offs);
}

inline void check_4_7(LemmaReport& rep) {
  int p = int(get_param(rep.parameters, "p", 2));
  int q = int(get_param(rep.parameters, "q", 2));
  IrrepF F = build_irrep(p, q, 0, Rational(0));
  auto ctx = fixed_ctx(F);

  // group the mixed pair block by weight
  std::map<std::pair<long long, long long>, ModBasis> groups;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PBW mono;
      mono.dm = std::uint8_t(1u << i);
      mono.dp = std::uint8_t(1u << j);
      for (int f = 0; f < F.dim(); ++f) {
        Weight w = pbw_weight(mono, f, F);
        groups[{w.a, w.b}].push_back({mono, f});
      }
    }
  const std::pair<std::pair<long long, long long>, int> want[6] = {
      {{2, 0}, 1}, {{0, 1}, 2}, {{1, -1}, 2}, {{-2, 2}, 1}, {{-1, 0}, 2}, {{0, -2}, 1}};
  bool dims = true;
  for (auto& [lam, mult] : want) {
    auto it = groups.find({p + lam.first, q + lam.second});
    if (it == groups.end()) {
      dims = false;
      continue;
    }
    Mat<Rational> A = action_matrix({"e1", "e2"}, it->second, ctx);
    if (int(kernel_basis(A).size()) != mult) dims = false;
  }
  rep.note_bool("the highest multiplicities at the six shifted weights are 1,2,2,1,2,1", dims);

  // the two extreme one-parameter entries have the stated closed forms
  auto in_hw_line = [&](const Induced<Rational>& v) {
    return !v.is_zero() && is_hw_vector(v, ctx);
  };
  Induced<Rational> top;
  {
    PBW mono;
    mono.dm = 1;
    mono.dp = 1;
    top.add_term(mono, F.findex(F.mindex.at(hw_key(p, q)), 0), Rational(1));
  }
  rep.note_bool("the top-weight entry is the paired first letters on the highest vector",
                in_hw_line(top));
  bool bottom_ok = true;
  if (q >= 2) {
    Induced<Rational> bot;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Poly6::Key k = hw_key(p, q - 2);
        k[i] += 1;
        k[j] += 1;
        ModelElement me = ModelElement::monomial(k);
        PBW mono;
        mono.dm = std::uint8_t(1u << i);
        mono.dp = std::uint8_t(1u << j);
        for (auto& [mi, c] : model_expand(F, me)) bot.add_term(mono, F.findex(mi, 0), c);
      }
    bottom_ok = in_hw_line(bot);
  }
  rep.note_bool("the bottom-weight entry is the doubled contraction on the lowered highest "
                "vector",
                bottom_ok);
}

}  // namespace detail

inline LemmaReport verify_lemma(const std::string& id,
                                const std::map<std::string, long long>& params = {}) {
  LemmaReport rep;
  rep.id = id;
  rep.parameters = params;
  if (id == "relations")
    detail::check_relations(rep);
  else if (id == "3.1")
    detail::check_3_1(rep);
  else if (id == "3.2")
    detail::check_3_2(rep);
  else if (id == "3.3")
    detail::check_3_3(rep);
  else if (id == "3.4")
    detail::check_3_4(rep);
  else if (id == "3.5")
    detail::check_3_5(rep);
  else if (id == "3.7")
    detail::check_3_7(rep);
  else if (id == "3.8")
    detail::check_3_8(rep);
  else if (id == "3.10")
    detail::check_3_10(rep);
  else if (id == "3.12")
    detail::check_3_12(rep);
  else if (id == "3.13")
    detail::check_t_kernel(rep, true);
  else if (id == "3.14")
    detail::check_t_kernel(rep, false);
  else if (id == "4.2-filtration")
    detail::check_4_2(rep);
  else if (id == "4.4")
    detail::check_4_4(rep);
  else if (id == "4.6")
    detail::check_4_6(rep);
  else if (id == "4.7")
    detail::check_4_7(rep);
  else
    throw error("unknown lemma id: " + id);
  rep.finalize();
  return rep;
}

inline const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {"relations", "3.1", "3.2",  "3.3",  "3.4", "3.5",
                                               "3.7",       "3.8", "3.10", "3.12", "3.13",
                                               "3.14",      "4.2-filtration", "4.4", "4.6", "4.7"};
  return ids;
}

}  // namespace e36
