#pragma once

#include "e36/induced.hpp"
#include "e36/linalg.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace e36 {

struct SingularVector {
  int depth = 0;
  Weight weight;
  Induced<Rational> vec;
};

struct SearchResult {
  int p = 0, q = 0, r = 0;
  Rational y;
  int maxDepth = 0;
  std::vector<SingularVector> found;
};

using ModBasis = std::vector<std::pair<PBW, int>>;

// module basis keys at one depth, grouped by (h1,h2,h3)-eigenvalue; the
// central eigenvalue is constant across a depth, so it never splits a group
inline std::map<std::tuple<long long, long long, long long>, ModBasis> weight_groups(
    int depth, const IrrepF& F) {
  std::map<std::tuple<long long, long long, long long>, ModBasis> g;
  for (const PBW& m : pbw_monomials(depth))
    for (int f = 0; f < F.dim(); ++f) {
      Weight w = pbw_weight(m, f, F);
      g[{w.a, w.b, w.r}].push_back({m, f});
    }
  return g;
}

template <class K>
Induced<K> from_coords(const ModBasis& basis, const std::vector<K>& co) {
  Induced<K> v;
  for (size_t j = 0; j < basis.size(); ++j) v.add_term(basis[j].first, basis[j].second, co[j]);
  return v;
}

inline const std::vector<std::string>& singular_ops() {
  static const std::vector<std::string> ops{"e1", "e2", "e3", "e0prime", "e0"};
  return ops;
}

// stacked coordinate matrix of the listed operators on the span of basis;
// rows are indexed by the union of the image supports, per operator
inline Mat<Rational> action_matrix(const std::vector<std::string>& ops, const ModBasis& basis,
                                   const FCtx<Rational>& ctx) {
  int cols = int(basis.size());
  std::vector<std::vector<Induced<Rational>>> images(ops.size());
  std::vector<std::map<std::pair<PBW, int>, int>> rowof(ops.size());
  int rows = 0;
  for (size_t o = 0; o < ops.size(); ++o) {
    const SuperElement& op = named_element(ops[o]);
    for (int j = 0; j < cols; ++j)
      images[o].push_back(act(op, Induced<Rational>::monomial(basis[j].first, basis[j].second), ctx));
    for (auto& img : images[o])
      for (auto& [key, c] : img.t) rowof[o].try_emplace(key, 0);
    for (auto& [key, idx] : rowof[o]) idx = rows++;
  }
  Mat<Rational> M(rows, cols);
  for (size_t o = 0; o < ops.size(); ++o)
    for (int j = 0; j < cols; ++j)
      for (auto& [key, c] : images[o][j].t) M.at(rowof[o].at(key), j) = c;
  return M;
}

// exact kernel of {e1, e2, e3, e0prime, e0} per depth and weight, every
// solution re-verified by direct action before being returned
inline SearchResult singular_search(const IrrepF& F, int maxDepth) {
  if (maxDepth < 1) throw error("maxDepth must be at least 1");
  SearchResult res;
  res.p = F.p;
  res.q = F.q;
  res.r = F.r;
  res.y = F.y;
  res.maxDepth = maxDepth;
  auto ctx = fixed_ctx(F);
  for (int d = 1; d <= maxDepth; ++d)
    for (auto& [wt, basis] : weight_groups(d, F)) {
      Mat<Rational> M = action_matrix(singular_ops(), basis, ctx);
      for (auto& co : kernel_basis(M)) {
        std::vector<Rational> cv = co;
        normalize_primitive(cv);
        Induced<Rational> v = from_coords(basis, cv);
        if (!is_singular_vector(v, ctx)) throw error("kernel vector failed re-verification");
        res.found.push_back({d, *common_weight(v, F), std::move(v)});
      }
    }
  return res;
}

// ---- parametric search: the central weight stays an indeterminate ----

struct GenericVector {
  int depth = 0;
  long long a = 0, b = 0, r = 0;  // weight parts; the central one stays symbolic
  std::map<std::pair<PBW, int>, YPoly> terms;
};

struct YCondition {
  YPoly poly;  // primitive integer coefficients; the zero polynomial means "every y"
  bool roots_complete = true;
  std::map<Rational, std::vector<SingularVector>> roots;  // verified root -> kernel basis
  std::vector<GenericVector> generic;                     // families valid for every y
};

struct ParametricResult {
  int p = 0, q = 0, r = 0;
  int maxDepth = 0;
  std::vector<YCondition> conditions;
};

namespace detail {

template <class K, class IsZero>
std::vector<int> rref_field(Mat<K>& m, IsZero is_zero) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (!is_zero(m.at(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
    K inv = K(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      K f = m.at(r, col);
      if (is_zero(f)) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K, class IsZero>
std::vector<std::vector<K>> kernel_basis_field(Mat<K> m, IsZero is_zero) {
  auto pivots = rref_field(m, is_zero);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : pivots) is_piv[c] = 1;
  std::vector<std::vector<K>> basis;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<K> v(m.cols, K(0));
    v[fc] = K(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m.at(int(pr), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

// column rank of the matrix over Q[y]/(f), f monic squarefree; whenever a
// pivot candidate is a proper zero divisor the modulus splits and both
// branches are handled separately. Factors with deficient column rank are
// appended to `deficient`
inline void rank_mod_split(Mat<YPoly> A, YPoly f, std::vector<YPoly>& deficient) {
  if (f.degree() <= 0) return;
  for (auto& e : A.a) e = divmod(e, f).second;
  int row = 0;
  for (int col = 0; col < A.cols && row < A.rows; ++col) {
    int pr = -1;
    for (int r = row; r < A.rows; ++r) {
      const YPoly& e = A.at(r, col);
      if (e.is_zero()) continue;
      YPoly g = gcd(e, f);
      if (g.degree() == 0) {
        pr = r;
        break;
      }
      rank_mod_split(A, g, deficient);
      rank_mod_split(A, div_exact(f, g), deficient);
      return;
    }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < A.cols; ++c) std::swap(A.at(pr, c), A.at(row, c));
    YPoly inv = ext_gcd_mod(A.at(row, col), f).second;
    for (int c = col; c < A.cols; ++c) A.at(row, c) = divmod(A.at(row, c) * inv, f).second;
    for (int r = row + 1; r < A.rows; ++r) {
      YPoly fac = A.at(r, col);
      if (fac.is_zero()) continue;
      for (int c = col; c < A.cols; ++c)
        A.at(r, c) = divmod(A.at(r, c) - fac * A.at(row, c), f).second;
    }
    ++row;
  }
  if (row < A.cols) deficient.push_back(f);
}

inline void normalize_generic(std::map<std::pair<PBW, int>, YPoly>& terms) {
  if (terms.empty()) return;
  YPoly g;
  for (auto& [k, v] : terms) g = g.is_zero() ? monic(v) : gcd(g, v);
  if (g.degree() > 0)
    for (auto& [k, v] : terms) v = div_exact(v, g);
  Int l = 1, n = 0;
  for (auto& [k, v] : terms)
    for (auto& co : v.c)
      if (co != 0) {
        l = boost::multiprecision::lcm(l, denominator(co));
        n = boost::multiprecision::gcd(n, numerator(co));
      }
  Rational s(l, n == 0 ? Int(1) : n);
  if (terms.begin()->second.lead() * s < 0) s = -s;
  for (auto& [k, v] : terms) v = v * s;
}

}  // namespace detail

// the exact set of central weights admitting singular vectors up to maxDepth.
// Stage one solves the weight-independent equations over Q; stage two
// eliminates the remaining system, whose entries are affine in the weight,
// fraction-free over the polynomial ring. Rational roots of the resulting
// minor are confirmed or discarded by specialization; the root-free cofactor
// is tested for genuine rank drop over Q[y] modulo each of its factors
inline ParametricResult parametric_y_search(int p, int q, int r, int maxDepth) {
  if (maxDepth < 1) throw error("maxDepth must be at least 1");
  IrrepF F = build_irrep(p, q, r, Rational(0));
  auto ctxQ = fixed_ctx(F);
  auto ctxY = parametric_ctx(F);
  const SuperElement& e0 = named_element("e0");
  std::map<YPoly, YCondition> merged;
  auto condition_for = [&](const YPoly& poly) -> YCondition& {
    auto [it, fresh] = merged.try_emplace(poly);
    if (fresh) it->second.poly = poly;
    return it->second;
  };

  for (int d = 1; d <= maxDepth; ++d)
    for (auto& [wt, basis] : weight_groups(d, F)) {
      Mat<Rational> R = action_matrix({"e1", "e2", "e3", "e0prime"}, basis, ctxQ);
      auto kb = kernel_basis(R);
      if (kb.empty()) continue;
      int dimK = int(kb.size());
      for (auto& v : kb) normalize_primitive(v);

      // e0 images of the stage-one kernel, coefficients affine in y
      std::vector<Induced<YPoly>> imgs;
      std::map<std::pair<PBW, int>, int> rowof;
      for (auto& co : kb) {
        std::vector<YPoly> cy;
        for (auto& c : co) cy.push_back(YPoly(c));
        imgs.push_back(act(e0, from_coords(basis, cy), ctxY));
      }
      for (auto& img : imgs)
        for (auto& [key, c] : img.t) rowof.try_emplace(key, 0);
      int rows = 0;
      for (auto& [key, idx] : rowof) idx = rows++;
      Mat<YPoly> A(rows, dimK);
      for (int j = 0; j < dimK; ++j)
        for (auto& [key, c] : imgs[j].t) A.at(rowof.at(key), j) = c;

      Mat<YPoly> B = A;
      std::vector<YPoly> pivots;
      int rk = bareiss(
          B, [](const YPoly& x) { return x.is_zero(); },
          [](const YPoly& a, const YPoly& b) { return div_exact(a, b); }, &pivots);

      if (rk == dimK) {
        YPoly P = int_primitive(pivots.back());
        if (P.degree() <= 0) continue;  // the minor never vanishes
        RootSplit split = extract_rational_roots(P);
        for (const Rational& y0 : split.roots) {
          IrrepF Fy = build_irrep(p, q, r, y0);
          auto ctxF = fixed_ctx(Fy);
          Mat<Rational> Mfull = action_matrix(singular_ops(), basis, ctxF);
          auto roots_kb = kernel_basis(Mfull);
          if (roots_kb.empty()) continue;  // spurious root of this particular minor
          YPoly lin;
          lin.c = {-y0, Rational(1)};
          YCondition& cond = condition_for(int_primitive(lin));
          cond.roots_complete = cond.roots_complete && split.complete;
          auto& vecs = cond.roots[y0];
          for (auto& co : roots_kb) {
            std::vector<Rational> cv = co;
            normalize_primitive(cv);
            Induced<Rational> v = from_coords(basis, cv);
            if (!is_singular_vector(v, ctxF)) throw error("kernel vector failed re-verification");
            vecs.push_back({d, *common_weight(v, Fy), std::move(v)});
          }
        }
        YPoly rem = split.remainder;
        if (rem.degree() >= 1) {
          std::vector<YPoly> deficient;
          detail::rank_mod_split(A, squarefree_part(rem), deficient);
          for (auto& fct : deficient) {
            YCondition& cond = condition_for(int_primitive(fct));
            cond.roots_complete = cond.roots_complete && split.complete;
          }
        }
      } else {
        // a kernel exists for every value of the weight
        YCondition& cond = condition_for(YPoly());
        auto gen = detail::kernel_basis_field(
            [&] {
              Mat<RatFn> Af(A.rows, A.cols);
              for (size_t i = 0; i < A.a.size(); ++i) Af.a[i] = RatFn(A.a[i]);
              return Af;
            }(),
            [](const RatFn& x) { return x.is_zero(); });
        auto [wa, wb, wr] = wt;
        for (auto& co : gen) {
          // clear denominators, then combine with the stage-one kernel
          YPoly l(1);
          for (auto& c : co)
            if (!c.is_zero()) l = div_exact(l * c.den, gcd(l, c.den));
          GenericVector gv;
          gv.depth = d;
          gv.a = wa;
          gv.b = wb;
          gv.r = wr;
          for (int j = 0; j < dimK; ++j) {
            if (co[j].is_zero()) continue;
            YPoly cj = co[j].num * div_exact(l, co[j].den);
            for (size_t t = 0; t < basis.size(); ++t) {
              if (kb[j][t] == 0) continue;
              auto key = basis[t];
              auto [it, fresh] = gv.terms.try_emplace(key, YPoly());
              it->second = it->second + cj * kb[j][t];
              if (it->second.is_zero()) gv.terms.erase(it);
            }
          }
          detail::normalize_generic(gv.terms);
          cond.generic.push_back(std::move(gv));
        }
      }
    }

  ParametricResult res;
  res.p = p;
  res.q = q;
  res.r = r;
  res.maxDepth = maxDepth;
  for (auto& [poly, cond] : merged) res.conditions.push_back(cond);
  return res;
}

struct ScanRow {
  int p = 0, q = 0, r = 0;
  ParametricResult result;
};

// runs the parametric search over the whole (p, q, r) box, rows sorted
// lexicographically; lower bounds default to 1 so the box matches the
// degeneracy statement, and can be dropped to 0 to include boundary cases
inline std::vector<ScanRow> theorem41_scan(int pmax, int qmax, std::vector<int> rlist,
                                           int maxDepth, int pmin = 1, int qmin = 1) {
  if (pmin < 0 || qmin < 0 || pmax < pmin || qmax < qmin) throw error("bad scan bounds");
  std::sort(rlist.begin(), rlist.end());
  rlist.erase(std::unique(rlist.begin(), rlist.end()), rlist.end());
  std::vector<ScanRow> rows;
  for (int p = pmin; p <= pmax; ++p)
    for (int q = qmin; q <= qmax; ++q)
      for (int r : rlist) rows.push_back({p, q, r, parametric_y_search(p, q, r, maxDepth)});
  return rows;
}

}  // namespace e36
