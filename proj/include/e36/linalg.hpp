#pragma once

#include "e36/rational.hpp"

#include <utility>
#include <vector>

namespace e36 {

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), K(0)) {}

  K& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const K& at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

// reduced row echelon form over the rationals; returns the pivot columns.
// pivot choice is deterministic: first nonzero column, lowest row index
inline std::vector<int> rref(Mat<Rational>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
    Rational inv = Rational(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      Rational f = m.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat<Rational> m) { return int(rref(m).size()); }

// basis of the right kernel, one vector per free column, in column order
inline std::vector<std::vector<Rational>> kernel_basis(Mat<Rational> m) {
  auto pivots = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[fc] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m.at(int(pr), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

// does b lie in the span of the given vectors (all of length dim)?
inline bool in_span(const std::vector<std::vector<Rational>>& vecs, const std::vector<Rational>& b) {
  int dim = int(b.size());
  Mat<Rational> a(dim, int(vecs.size()));
  Mat<Rational> aug(dim, int(vecs.size()) + 1);
  for (int c = 0; c < int(vecs.size()); ++c)
    for (int r = 0; r < dim; ++r) {
      a.at(r, c) = vecs[c][r];
      aug.at(r, c) = vecs[c][r];
    }
  for (int r = 0; r < dim; ++r) aug.at(r, int(vecs.size())) = b[r];
  return rank(std::move(a)) == rank(std::move(aug));
}

// fraction-free elimination over an integral domain. div(a, b) must return the
// exact quotient. Returns the generic rank; each recorded pivot is a true
// (k+1)x(k+1) minor of the input matrix, so the last one witnesses the rank
template <class K, class IsZero, class Div>
int bareiss(Mat<K>& m, IsZero is_zero, Div div, std::vector<K>* pivots = nullptr) {
  K prev = K(1);
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
    const K piv = m.at(row, col);
    for (int r = row + 1; r < m.rows; ++r) {
      for (int c = col + 1; c < m.cols; ++c)
        m.at(r, c) = div(piv * m.at(r, c) - m.at(r, col) * m.at(row, c), prev);
      m.at(r, col) = K(0);
    }
    if (pivots) pivots->push_back(piv);
    prev = piv;
    ++row;
  }
  return row;
}

}  // namespace e36
