#pragma once

#include <utility>
#include <vector>

namespace e36 {

// sorts v ascending, returns the sign of the sorting permutation, 0 on repeats
inline int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
    }
  return sign;
}

inline int perm_sign(std::vector<int> v) { return sort_sign(v); }

// sign of (i,j,k,l,m) as a permutation of (1..5), 0 unless it is one
inline int eps5(int i, int j, int k, int l, int m) {
  std::vector<int> v{i, j, k, l, m};
  for (int x : v)
    if (x < 1 || x > 5) return 0;
  return sort_sign(v);
}

}  // namespace e36
