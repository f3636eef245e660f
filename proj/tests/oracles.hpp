#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "foldlie/linalg.hpp"

namespace oracle {

using foldlie::Rat;
using foldlie::RatMatrix;

/// Leibniz-formula determinant.
inline Rat leibniz_det(const RatMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rat total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rat t(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n && !t.is_zero(); ++i) t *= m(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Sum of all k x k principal minors.
inline Rat principal_minor_sum(const RatMatrix& m, int k) {
  const int n = static_cast<int>(m.rows());
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  Rat total(0);
  do {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    RatMatrix sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
    total += leibniz_det(sub);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

/// e_k of a list of numbers by subset enumeration.
inline Rat elementary_symmetric(const std::vector<Rat>& xs, int k) {
  const int n = static_cast<int>(xs.size());
  Rat total(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Rat t(1);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) t *= xs[i];
    total += t;
  }
  return total;
}

inline Rat random_rat(std::mt19937_64& rng, int num = 9, int den = 4) {
  std::uniform_int_distribution<int> n(-num, num);
  std::uniform_int_distribution<int> d(1, den);
  return Rat(n(rng), d(rng));
}

inline RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_rat(rng);
  return m;
}

/// Random matrix of prescribed rank, as a product of two random factors.
inline RatMatrix random_rank_matrix(std::mt19937_64& rng, int rows, int cols, int r) {
  return RatMatrix(random_matrix(rng, rows, r) * random_matrix(rng, r, cols));
}

/// Permutations of 0..n-1 as vectors, in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle
