#pragma once

#include <random>
#include <vector>

#include "foldlie/linalg.hpp"

namespace foldlie {

using Rng = std::mt19937_64;

/// Numerator in [-9, 9], denominator in [1, 4].
inline Rat random_rat(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  return Rat(num(rng), den(rng));
}

inline RatVector random_vector(Rng& rng, int n) {
  RatVector v(n);
  for (int i = 0; i < n; ++i) v(i) = random_rat(rng);
  return v;
}

inline std::vector<Rat> random_point(Rng& rng, int n) {
  std::vector<Rat> v;
  for (int i = 0; i < n; ++i) v.push_back(random_rat(rng));
  return v;
}

inline int random_index(Rng& rng, std::size_t n) {
  return static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

}  // namespace foldlie
