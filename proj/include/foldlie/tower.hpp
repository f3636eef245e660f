#pragma once

#include <string>
#include <vector>

#include "foldlie/poly.hpp"

namespace foldlie {

/// Quadratic algebraic constants adjoined to Q as polynomial variables.
///
/// Each generator g satisfies g^2 = c0 + c1 g; reduction rewrites every
/// power g^k with k >= 2 until only g^0 and g^1 remain.
class AlgTower {
 public:
  struct Generator {
    std::string name;
    Rat c0;
    Rat c1;
  };

  AlgTower() = default;
  explicit AlgTower(std::vector<Generator> gens) : gens_(std::move(gens)) {}

  /// i^2 = -1 and r^2 = 2/3.
  static AlgTower appendix();
  /// mu^2 = -1 - mu, a primitive cube root of unity.
  static AlgTower cube_root_of_unity(const std::string& name = "mu");

  const std::vector<Generator>& generators() const { return gens_; }
  MultiPoly reduce(const MultiPoly& p) const;
  /// After reduction no generator occurs.
  bool in_base_field(const MultiPoly& p) const;

 private:
  std::vector<Generator> gens_;
};

}  // namespace foldlie
