#pragma once

#include <vector>

#include "helly/rational.hpp"

namespace helly {

struct Pm1Solution {
  std::vector<Rational> x;
  Rational determinant;
  // Every reduced denominator of x divides n!.
  bool denominators_divide_factorial = true;
};

// Solves A x = y exactly for a square matrix with entries in {-1, 0, 1} and
// an integer right-hand side. Throws on a singular or malformed system.
Pm1Solution solve_pm1_system(const std::vector<std::vector<int>>& a, const std::vector<long>& y);

}  // namespace helly
