#pragma once

#include <vector>

#include "helly/rational.hpp"

namespace helly {

// Map from vertex index to a rational value; a candidate point of the
// injective hull, realized as a function on the vertex set.
struct MetricFunction {
  std::vector<Rational> values;

  int size() const { return static_cast<int>(values.size()); }
  const Rational& operator[](int v) const { return values[v]; }

  friend bool operator==(const MetricFunction& a, const MetricFunction& b) { return a.values == b.values; }
  // Lexicographic on the value vectors.
  friend bool operator<(const MetricFunction& a, const MetricFunction& b) { return a.values < b.values; }
};

}  // namespace helly
