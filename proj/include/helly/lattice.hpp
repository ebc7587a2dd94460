#pragma once

#include <optional>
#include <vector>

#include "helly/rational.hpp"

namespace helly {

// Automorphism x -> P x + shift of the king lattice Z^n (l-infinity metric),
// with (P x)_i = signs[i] * x[perm[i]]. perm is 0-based.
struct AffineAutomorphism {
  std::vector<int> perm;
  std::vector<int> signs;
  std::vector<long> shift;

  int dim() const { return static_cast<int>(perm.size()); }
};

// Throws on mismatched lengths, a non-bijective perm or signs outside {-1, 1}.
void validate(const AffineAutomorphism& a);

std::vector<Rational> act(const AffineAutomorphism& a, const std::vector<Rational>& x);
std::vector<long> act(const AffineAutomorphism& a, const std::vector<long>& x);

AffineAutomorphism compose_power(const AffineAutomorphism& a, int exponent);

Rational linf_distance(const std::vector<Rational>& x, const std::vector<Rational>& y);

// Order of the signed permutation P.
long linear_order(const AffineAutomorphism& a);

// Asymptotic displacement: the maximum over cycles of P of |net drift| /
// cycle length, cycles with sign product -1 contributing zero.
Rational affine_translation_length(const AffineAutomorphism& a);

// d(0, a^n 0) / n for n = 1..n_max, by iterating the action.
std::vector<Rational> affine_length_estimate(const AffineAutomorphism& a, int n_max);

struct LatticeAxis {
  std::vector<Rational> point;  // coordinates in (1/(2 N!))Z
  int exponent = 1;             // a
  Rational length;              // d(x, a^exponent x)
  Rational translation_length;
  long steps = 0;  // length in edges of the level-N grid
};

// A level-N grid point x and the least exponent a <= 2N with
// d(x, g^{a n} x) = n * a * tau for n = 1..3. Throws on elliptic input;
// empty when no grid point is found.
std::optional<LatticeAxis> lattice_axis_vertex(const AffineAutomorphism& a, int level);

}  // namespace helly
