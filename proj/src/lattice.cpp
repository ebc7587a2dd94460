#include "helly/lattice.hpp"

#include <numeric>

#include "helly/error.hpp"
#include "helly/hull.hpp"

namespace helly {

void validate(const AffineAutomorphism& a) {
  const std::size_t n = a.perm.size();
  if (n == 0) throw Error("affine automorphism of Z^0");
  if (a.signs.size() != n || a.shift.size() != n)
    throw Error("affine automorphism: perm, signs and shift must have the same length");
  std::vector<bool> hit(n, false);
  for (int p : a.perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[p]) throw Error("affine automorphism: perm is not a bijection");
    hit[p] = true;
  }
  for (int s : a.signs)
    if (s != 1 && s != -1) throw Error("affine automorphism: signs must be +1 or -1");
}

std::vector<Rational> act(const AffineAutomorphism& a, const std::vector<Rational>& x) {
  std::vector<Rational> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = a.signs[i] * x[a.perm[i]] + a.shift[i];
  return y;
}

std::vector<long> act(const AffineAutomorphism& a, const std::vector<long>& x) {
  std::vector<long> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = a.signs[i] * x[a.perm[i]] + a.shift[i];
  return y;
}

namespace {

// outer(inner(x)).
AffineAutomorphism compose(const AffineAutomorphism& outer, const AffineAutomorphism& inner) {
  const int n = outer.dim();
  AffineAutomorphism out{std::vector<int>(n), std::vector<int>(n), std::vector<long>(n)};
  for (int i = 0; i < n; ++i) {
    out.perm[i] = inner.perm[outer.perm[i]];
    out.signs[i] = outer.signs[i] * inner.signs[outer.perm[i]];
    out.shift[i] = outer.signs[i] * inner.shift[outer.perm[i]] + outer.shift[i];
  }
  return out;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = static_cast<int>(start); !seen[i]; i = perm[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int sign_product(const AffineAutomorphism& a, const std::vector<int>& cycle) {
  int s = 1;
  for (int i : cycle) s *= a.signs[i];
  return s;
}

}  // namespace

AffineAutomorphism compose_power(const AffineAutomorphism& a, int exponent) {
  validate(a);
  if (exponent < 0) throw Error("compose_power: negative exponent");
  const int n = a.dim();
  AffineAutomorphism out{std::vector<int>(n), std::vector<int>(n, 1), std::vector<long>(n, 0)};
  std::iota(out.perm.begin(), out.perm.end(), 0);
  for (int k = 0; k < exponent; ++k) out = compose(a, out);
  return out;
}

Rational linf_distance(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  if (x.size() != y.size()) throw Error("linf_distance: dimension mismatch");
  Rational best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) best = std::max(best, Rational(abs(x[i] - y[i])));
  return best;
}

long linear_order(const AffineAutomorphism& a) {
  validate(a);
  long order = 1;
  for (const auto& c : cycles_of(a.perm)) {
    long m = static_cast<long>(c.size()) * (sign_product(a, c) < 0 ? 2 : 1);
    order = std::lcm(order, m);
  }
  return order;
}

Rational affine_translation_length(const AffineAutomorphism& a) {
  validate(a);
  Rational best = 0;
  for (const auto& c : cycles_of(a.perm)) {
    if (sign_product(a, c) < 0) continue;
    const long m = static_cast<long>(c.size());
    std::vector<long> x(a.dim(), 0);
    for (long k = 0; k < m; ++k) x = act(a, x);
    best = std::max(best, Rational(make_rational(std::labs(x[c[0]]), m)));
  }
  return best;
}

std::vector<Rational> affine_length_estimate(const AffineAutomorphism& a, int n_max) {
  validate(a);
  if (n_max < 1) throw Error("affine_length_estimate: n_max must be at least 1");
  std::vector<Rational> out;
  const std::vector<Rational> origin(a.dim(), Rational(0));
  std::vector<Rational> x = origin;
  for (int n = 1; n <= n_max; ++n) {
    x = act(a, x);
    out.push_back(linf_distance(origin, x) / n);
  }
  return out;
}

namespace {

// A point x with h x = x + T, T the average translation of h; built cycle by
// cycle from x_{perm(i)} = s_i (x_i + T_i - v_i).
std::vector<Rational> displacement_minimizer(const AffineAutomorphism& h) {
  const int n = h.dim();
  std::vector<Rational> x(n), drift(n);
  for (const auto& c : cycles_of(h.perm)) {
    const int sigma = sign_product(h, c);
    const long m = static_cast<long>(c.size());
    std::vector<long> probe(n, 0);
    for (long k = 0; k < m; ++k) probe = act(h, probe);
    for (int i : c) drift[i] = sigma > 0 ? Rational(make_rational(probe[i], m)) : Rational(0);

    auto walk = [&](Rational start) {
      x[c[0]] = start;
      int i = c[0];
      for (long k = 0; k < m; ++k) {
        Rational next = h.signs[i] * (x[i] + drift[i] - h.shift[i]);
        if (k + 1 == m) return next;
        x[h.perm[i]] = next;
        i = h.perm[i];
      }
      return Rational(0);
    };
    Rational closing = walk(0);
    if (sigma < 0) walk(closing / 2);
  }
  return x;
}

}  // namespace

std::optional<LatticeAxis> lattice_axis_vertex(const AffineAutomorphism& a, int level) {
  validate(a);
  const Rational tau = affine_translation_length(a);
  if (tau == 0) throw Error("no axis: automorphism is elliptic");
  const long res = grid_resolution(level);
  for (int exponent = 1; exponent <= 2 * level; ++exponent) {
    const AffineAutomorphism h = compose_power(a, exponent);
    const std::vector<Rational> x = displacement_minimizer(h);
    bool on_grid = true;
    for (const auto& xi : x) on_grid = on_grid && Rational(xi * res).get_den() == 1;
    if (!on_grid) continue;
    const Rational step = exponent * tau;
    bool axis = true;
    std::vector<Rational> y = x;
    for (int k = 1; k <= 3 && axis; ++k) {
      y = act(h, y);
      axis = linf_distance(x, y) == k * step;
    }
    if (axis) return LatticeAxis{x, exponent, step, tau, Rational(step * res).get_num().get_si()};
  }
  return std::nullopt;
}

}  // namespace helly
