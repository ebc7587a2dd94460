#include "helly/linear.hpp"

#include <utility>

#include "helly/error.hpp"

namespace helly {

Pm1Solution solve_pm1_system(const std::vector<std::vector<int>>& a, const std::vector<long>& y) {
  const std::size_t n = a.size();
  if (n == 0) throw Error("solve_pm1_system: empty matrix");
  if (y.size() != n) throw Error("solve_pm1_system: right-hand side has the wrong length");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error("solve_pm1_system: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] < -1 || a[i][j] > 1) throw Error("solve_pm1_system: coefficient outside {-1, 0, 1}");
      m[i][j] = a[i][j];
    }
    m[i][n] = y[i];
  }

  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("solve_pm1_system: matrix is singular");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
    }
  }

  Pm1Solution out;
  out.determinant = det;
  mpz_class fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
  for (std::size_t i = 0; i < n; ++i) {
    Rational xi = m[i][n] / m[i][i];
    xi.canonicalize();
    if (!mpz_divisible_p(fact.get_mpz_t(), xi.get_den_mpz_t())) out.denominators_divide_factorial = false;
    out.x.push_back(std::move(xi));
  }
  return out;
}

}  // namespace helly
