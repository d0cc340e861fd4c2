#include "floersut/lp.hpp"

#include <stdexcept>

namespace floersut {

std::optional<std::vector<Rational>> find_nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                               const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("lp: size mismatch");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  const std::size_t width = n + m + 1;  // variables, artificials, rhs
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("lp: ragged matrix");
    const int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = s * b[i];
    basis[i] = n + i;
  }
  auto cost = [&](std::size_t j) { return j >= n ? Rational(1) : Rational(0); };
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j + 1 < width && !entering; ++j) {
      Rational d = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (t[i][j] != 0) d -= cost(basis[i]) * t[i][j];
      if (d < 0) entering = j;
    }
    if (!entering) break;
    const std::size_t j = *entering;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][j] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][j];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded direction cannot occur in phase one
    const std::size_t r = *leave;
    const Rational p = t[r][j];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][j] == 0) continue;
      const Rational f = t[i][j];
      for (std::size_t k = 0; k < width; ++k)
        if (t[r][k] != 0) t[i][k] -= f * t[r][k];
    }
    basis[r] = j;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && t[i][width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace floersut
