// Exact rational linear algebra, sized for the pattern chains and path
// matrices here (a few hundred rows at most).
#ifndef FPL_LINALG_HPP_
#define FPL_LINALG_HPP_

#include <fpl/common.hpp>

namespace fpl {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational det_rational(RationalMatrix m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0)
        continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Solves A x = b; A must be square and nonsingular.
inline std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b) {
  size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      throw std::logic_error("solve_linear: singular matrix");
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(b[p], b[c]);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k)
        a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i)
    x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace fpl

#endif
