#pragma once

// Fraction-free (Bareiss) determinant over an integral domain with exact
// division. Works for IntPoly and RatPoly entries; every interior division
// is exact by the Bareiss identity.

#include "errors.hpp"

#include <utility>
#include <vector>

namespace eigentree {

template <typename Elem>
Elem bareiss_determinant(std::vector<std::vector<Elem>> m) {
  const size_t n = m.size();
  if (n == 0) return Elem();
  for (const auto& row : m) ET_CHECK(row.size() == n, "determinant of non-square matrix");
  int sign = 1;
  Elem prev_pivot = Elem::constant(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Elem(); // zero column, singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Elem num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = Elem::div_exact(num, prev_pivot);
      }
      m[i][k] = Elem();
    }
    prev_pivot = m[k][k];
  }
  Elem det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

} // namespace eigentree
