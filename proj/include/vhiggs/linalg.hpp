#pragma once

// Gaussian elimination over an exact field.

#include <vector>

namespace vhiggs {

template <class F>
using DenseMatrix = std::vector<std::vector<F>>;

/// Rank of a (possibly ragged-free) row-major matrix over the field F.
template <class F>
size_t rank(DenseMatrix<F> a) {
  if (a.empty()) return 0;
  const size_t rows = a.size();
  const size_t cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && a[sel][c] == F(0)) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    const F inv = F(1) / a[r][c];
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == F(0)) continue;
      const F f = a[i][c] * inv;
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace vhiggs
