#pragma once

// Dense exact linear algebra over cyclotomic numbers.

#include <cstddef>
#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

using CycMatrix = std::vector<std::vector<CyclotomicNumber>>;

/// In-place reduction to reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(CycMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    CyclotomicNumber inv = a[r][c].inverse();
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      CyclotomicNumber f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(CycMatrix a) { return row_reduce(a).size(); }

}  // namespace mckay
