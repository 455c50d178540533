#pragma once

#include <vector>

#include "toricsum/exact.hpp"

namespace toricsum {

// Dense integer matrix, row-major. Small and exact; no attempt at being a
// general linear-algebra package.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
    if (r < 0 || c < 0) throw std::invalid_argument("IntMatrix: negative shape");
  }
  IntMatrix(int r, int c, std::vector<Int> entries)
      : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != static_cast<size_t>(r) * c)
      throw std::invalid_argument("IntMatrix: entry count != rows*cols");
  }

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);
  static IntMatrix from_columns(const std::vector<IntVec>& columns);

  IntMatrix mul(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntMatrix& m);

// Rank over Q, by fraction-free elimination.
int rank_of(const IntMatrix& m);

struct SnfResult {
  std::vector<Int> diag;  // d_1 | d_2 | ..., non-negative, length min(rows, cols)
  IntMatrix left;         // unimodular, rows x rows
  IntMatrix right;        // unimodular, cols x cols
};

// left * m * right = diag(d_1, ..., d_r). Divisibility chain d_i | d_{i+1},
// entries normalized non-negative, zeros trailing.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace toricsum
