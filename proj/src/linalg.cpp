#include "toricsum/linalg.hpp"

#include <algorithm>

namespace toricsum {

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    Rat inv = m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RatVec> kernel_basis(const RatMatrix& m_in) {
  RatMatrix m = m_in;
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (int freeCol = 0; freeCol < cols; ++freeCol) {
    if (is_pivot[freeCol]) continue;
    RatVec v(cols, Rat(0));
    v[freeCol] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][freeCol];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& rhs) {
  if (m.size() != rhs.size()) throw std::invalid_argument("solve_linear: shape");
  if (m.empty()) return RatVec{};
  int cols = static_cast<int>(m[0].size());
  RatMatrix aug = m;
  for (size_t i = 0; i < m.size(); ++i) aug[i].push_back(rhs[i]);
  std::vector<int> pivots = rref(aug);
  // inconsistent iff a pivot lands in the rhs column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

}  // namespace toricsum
