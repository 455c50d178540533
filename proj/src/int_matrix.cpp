#include "toricsum/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace toricsum {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  if (columns.empty()) throw std::invalid_argument("from_columns: no columns");
  int r = static_cast<int>(columns[0].size());
  int c = static_cast<int>(columns.size());
  IntMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(columns[j].size()) != r)
      throw std::invalid_argument("from_columns: ragged columns");
    for (int i = 0; i < r; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols != other.rows) throw std::invalid_argument("mul: shape mismatch");
  IntMatrix out(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols; ++j) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

Int det_exact(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det_exact: non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          r = i;
          break;
        }
      if (r < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        // exact by the Bareiss identity
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign < 0 ? Int(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

int rank_of(const IntMatrix& m) {
  IntMatrix w = m;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < w.cols && row < w.rows; ++col) {
    int piv = -1;
    for (int i = row; i < w.rows; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(row, j), w.at(piv, j));
    for (int i = row + 1; i < w.rows; ++i) {
      if (w.at(i, col) == 0) continue;
      Int p = w.at(row, col), q = w.at(i, col);
      for (int j = col; j < w.cols; ++j)
        w.at(i, j) = w.at(i, j) * p - w.at(row, j) * q;
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row(IntMatrix& m, int dst, int src, const Int& f) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col(IntMatrix& m, int dst, int src, const Int& f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// true when all entries below and right of the pivot (s,s) are zero
bool pivot_isolated(const IntMatrix& d, int s) {
  for (int i = s + 1; i < d.rows; ++i)
    if (d.at(i, s) != 0) return false;
  for (int j = s + 1; j < d.cols; ++j)
    if (d.at(s, j) != 0) return false;
  return true;
}

bool find_min_nonzero(const IntMatrix& d, int s, int& bi, int& bj) {
  bool found = false;
  Int best;
  for (int i = s; i < d.rows; ++i)
    for (int j = s; j < d.cols; ++j) {
      if (d.at(i, j) == 0) continue;
      Int v = abs(d.at(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        bi = i;
        bj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(m.rows);
  IntMatrix right = IntMatrix::identity(m.cols);
  int nmin = std::min(m.rows, m.cols);

  for (int s = 0; s < nmin; ++s) {
    int bi, bj;
    if (!find_min_nonzero(d, s, bi, bj)) break;  // remaining block is zero
    while (true) {
      find_min_nonzero(d, s, bi, bj);
      swap_rows(d, s, bi);
      swap_rows(left, s, bi);
      swap_cols(d, s, bj);
      swap_cols(right, s, bj);

      for (int i = s + 1; i < d.rows; ++i) {
        if (d.at(i, s) == 0) continue;
        Int q = d.at(i, s) / d.at(s, s);  // truncated; remainder shrinks
        add_row(d, i, s, -q);
        add_row(left, i, s, -q);
      }
      for (int j = s + 1; j < d.cols; ++j) {
        if (d.at(s, j) == 0) continue;
        Int q = d.at(s, j) / d.at(s, s);
        add_col(d, j, s, -q);
        add_col(right, j, s, -q);
      }
      if (!pivot_isolated(d, s)) continue;

      // pivot must divide the trailing block, else absorb an offending row
      int oi = -1, oj = -1;
      for (int i = s + 1; i < d.rows && oi < 0; ++i)
        for (int j = s + 1; j < d.cols; ++j)
          if (d.at(i, j) % d.at(s, s) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) break;
      add_row(d, s, oi, 1);
      add_row(left, s, oi, 1);
    }
    if (d.at(s, s) < 0) {
      negate_row(d, s);
      negate_row(left, s);
    }
  }

  SnfResult res;
  res.diag.resize(nmin);
  for (int i = 0; i < nmin; ++i) res.diag[i] = d.at(i, i);
  res.left = std::move(left);
  res.right = std::move(right);
  return res;
}

}  // namespace toricsum
