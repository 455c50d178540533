#include "toricsum/lp.hpp"

#include <algorithm>

namespace toricsum {

namespace {

// Full-tableau simplex state. Column layout: variables 0..ncols-1, then the
// right-hand side. The objective row carries reduced costs and -(value).
struct Tableau {
  int m;
  int ncols;
  std::vector<RatVec> row;  // m rows of length ncols+1
  RatVec obj;               // length ncols+1
  std::vector<int> basis;   // basis[i] = column basic in row i

  Rat& rhs(int i) { return row[i][ncols]; }

  void pivot(int pr, int pc) {
    Rat inv = row[pr][pc];
    for (int j = 0; j <= ncols; ++j) row[pr][j] /= inv;
    for (int i = 0; i < m; ++i) {
      if (i == pr || row[i][pc] == 0) continue;
      Rat f = row[i][pc];
      for (int j = 0; j <= ncols; ++j) row[i][j] -= f * row[pr][j];
    }
    if (obj[pc] != 0) {
      Rat f = obj[pc];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * row[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland: entering = lowest-index negative reduced cost; leaving = lowest
  // basic index among the minimum-ratio rows. Returns Optimal or Unbounded.
  LpStatus run() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (row[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / row[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_solve(const LpProblem& prob) {
  int m = static_cast<int>(prob.a.size());
  int nv = static_cast<int>(prob.cost.size());
  if (static_cast<int>(prob.b.size()) != m)
    throw std::invalid_argument("lp_solve: rhs length != row count");
  for (const auto& r : prob.a)
    if (static_cast<int>(r.size()) != nv)
      throw std::invalid_argument("lp_solve: row length != cost length");

  // Phase 1: artificial basis, minimize the sum of artificials.
  Tableau t;
  t.m = m;
  t.ncols = nv + m;
  t.row.assign(m, RatVec(t.ncols + 1, Rat(0)));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool neg = prob.b[i] < 0;
    for (int j = 0; j < nv; ++j) t.row[i][j] = neg ? -prob.a[i][j] : prob.a[i][j];
    t.row[i][nv + i] = 1;
    t.row[i][t.ncols] = neg ? -prob.b[i] : prob.b[i];
    t.basis[i] = nv + i;
  }
  t.obj.assign(t.ncols + 1, Rat(0));
  for (int j = 0; j < nv; ++j) {
    Rat s;
    for (int i = 0; i < m; ++i) s += t.row[i][j];
    t.obj[j] = -s;
  }
  {
    Rat s;
    for (int i = 0; i < m; ++i) s += t.rhs(i);
    t.obj[t.ncols] = -s;
  }
  LpStatus st = t.run();
  (void)st;  // phase 1 is bounded below by 0
  Rat phase1 = -t.obj[t.ncols];
  if (phase1 != 0) return LpResult{LpStatus::Infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; drop redundant rows.
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < nv) {
      keep.push_back(i);
      continue;
    }
    int col = -1;
    for (int j = 0; j < nv; ++j)
      if (t.row[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      t.pivot(i, col);
      keep.push_back(i);
    }
    // else: zero row, redundant constraint
  }
  Tableau t2;
  t2.m = static_cast<int>(keep.size());
  t2.ncols = nv;
  t2.row.reserve(keep.size());
  t2.basis.reserve(keep.size());
  for (int i : keep) {
    RatVec r(t.row[i].begin(), t.row[i].begin() + nv);
    r.push_back(t.rhs(i));
    t2.row.push_back(std::move(r));
    t2.basis.push_back(t.basis[i]);
  }

  // Phase 2 objective from the real costs.
  t2.obj.assign(nv + 1, Rat(0));
  for (int j = 0; j < nv; ++j) {
    Rat s = prob.cost[j];
    for (int i = 0; i < t2.m; ++i) s -= prob.cost[t2.basis[i]] * t2.row[i][j];
    t2.obj[j] = s;
  }
  {
    Rat s;
    for (int i = 0; i < t2.m; ++i) s += prob.cost[t2.basis[i]] * t2.rhs(i);
    t2.obj[nv] = -s;
  }
  st = t2.run();
  if (st == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded, Rat(0), {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.witness.assign(nv, Rat(0));
  for (int i = 0; i < t2.m; ++i) res.witness[t2.basis[i]] = t2.rhs(i);
  res.value = -t2.obj[nv];
  return res;
}

}  // namespace toricsum
