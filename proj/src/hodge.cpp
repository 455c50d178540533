#include "toricsum/hodge.hpp"

#include <algorithm>
#include <set>

#include "toricsum/int_matrix.hpp"
#include "toricsum/linalg.hpp"
#include "toricsum/lp.hpp"

namespace toricsum {

namespace {

std::vector<IntVec> nonzero_vertices(const Polytope& p) {
  std::vector<IntVec> out;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    if (static_cast<int>(i) != p.originIndex) out.push_back(p.vertices[i]);
  return out;
}

}  // namespace

Weight weight(const Polytope& p, const IntVec& u) {
  if (!p.full_dimensional())
    throw std::domain_error("weight: polytope must be full-dimensional");
  std::vector<IntVec> gens = nonzero_vertices(p);
  int m = static_cast<int>(gens.size());
  LpProblem prob;
  prob.a.assign(p.n, RatVec(m, Rat(0)));
  prob.b.assign(p.n, Rat(0));
  prob.cost.assign(m, Rat(1));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < p.n; ++i) prob.a[i][j] = Rat(gens[j][i]);
  for (int i = 0; i < p.n; ++i) prob.b[i] = Rat(u[i]);
  LpResult res = lp_solve(prob);
  if (res.status == LpStatus::Infeasible) return Weight::infinite();
  if (res.status != LpStatus::Optimal)
    throw ConsistencyError("weight LP cannot be unbounded");
  return Weight::of(res.value);
}

Weight weight_by_facets(const Polytope& p, const IntVec& u) {
  for (const HomogeneousForm& g : p.facets_through_origin()) {
    Int s = 0;
    for (int j = 0; j < p.n; ++j) s += g.coeffs[j] * u[j];
    if (s > 0) return Weight::infinite();
  }
  Rat best(0);
  for (const FacetForm& f : p.facets_off_origin()) {
    Rat v = dot(f.coeffs, u);
    if (v > best) best = v;
  }
  return Weight::of(best);
}

namespace {

// Facet-form weight with LP confirmation whenever the fast route claims the
// target value; the two routes agreeing is a standing invariant.
bool has_weight(const Polytope& p, const IntVec& u, const Rat& target) {
  Weight fast = weight_by_facets(p, u);
  if (!fast.finite() || *fast.value != target) return false;
  Weight exact = weight(p, u);
  if (!exact.finite() || *exact.value != target)
    throw ConsistencyError("facet-form weight disagrees with the LP weight");
  return true;
}

}  // namespace

WeightCount count_weight_k_box(const Polytope& p, long k) {
  if (k < 0) throw std::invalid_argument("count_weight_k: k must be >= 0");
  Int d = p.denominator();
  Rat target = make_rat(Int(k), d);
  if (k == 0) {
    // the origin is the unique point of weight 0 (pointed or not, 0*Delta={0})
    WeightCount wc;
    wc.count = 1;
    wc.points.push_back(IntVec(p.n, Int(0)));
    return wc;
  }

  // Outward-rounded coordinate box of (k/D)*Delta.
  std::vector<Int> lo(p.n), hi(p.n);
  for (int j = 0; j < p.n; ++j) {
    Int mn = p.vertices[0][j], mx = p.vertices[0][j];
    for (const IntVec& v : p.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    Rat l = target * Rat(mn), h = target * Rat(mx);
    mpz_fdiv_q(lo[j].get_mpz_t(), l.get_num().get_mpz_t(), l.get_den().get_mpz_t());
    mpz_cdiv_q(hi[j].get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
  }

  WeightCount wc;
  IntVec u = lo;
  while (true) {
    if (has_weight(p, u, target)) {
      wc.points.push_back(u);
      ++wc.count;
    }
    int j = 0;
    while (j < p.n) {
      ++u[j];
      if (u[j] <= hi[j]) break;
      u[j] = lo[j];
      ++j;
    }
    if (j == p.n) break;
  }
  return wc;
}

bool pyramid_count_available(const Polytope& p) {
  if (!p.full_dimensional()) return false;
  const auto& vsets = p.facet_vertex_sets_off_origin();
  for (const std::set<int>& vs : vsets) {
    if (static_cast<int>(vs.size()) != p.n) return false;
    std::vector<IntVec> cols;
    for (int i : vs) cols.push_back(p.vertices[i]);
    if (abs(det_exact(IntMatrix::from_columns(cols))) != 1) return false;
  }
  return true;
}

WeightCount count_weight_k_pyramid(const Polytope& p, long k) {
  if (k < 0) throw std::invalid_argument("count_weight_k: k must be >= 0");
  if (!pyramid_count_available(p))
    throw std::domain_error(
        "pyramid counting requires every off-origin facet to be a unimodular "
        "simplex");
  std::set<IntVec> pts;
  // Degree-k non-negative combinations of each facet's vertices, deduplicated.
  for (const std::set<int>& vs : p.facet_vertex_sets_off_origin()) {
    std::vector<IntVec> gens;
    for (int i : vs) gens.push_back(p.vertices[i]);
    // enumerate weak compositions of k into |gens| parts, colex order
    std::vector<long> c(gens.size(), 0);
    c[0] = k;
    while (true) {
      IntVec u(p.n, Int(0));
      for (size_t j = 0; j < gens.size(); ++j)
        for (int i = 0; i < p.n; ++i) u[i] += Int(c[j]) * gens[j][i];
      pts.insert(std::move(u));
      if (c.back() == k) break;
      size_t i = 0;
      while (c[i] == 0) ++i;
      long v = c[i];
      c[i] = 0;
      c[i + 1] += 1;
      c[0] = v - 1;
    }
  }
  WeightCount wc;
  wc.count = static_cast<long>(pts.size());
  wc.points.assign(pts.begin(), pts.end());
  return wc;
}

WeightCount count_weight_k(const Polytope& p, long k) {
  return pyramid_count_available(p) ? count_weight_k_pyramid(p, k)
                                    : count_weight_k_box(p, k);
}

std::vector<Int> weight_counts_upto(const Polytope& p, long kmax) {
  std::vector<Int> w;
  bool pyramid = pyramid_count_available(p);
  for (long k = 0; k <= kmax; ++k) {
    WeightCount wc = pyramid ? count_weight_k_pyramid(p, k)
                             : count_weight_k_box(p, k);
    w.push_back(Int(wc.count));
  }
  return w;
}

std::vector<Int> hodge_numbers_from_counts(const std::vector<Int>& w, int n,
                                           const Int& d) {
  long nd = to_long(Int(n) * d);
  if (static_cast<long>(w.size()) < nd + 1)
    throw std::invalid_argument("hodge_numbers: need W through k = n*D");
  std::vector<Int> h(nd + 1);
  long dl = to_long(d);
  for (long k = 0; k <= nd; ++k) {
    Int acc = 0;
    for (int i = 0; i <= n; ++i) {
      long idx = k - i * dl;
      if (idx < 0) continue;
      Int term = binomial(n, i) * w[idx];
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (acc < 0)
      throw ConsistencyError("negative Hodge number at k = " +
                             std::to_string(k) + " (weight miscount)");
    h[k] = acc;
  }
  return h;
}

std::vector<Int> hodge_numbers(const Polytope& p) {
  Int d = p.denominator();
  long nd = to_long(Int(p.n) * d);
  return hodge_numbers_from_counts(weight_counts_upto(p, nd), p.n, d);
}

std::vector<Int> inverse_hodge_transform(const std::vector<Int>& h, int n,
                                         const Int& d, long kmax) {
  std::vector<Int> w(kmax + 1, Int(0));
  long dl = to_long(d);
  for (long k = 0; k <= kmax; ++k) {
    Int acc = 0;
    for (long i = 0; k - i * dl >= 0; ++i) {
      long idx = k - i * dl;
      if (idx < static_cast<long>(h.size()))
        acc += binomial(n - 1 + i, i) * h[idx];
    }
    w[k] = acc;
  }
  return w;
}

HodgePolygon hodge_polygon_from_numbers(const std::vector<Int>& h, const Int& d) {
  HodgePolygon hp;
  hp.vertices.push_back(PolygonPoint{Rat(0), Rat(0)});
  Rat x(0), y(0);
  long nd = static_cast<long>(h.size()) - 1;
  std::vector<PolygonPoint> qk(nd + 1);
  for (long k = 0; k <= nd; ++k) {
    x += Rat(h[k]);
    y += Rat(Int(k) * h[k], d);
    y.canonicalize();
    qk[k] = PolygonPoint{x, y};
    if (h[k] != 0) hp.vertices.push_back(qk[k]);
  }
  for (long k = 1; k + 1 <= nd; ++k)
    if (h[k + 1] != 0) hp.breakPoints.push_back(qk[k]);
  return hp;
}

HodgePolygon hodge_polygon(const Polytope& p) {
  return hodge_polygon_from_numbers(hodge_numbers(p), p.denominator());
}

std::vector<PolygonPoint> chain_polygon(const Polytope& p, long kmax) {
  std::vector<Int> w = weight_counts_upto(p, kmax);
  Int d = p.denominator();
  std::vector<PolygonPoint> out;
  out.push_back(PolygonPoint{Rat(0), Rat(0)});
  Rat x(0), y(0);
  for (long k = 0; k <= kmax; ++k) {
    x += Rat(w[k]);
    y += Rat(Int(k) * w[k], d);
    y.canonicalize();
    out.push_back(PolygonPoint{x, y});
  }
  return out;
}

Int lfunction_degree(const Polytope& p) { return p.normalized_volume(); }

HodgeData hodge_data(const Polytope& p) {
  HodgeData hd;
  hd.denominator = p.denominator();
  long nd = to_long(Int(p.n) * hd.denominator);
  hd.weightCounts = weight_counts_upto(p, nd);
  hd.hodgeNumbers = hodge_numbers_from_counts(hd.weightCounts, p.n, hd.denominator);
  hd.polygon = hodge_polygon_from_numbers(hd.hodgeNumbers, hd.denominator);
  hd.chainVertices = chain_polygon(p, nd);
  hd.degree = lfunction_degree(p);
  Int sum = 0;
  for (const Int& h : hd.hodgeNumbers) sum += h;
  if (sum != hd.degree)
    throw ConsistencyError("sum of Hodge numbers != n! Vol");
  return hd;
}

}  // namespace toricsum
