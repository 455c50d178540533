#pragma once

#include <optional>
#include <vector>

#include "toricsum/polytope.hpp"

namespace toricsum {

// Weight of a lattice point: the smallest c >= 0 with u in c*Delta, or
// infinite off the cone spanned by the polytope.
struct Weight {
  std::optional<Rat> value;  // nullopt = infinite

  bool finite() const { return value.has_value(); }
  static Weight infinite() { return Weight{std::nullopt}; }
  static Weight of(Rat v) { return Weight{std::move(v)}; }
  bool operator==(const Weight&) const = default;
};

// Weight via the exact LP over the nonzero vertices (the primary route).
Weight weight(const Polytope& p, const IntVec& u);

// Weight as max of the off-origin facet forms, with cone-membership decided
// by the through-origin forms. Used to cross-check the LP route; the two
// must always agree, and any disagreement is raised as a ConsistencyError
// by the counting code below.
Weight weight_by_facets(const Polytope& p, const IntVec& u);

struct WeightCount {
  long count = 0;
  std::vector<IntVec> points;
};

// Strategy A: enumerate the integer points of the bounding box of
// (k/D)*Delta and keep those of weight exactly k/D.
WeightCount count_weight_k_box(const Polytope& p, long k);

// Strategy B: per-facet enumeration of degree-k vertex combinations with
// set-union dedup; available when every off-origin facet is a unimodular
// simplex.
bool pyramid_count_available(const Polytope& p);
WeightCount count_weight_k_pyramid(const Polytope& p, long k);

// Picks strategy B when available, A otherwise.
WeightCount count_weight_k(const Polytope& p, long k);

// W(0..kmax) as plain counts.
std::vector<Int> weight_counts_upto(const Polytope& p, long kmax);

// Alternating binomial transform of W, k = 0..n*D. Throws ConsistencyError
// on a negative value (which would indicate a miscount).
std::vector<Int> hodge_numbers(const Polytope& p);
std::vector<Int> hodge_numbers_from_counts(const std::vector<Int>& w, int n, const Int& d);

// Inverse of the transform; reproduces W from H up to the given k.
std::vector<Int> inverse_hodge_transform(const std::vector<Int>& h, int n,
                                         const Int& d, long kmax);

struct PolygonPoint {
  Rat x, y;
  bool operator==(const PolygonPoint&) const = default;
};

struct HodgePolygon {
  std::vector<PolygonPoint> vertices;     // (0,0) then the distinct Q_k
  std::vector<PolygonPoint> breakPoints;  // Q_k with H(k+1) != 0, 1 <= k < nD
};

HodgePolygon hodge_polygon(const Polytope& p);
HodgePolygon hodge_polygon_from_numbers(const std::vector<Int>& h, const Int& d);

// Chain-level polygon: (0,0) then cumulative (sum W, sum m*W/D) for k <= kmax.
std::vector<PolygonPoint> chain_polygon(const Polytope& p, long kmax);

// Degree of the L-function of a non-degenerate polynomial with this
// polyhedron: n! Vol.
Int lfunction_degree(const Polytope& p);

struct HodgeData {
  Int denominator;
  std::vector<Int> weightCounts;  // W(0..nD)
  std::vector<Int> hodgeNumbers;  // H(0..nD)
  HodgePolygon polygon;
  std::vector<PolygonPoint> chainVertices;
  Int degree;
};

HodgeData hodge_data(const Polytope& p);

}  // namespace toricsum
