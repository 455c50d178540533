#include "toricsum/polytope.hpp"

#include <algorithm>
#include <map>

#include "toricsum/int_matrix.hpp"
#include "toricsum/linalg.hpp"
#include "toricsum/lp.hpp"

namespace toricsum {

namespace {

constexpr int kMaxVerticesForFacetSearch = 20;
constexpr int kMaxDimForFacetSearch = 8;

bool is_origin(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Is point target a convex combination of the given points?
bool in_convex_hull(const std::vector<IntVec>& points, const IntVec& target) {
  if (points.empty()) return false;
  int n = static_cast<int>(target.size());
  int m = static_cast<int>(points.size());
  LpProblem prob;
  prob.a.assign(n + 1, RatVec(m, Rat(0)));
  prob.b.assign(n + 1, Rat(0));
  prob.cost.assign(m, Rat(0));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) prob.a[i][j] = Rat(points[j][i]);
    prob.a[n][j] = 1;
  }
  for (int i = 0; i < n; ++i) prob.b[i] = Rat(target[i]);
  prob.b[n] = 1;
  return lp_solve(prob).status == LpStatus::Optimal;
}

int affine_rank(const std::vector<IntVec>& points) {
  if (points.empty()) return -1;  // rank of the empty set; dim convention -1
  int n = static_cast<int>(points[0].size());
  int m = static_cast<int>(points.size());
  if (m == 1) return 0;
  IntMatrix diff(m - 1, n);
  for (int i = 1; i < m; ++i)
    for (int j = 0; j < n; ++j) diff.at(i - 1, j) = points[i][j] - points[0][j];
  return rank_of(diff);
}

}  // namespace

const Face* FaceLattice::find(const std::set<int>& vs) const {
  for (const Face& f : faces)
    if (f.vertexSet == vs) return &f;
  return nullptr;
}

std::vector<const Face*> FaceLattice::of_dim(int d) const {
  std::vector<const Face*> out;
  for (const Face& f : faces)
    if (f.dim == d) out.push_back(&f);
  return out;
}

Polytope Polytope::build(const LaurentPolySpec& f) {
  validate(f);
  Polytope p;
  p.n = f.n;

  // Candidate points: the origin plus the distinct exponent vectors.
  std::vector<IntVec> cand;
  cand.push_back(IntVec(f.n, Int(0)));
  for (const LaurentTerm& t : f.terms)
    if (!is_origin(t.exp)) cand.push_back(t.exp);

  // The hull contains 0, so its affine hull is the linear span.
  {
    IntMatrix pts(static_cast<int>(cand.size()), f.n);
    for (size_t i = 0; i < cand.size(); ++i)
      for (int j = 0; j < f.n; ++j) pts.at(static_cast<int>(i), j) = cand[i][j];
    p.dim = rank_of(pts);
  }

  for (size_t i = 0; i < cand.size(); ++i) {
    std::vector<IntVec> others;
    for (size_t j = 0; j < cand.size(); ++j)
      if (j != i) others.push_back(cand[j]);
    if (!in_convex_hull(others, cand[i])) p.vertices.push_back(cand[i]);
  }
  std::sort(p.vertices.begin(), p.vertices.end());

  for (size_t i = 0; i < p.vertices.size(); ++i)
    if (is_origin(p.vertices[i])) {
      p.originIsVertex = true;
      p.originIndex = static_cast<int>(i);
    }

  if (p.full_dimensional()) {
    p.enumerate_facets();
    p.build_lattice();
  }
  return p;
}

void Polytope::require_full_dim() const {
  if (!full_dimensional())
    throw std::domain_error(
        "polytope is dimension-deficient: affine dimension " +
        std::to_string(dim) + " < ambient " + std::to_string(n));
}

void Polytope::enumerate_facets() {
  int m = static_cast<int>(vertices.size());
  if (m > kMaxVerticesForFacetSearch || n > kMaxDimForFacetSearch)
    throw std::domain_error(
        "facet search supports at most 20 vertices in dimension <= 8 (got " +
        std::to_string(m) + " vertices, n = " + std::to_string(n) + ")");

  std::map<RatVec, std::set<int>> offSeen;
  std::map<IntVec, std::set<int>> throughSeen;

  // Exhaustive supporting-hyperplane search over n-subsets of vertices.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = n - 1;
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (m < n) return;

  do {
    // Hyperplane a.x = b through the chosen vertices: kernel of (V_s | -1).
    RatMatrix sys(n, RatVec(n + 1, Rat(0)));
    for (int s = 0; s < n; ++s) {
      for (int j = 0; j < n; ++j) sys[s][j] = Rat(vertices[idx[s]][j]);
      sys[s][n] = -1;
    }
    std::vector<RatVec> ker = kernel_basis(sys);
    if (ker.size() != 1) continue;  // affinely dependent subset
    RatVec a(ker[0].begin(), ker[0].begin() + n);
    Rat b = ker[0][n];

    bool below = true, above = true;
    for (const IntVec& v : vertices) {
      Rat val = dot(a, v);
      if (val > b) below = false;
      if (val < b) above = false;
      if (!below && !above) break;
    }
    if (!below && !above) continue;  // not supporting
    if (!below) {
      for (Rat& c : a) c = -c;
      b = -b;
    }
    // 0 is in the hull, so b >= 0 once the polytope is on the <= side.
    std::set<int> onFace;
    for (int t = 0; t < m; ++t)
      if (dot(a, vertices[t]) == b) onFace.insert(t);

    if (b > 0) {
      RatVec e(n);
      for (int j = 0; j < n; ++j) e[j] = a[j] / b;
      offSeen.emplace(std::move(e), std::move(onFace));
    } else {
      Int mult = 1;
      for (const Rat& c : a)
        mpz_lcm(mult.get_mpz_t(), mult.get_mpz_t(), c.get_den().get_mpz_t());
      IntVec g(n);
      Int content = 0;
      for (int j = 0; j < n; ++j) {
        Rat scaled = a[j] * Rat(mult);
        g[j] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), g[j].get_mpz_t());
      }
      for (int j = 0; j < n; ++j)
        mpz_divexact(g[j].get_mpz_t(), g[j].get_mpz_t(), content.get_mpz_t());
      throughSeen.emplace(std::move(g), std::move(onFace));
    }
  } while (advance());

  for (auto& [coeffs, verts] : offSeen) {
    facetsOff_.push_back(FacetForm{coeffs});
    facetsOffVerts_.push_back(verts);
  }
  for (auto& [coeffs, verts] : throughSeen) {
    facetsThrough_.push_back(HomogeneousForm{coeffs});
    facetsThroughVerts_.push_back(verts);
  }
}

void Polytope::build_lattice() {
  // Every proper face is an intersection of facets; close the facet vertex
  // sets under pairwise intersection, then add the polytope itself.
  std::set<std::set<int>> sets;
  for (const auto& s : facetsOffVerts_) sets.insert(s);
  for (const auto& s : facetsThroughVerts_) sets.insert(s);

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<int>> snapshot(sets.begin(), sets.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::set<int> inter;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(),
                              snapshot[j].begin(), snapshot[j].end(),
                              std::inserter(inter, inter.begin()));
        if (inter.empty()) continue;
        if (sets.insert(inter).second) grew = true;
      }
  }
  std::set<int> all;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) all.insert(i);
  sets.insert(all);

  for (const std::set<int>& vs : sets) {
    Face f;
    f.vertexSet = vs;
    std::vector<IntVec> pts;
    for (int i : vs) pts.push_back(vertices[i]);
    f.dim = affine_rank(pts);
    // 0 lies on a face iff no off-origin facet contains it.
    f.containsOrigin = true;
    for (const auto& fv : facetsOffVerts_)
      if (std::includes(fv.begin(), fv.end(), vs.begin(), vs.end())) {
        f.containsOrigin = false;
        break;
      }
    lattice_.faces.push_back(std::move(f));
  }
  std::sort(lattice_.faces.begin(), lattice_.faces.end(),
            [](const Face& x, const Face& y) {
              if (x.dim != y.dim) return x.dim < y.dim;
              return x.vertexSet < y.vertexSet;
            });
}

const std::vector<FacetForm>& Polytope::facets_off_origin() const {
  require_full_dim();
  return facetsOff_;
}
const std::vector<std::set<int>>& Polytope::facet_vertex_sets_off_origin() const {
  require_full_dim();
  return facetsOffVerts_;
}
const std::vector<HomogeneousForm>& Polytope::facets_through_origin() const {
  require_full_dim();
  return facetsThrough_;
}
const std::vector<std::set<int>>& Polytope::facet_vertex_sets_through_origin()
    const {
  require_full_dim();
  return facetsThroughVerts_;
}
const FaceLattice& Polytope::face_lattice() const {
  require_full_dim();
  return lattice_;
}

std::vector<long> Polytope::faces_containing_origin_counts() const {
  require_full_dim();
  std::vector<long> counts(n + 1, 0);
  for (const Face& f : lattice_.faces)
    if (f.containsOrigin && f.dim >= 0) ++counts[f.dim];
  return counts;
}

Int Polytope::denominator() const {
  require_full_dim();
  Int d = 1;
  for (const FacetForm& f : facetsOff_) {
    Int fd = lcm_of_denominators(f.coeffs);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), fd.get_mpz_t());
  }
  return d;
}

std::vector<std::vector<int>> Polytope::triangulate_face(const Face& face) const {
  require_full_dim();
  if (face.dim <= 0 ||
      static_cast<int>(face.vertexSet.size()) == face.dim + 1) {
    std::vector<int> sorted(face.vertexSet.begin(), face.vertexSet.end());
    return {sorted};
  }
  // Pull from the lexicographically smallest vertex of the face.
  int anchor = -1;
  for (int v : face.vertexSet)
    if (anchor < 0 || vertices[v] < vertices[anchor]) anchor = v;

  std::vector<std::vector<int>> out;
  for (const Face& child : lattice_.faces) {
    if (child.dim != face.dim - 1) continue;
    if (child.vertexSet.count(anchor)) continue;
    if (!std::includes(face.vertexSet.begin(), face.vertexSet.end(),
                       child.vertexSet.begin(), child.vertexSet.end()))
      continue;
    for (std::vector<int> simplex : triangulate_face(child)) {
      simplex.push_back(anchor);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Int Polytope::normalized_volume() const {
  require_full_dim();
  Int total = 0;
  for (size_t fi = 0; fi < facetsOff_.size(); ++fi) {
    const Face* face = lattice_.find(facetsOffVerts_[fi]);
    if (face == nullptr)
      throw ConsistencyError("facet vertex set missing from face lattice");
    for (const std::vector<int>& simplex : triangulate_face(*face)) {
      std::vector<IntVec> cols;
      for (int v : simplex) cols.push_back(vertices[v]);
      Int d = det_exact(IntMatrix::from_columns(cols));
      total += abs(d);
    }
  }
  return total;
}

bool Polytope::contains_point(const IntVec& u) const {
  require_full_dim();
  for (const FacetForm& f : facetsOff_)
    if (dot(f.coeffs, u) > 1) return false;
  for (const HomogeneousForm& g : facetsThrough_) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += g.coeffs[j] * u[j];
    if (s > 0) return false;
  }
  return true;
}

bool Polytope::face_contains_point(const Face& face, const IntVec& u) const {
  if (!contains_point(u)) return false;
  auto superset = [&](const std::set<int>& fv) {
    return std::includes(fv.begin(), fv.end(), face.vertexSet.begin(),
                         face.vertexSet.end());
  };
  for (size_t i = 0; i < facetsOff_.size(); ++i)
    if (superset(facetsOffVerts_[i]) && dot(facetsOff_[i].coeffs, u) != 1)
      return false;
  for (size_t i = 0; i < facetsThrough_.size(); ++i) {
    if (!superset(facetsThroughVerts_[i])) continue;
    Int s = 0;
    for (int j = 0; j < n; ++j) s += facetsThrough_[i].coeffs[j] * u[j];
    if (s != 0) return false;
  }
  return true;
}

bool origin_is_vertex(const Polytope& p) {
  std::vector<IntVec> nonzero;
  for (const IntVec& v : p.vertices)
    if (!is_origin(v)) nonzero.push_back(v);
  return !in_convex_hull(nonzero, IntVec(p.n, Int(0)));
}

}  // namespace toricsum
