#pragma once

#include <set>
#include <vector>

#include "toricsum/laurent.hpp"

namespace toricsum {

// Off-origin facet, normalized so the facet equation is sum e_i x_i = 1.
// Every vertex V of the polytope satisfies e . V <= 1.
struct FacetForm {
  RatVec coeffs;
  bool operator==(const FacetForm&) const = default;
};

// Supporting hyperplane through the origin, as a primitive integer form g
// with g . x <= 0 on the whole polytope.
struct HomogeneousForm {
  IntVec coeffs;
  bool operator==(const HomogeneousForm&) const = default;
};

struct Face {
  std::set<int> vertexSet;     // indices into Polytope::vertices
  int dim = -1;                // affine rank of the vertex set
  bool containsOrigin = false; // the point 0 lies on the face
};

struct FaceLattice {
  std::vector<Face> faces;  // every nonempty face, ordered by (dim, vertexSet)

  const Face* find(const std::set<int>& vs) const;
  std::vector<const Face*> of_dim(int d) const;
  const Face& top() const { return faces.back(); }
};

// Newton polyhedron of a Laurent polynomial: the convex hull of the origin
// and the exponent vectors. Facets and the face lattice are enumerated
// eagerly when the hull is full-dimensional.
class Polytope {
 public:
  static Polytope build(const LaurentPolySpec& f);

  int n = 0;    // ambient dimension
  int dim = 0;  // affine dimension of the hull
  std::vector<IntVec> vertices;  // extreme points, lexicographically sorted
  bool originIsVertex = false;
  int originIndex = -1;  // index into vertices, -1 when the origin is interior

  bool full_dimensional() const { return dim == n; }

  // All queries below require dim == n and throw std::domain_error otherwise,
  // reporting the affine dimension found.
  const std::vector<FacetForm>& facets_off_origin() const;
  const std::vector<std::set<int>>& facet_vertex_sets_off_origin() const;
  const std::vector<HomogeneousForm>& facets_through_origin() const;
  const std::vector<std::set<int>>& facet_vertex_sets_through_origin() const;
  const FaceLattice& face_lattice() const;

  // F_0(k) for k = 0..n: faces containing the origin, counted by dimension.
  // The top face (the polytope itself) contributes the final 1.
  std::vector<long> faces_containing_origin_counts() const;

  Int denominator() const;        // lcm of facet-equation denominators
  Int normalized_volume() const;  // n! Vol, summed over origin pyramids

  // Pulling triangulation of a face, anchored at its lexicographically
  // smallest vertex; each simplex is a sorted list of dim+1 vertex indices.
  std::vector<std::vector<int>> triangulate_face(const Face& face) const;

  bool face_contains_point(const Face& face, const IntVec& u) const;
  bool contains_point(const IntVec& u) const;

 private:
  void require_full_dim() const;
  void enumerate_facets();
  void build_lattice();

  std::vector<FacetForm> facetsOff_;
  std::vector<std::set<int>> facetsOffVerts_;
  std::vector<HomogeneousForm> facetsThrough_;
  std::vector<std::set<int>> facetsThroughVerts_;
  FaceLattice lattice_;
};

// True when no convex combination of the nonzero vertices reaches the
// origin, decided by exact LP feasibility.
bool origin_is_vertex(const Polytope& p);

}  // namespace toricsum
