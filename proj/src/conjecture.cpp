#include "toricsum/conjecture.hpp"

#include <algorithm>

#include "toricsum/int_matrix.hpp"

namespace toricsum {

Int face_normalized_volume(const Polytope& p, const Face& face) {
  if (!face.containsOrigin)
    throw std::invalid_argument(
        "face_normalized_volume: face must contain the origin");
  if (face.dim == 0) return 1;

  Int total = 0;
  for (const std::vector<int>& simplex : p.triangulate_face(face)) {
    // Edge matrix from the first vertex; the product of its invariant
    // factors is the simplex volume in the saturated lattice of the span.
    const IntVec& base = p.vertices[simplex[0]];
    std::vector<IntVec> cols;
    for (size_t i = 1; i < simplex.size(); ++i) {
      IntVec e(p.n);
      for (int j = 0; j < p.n; ++j) e[j] = p.vertices[simplex[i]][j] - base[j];
      cols.push_back(std::move(e));
    }
    SnfResult snf = smith_normal_form(IntMatrix::from_columns(cols));
    Int vol = 1;
    for (const Int& d : snf.diag) vol *= d;
    if (vol == 0)
      throw ConsistencyError("degenerate simplex in face triangulation");
    total += vol;
  }
  return total;
}

long faces_above(const Polytope& p, const Face& face, int i) {
  long count = 0;
  for (const Face& g : p.face_lattice().faces) {
    if (g.dim != i) continue;
    if (std::includes(g.vertexSet.begin(), g.vertexSet.end(),
                      face.vertexSet.begin(), face.vertexSet.end()))
      ++count;
  }
  return count;
}

ConjectureReport conjectured_weight_count(const Polytope& p, int k) {
  if (k < 0 || k > p.n)
    throw std::invalid_argument("conjectured_weight_count: need 0 <= k <= n");
  Int acc = 0;
  for (const Face& face : p.face_lattice().faces) {
    if (!face.containsOrigin || face.dim > k) continue;
    Int fk = Int(faces_above(p, face, k));
    Int fk1 = k >= 1 ? Int(faces_above(p, face, k - 1)) : Int(0);
    Int bin = binomial(p.n - face.dim, p.n - k + 1);
    Int term = (fk + fk1 - bin) * face_normalized_volume(p, face);
    if (face.dim % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  ConjectureReport rep;
  rep.k = k;
  rep.conjectured = (k % 2 == 0) ? acc : Int(-acc);
  return rep;
}

std::vector<ConjectureReport> counterexample_report(
    const Polytope& p, const std::vector<Int>& reference,
    const std::string& provenance) {
  if (static_cast<int>(reference.size()) != p.n + 1)
    throw std::invalid_argument(
        "counterexample_report: reference ledger must list weights 0..n");
  std::vector<ConjectureReport> out;
  for (int k = 0; k <= p.n; ++k) {
    ConjectureReport rep = conjectured_weight_count(p, k);
    rep.reference = reference[k];
    rep.agree = (rep.conjectured == reference[k]);
    rep.provenance = provenance;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace toricsum
