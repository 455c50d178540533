#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricsum/polytope.hpp"

namespace toricsum {

// Normalized volume (dim s)! V(s) of a face containing the origin, measured
// in the saturated lattice of its linear span; 1 for the origin face.
Int face_normalized_volume(const Polytope& p, const Face& face);

// Number of i-dimensional faces of the polytope containing the given face,
// counting the face itself when i = dim(face) and the whole polytope when
// i = n.
long faces_above(const Polytope& p, const Face& face, int i);

struct ConjectureReport {
  int k = 0;
  Int conjectured;
  std::optional<Int> reference;
  std::optional<bool> agree;
  std::string provenance;  // where the reference came from
};

// The conjectural count of weight-k reciprocal roots: an alternating sum of
// (F_s(k) + F_s(k-1) - C(n - dim s, n - k + 1)) * (dim s)! V(s) over the
// faces s containing the origin with dim s <= k. Out-of-range binomials are
// zero and F_s(-1) = 0.
ConjectureReport conjectured_weight_count(const Polytope& p, int k);

// Per-k comparison of the conjectured counts against a reference weight
// ledger (reference[k] = number of weight-k roots).
std::vector<ConjectureReport> counterexample_report(
    const Polytope& p, const std::vector<Int>& reference,
    const std::string& provenance);

}  // namespace toricsum
