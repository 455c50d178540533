#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricsum/hodge.hpp"
#include "toricsum/int_matrix.hpp"
#include "toricsum/polytope.hpp"

namespace toricsum {

// Restriction of f to an off-origin facet, with the data the diagonal
// criteria consume: the vertex matrix, |det|, and its invariant factors.
struct DiagonalReport {
  int facetId = -1;
  LaurentPolySpec restriction;
  bool isDiagonal = false;       // exactly n terms with nonsingular matrix
  IntMatrix vertexMatrix;        // n x (#terms), columns = exponents
  Int detAbs;                    // |det|, set when the matrix is square
  std::vector<Int> invariantFactors;  // d_1 | ... | d_n, set when diagonal

  const Int& largest_factor() const { return invariantFactors.back(); }
};

enum class Verdict { Ordinary, NotNonDegenerate, Inconclusive, Unsupported };

std::string verdict_name(Verdict v);

struct OrdinarinessVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
};

// Terms of f whose exponents lie on the given face (which must not contain
// the origin).
LaurentPolySpec facet_restriction(const LaurentPolySpec& f, const Polytope& p,
                                  const Face& face);

// Report for the facetId-th off-origin facet.
DiagonalReport diagonal_report(const LaurentPolySpec& f, const Polytope& p,
                               int facetId);

// Non-degeneracy of a diagonal restriction: gcd(p, |det|) = 1.
// Rejects non-diagonal reports (the criterion does not apply to them).
bool diagonal_nondegenerate(const DiagonalReport& rep, const Int& prime);

// NotNonDegenerate when p | det; Ordinary when p coprime to det and
// p = 1 (mod d_n) (or d_n = 1); otherwise Inconclusive — the congruence
// criterion is sufficient only.
OrdinarinessVerdict diagonal_ordinary_verdict(const DiagonalReport& rep,
                                              const Int& prime);

struct GlobalOrdinariness {
  OrdinarinessVerdict global;
  std::vector<DiagonalReport> reports;           // one per off-origin facet
  std::vector<OrdinarinessVerdict> facetVerdicts;
};

// Facial decomposition: ordinary iff every off-origin facet restriction is.
// Unsupported when some restriction is not diagonal.
GlobalOrdinariness global_ordinariness(const LaurentPolySpec& f,
                                       const Polytope& p, const Int& prime);

struct SlopePrediction {
  std::vector<std::pair<Rat, Int>> slopes;  // (slope, multiplicity)
  std::optional<Rat> shift;                 // uniform shift already applied

  Int total_multiplicity() const;
};

// Newton-polygon slopes k/D with multiplicities H(k), valid when the global
// verdict is Ordinary; throws std::domain_error otherwise.
SlopePrediction predicted_slopes(const LaurentPolySpec& f, const Polytope& p,
                                 const Int& prime);

// Slope ledger of the derived L-function: drop one slope-0 root (the trivial
// unit root available when the origin is a vertex) and shift the rest by -1.
SlopePrediction derived_slope_prediction(const Polytope& p);

// Factor 1 - zeta^t T present when the origin is a vertex; t is the constant
// term reduced to the prime field (0 when f has no constant term).
struct UnitRootDescriptor {
  long t = 0;
};
std::optional<UnitRootDescriptor> trivial_unit_root_descriptor(
    const LaurentPolySpec& f, const Polytope& p, const Int& prime);

}  // namespace toricsum
