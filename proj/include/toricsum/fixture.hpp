#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "toricsum/laurent.hpp"
#include "toricsum/polytope.hpp"

namespace toricsum {

// Reference values for the shipped five-variable instance, used by the
// verification harness. Faces are written in vertex labels: 0 for the
// origin, 1..7 for the seven nonzero exponent vectors in their standard
// order.
struct PaperExpectations {
  std::vector<std::vector<long>> facetEquations;        // 9 x 5
  std::vector<std::set<int>> facetVertexLabels;         // 9 label sets
  std::map<int, std::vector<std::set<int>>> tauTables;  // dim -> label sets
  std::vector<long> f0;                                 // (1,6,15,18,9)
  long denominator = 1;
  long normalizedVolume = 9;
  bool originIsVertex = true;
  long degree = 9;
  std::vector<long> weightCounts;      // W(0..5)
  std::vector<long> hodgeNumbers;      // H(0..5)
  std::vector<std::pair<long, long>> hpVertices;  // (x, y) with D = 1
  std::vector<long> ordinaryPrimes;    // spot set
  std::vector<long> hk;                // derived slope multiplicities
  std::vector<long> eLedger;           // weight counts of the degree-9 L
  long conjecturedW5 = 7;
  std::vector<long> lstarSlopes;       // 9 slopes
  std::vector<long> lSlopes;           // 8 slopes
  std::vector<long> lstarTrivialPowers;  // roots q^j: j list
  std::vector<long> lTrivialPowers;
  long nontrivialCount = 6;
  long nontrivialWeightLstar = 5;      // |root| = q^{w/2}
  long nontrivialWeightL = 3;
};

const PaperExpectations& default_expectations();

// The exponent vectors of the fixture instance, labeled 1..7.
const std::vector<IntVec>& fixture_vertex_labels();

// True when the spec has exactly the fixture's exponent set (coefficients
// are free).
bool matches_paper_g(const LaurentPolySpec& f);

// Map from polytope vertex index to fixture label (0 = origin, 1..7).
// Throws when the polytope does not carry exactly those points.
std::vector<int> label_map(const Polytope& p);

}  // namespace toricsum
