#include "toricsum/fixture.hpp"

#include <algorithm>

#include "toricsum/oracle.hpp"

namespace toricsum {

namespace {

std::set<int> labels(std::initializer_list<int> v) { return std::set<int>(v); }

PaperExpectations build_expectations() {
  PaperExpectations e;
  e.facetEquations = {
      {1, 1, 1, 1, 1},  {1, 1, 1, -1, 1},  {1, 1, -1, 1, 1},
      {1, -1, 1, 1, 1}, {1, -1, 1, -1, 1}, {1, -1, -1, 1, 1},
      {-1, 1, 1, 1, 1}, {-1, 1, 1, -1, 1}, {-1, 1, -1, 1, 1}};
  e.facetVertexLabels = {
      labels({1, 2, 3, 4, 5}), labels({1, 2, 3, 5, 7}), labels({1, 2, 4, 5, 7}),
      labels({1, 3, 4, 5, 6}), labels({1, 3, 5, 6, 7}), labels({1, 4, 5, 6, 7}),
      labels({2, 3, 4, 5, 6}), labels({2, 3, 5, 6, 7}), labels({2, 4, 5, 6, 7})};
  e.tauTables[0] = {labels({0})};
  e.tauTables[1] = {labels({0, 1}), labels({0, 2}), labels({0, 3}),
                    labels({0, 4}), labels({0, 6}), labels({0, 7})};
  e.tauTables[2] = {
      labels({0, 1, 2}), labels({0, 1, 3}), labels({0, 1, 4}),
      labels({0, 1, 6}), labels({0, 1, 7}), labels({0, 2, 3}),
      labels({0, 2, 4}), labels({0, 2, 6}), labels({0, 2, 7}),
      labels({0, 3, 4}), labels({0, 3, 6}), labels({0, 3, 7}),
      labels({0, 4, 6}), labels({0, 4, 7}), labels({0, 6, 7})};
  e.tauTables[3] = {
      labels({0, 1, 2, 3}), labels({0, 1, 2, 4}), labels({0, 1, 2, 7}),
      labels({0, 1, 3, 4}), labels({0, 1, 3, 6}), labels({0, 1, 3, 7}),
      labels({0, 1, 4, 6}), labels({0, 1, 4, 7}), labels({0, 1, 6, 7}),
      labels({0, 2, 3, 4}), labels({0, 2, 3, 6}), labels({0, 2, 3, 7}),
      labels({0, 2, 4, 6}), labels({0, 2, 4, 7}), labels({0, 2, 6, 7}),
      labels({0, 3, 4, 6}), labels({0, 3, 6, 7}), labels({0, 4, 6, 7})};
  e.tauTables[4] = {
      labels({0, 1, 2, 3, 4}), labels({0, 1, 2, 3, 7}), labels({0, 1, 2, 4, 7}),
      labels({0, 1, 3, 4, 6}), labels({0, 1, 3, 6, 7}), labels({0, 1, 4, 6, 7}),
      labels({0, 2, 3, 4, 6}), labels({0, 2, 3, 6, 7}), labels({0, 2, 4, 6, 7})};
  e.f0 = {1, 6, 15, 18, 9};
  e.weightCounts = {1, 7, 28, 82, 196, 406};
  e.hodgeNumbers = {1, 2, 3, 2, 1, 0};
  e.hpVertices = {{0, 0}, {1, 0}, {3, 2}, {6, 8}, {8, 14}, {9, 18}};
  e.ordinaryPrimes = {2, 3, 5, 7, 11, 101};
  e.hk = {2, 3, 2, 1};
  e.eLedger = {1, 0, 1, 0, 1, 6};
  e.lstarSlopes = {0, 1, 1, 2, 2, 2, 3, 3, 4};
  e.lSlopes = {0, 0, 1, 1, 1, 2, 2, 3};
  e.lstarTrivialPowers = {0, 1, 2};
  e.lTrivialPowers = {0, 1};
  return e;
}

}  // namespace

const PaperExpectations& default_expectations() {
  static const PaperExpectations e = build_expectations();
  return e;
}

const std::vector<IntVec>& fixture_vertex_labels() {
  static const std::vector<IntVec> v = [] {
    std::vector<IntVec> out;
    for (const LaurentTerm& t : paper_g_exponents().terms) out.push_back(t.exp);
    return out;
  }();
  return v;
}

bool matches_paper_g(const LaurentPolySpec& f) {
  if (f.n != 5) return false;
  std::set<IntVec> have, want;
  for (const LaurentTerm& t : f.terms) have.insert(t.exp);
  for (const IntVec& v : fixture_vertex_labels()) want.insert(v);
  return have == want;
}

std::vector<int> label_map(const Polytope& p) {
  const std::vector<IntVec>& named = fixture_vertex_labels();
  std::vector<int> map(p.vertices.size(), -1);
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    const IntVec& v = p.vertices[i];
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) {
      map[i] = 0;
      continue;
    }
    for (size_t j = 0; j < named.size(); ++j)
      if (named[j] == v) {
        map[i] = static_cast<int>(j) + 1;
        break;
      }
    if (map[i] < 0)
      throw std::invalid_argument("label_map: unexpected vertex");
  }
  return map;
}

}  // namespace toricsum
