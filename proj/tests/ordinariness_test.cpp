#include <doctest.h>

#include "toricsum/oracle.hpp"
#include "toricsum/ordinariness.hpp"

using namespace toricsum;

namespace {

LaurentPolySpec spec_of(int n, std::vector<std::vector<long>> exps) {
  LaurentPolySpec f;
  f.n = n;
  for (const auto& e : exps) {
    IntVec v;
    for (long x : e) v.emplace_back(x);
    f.terms.push_back({SymbolicNonzero{}, std::move(v)});
  }
  return f;
}

}  // namespace

TEST_CASE("facet restrictions of the shipped instance are diagonal") {
  LaurentPolySpec g = paper_g_exponents();
  Polytope p = Polytope::build(g);
  for (int i = 0; i < 9; ++i) {
    DiagonalReport rep = diagonal_report(g, p, i);
    CHECK(rep.isDiagonal);
    CHECK(rep.restriction.terms.size() == 5);
    CHECK(rep.detAbs == 1);
    CHECK(rep.invariantFactors == std::vector<Int>(5, Int(1)));
  }
}

TEST_CASE("restriction to a segment facet") {
  LaurentPolySpec f = spec_of(1, {{1}, {-1}});
  Polytope p = Polytope::build(f);
  // each endpoint facet carries a single term
  for (int i = 0; i < 2; ++i) {
    DiagonalReport rep = diagonal_report(f, p, i);
    CHECK(rep.restriction.terms.size() == 1);
    CHECK(rep.isDiagonal);
    CHECK(rep.detAbs == 1);
  }
}

TEST_CASE("diagonal criteria") {
  // f = x^2: vertex matrix (2), det 2
  LaurentPolySpec f = spec_of(1, {{2}});
  Polytope p = Polytope::build(f);
  DiagonalReport rep = diagonal_report(f, p, 0);
  CHECK(rep.detAbs == 2);
  CHECK_FALSE(diagonal_nondegenerate(rep, Int(2)));
  CHECK(diagonal_nondegenerate(rep, Int(3)));
  CHECK(diagonal_ordinary_verdict(rep, Int(2)).verdict ==
        Verdict::NotNonDegenerate);
  CHECK(diagonal_ordinary_verdict(rep, Int(3)).verdict == Verdict::Ordinary);

  // d_n = 4 style congruence gap: x^4 in one variable
  LaurentPolySpec f4 = spec_of(1, {{4}});
  Polytope p4 = Polytope::build(f4);
  DiagonalReport rep4 = diagonal_report(f4, p4, 0);
  CHECK(rep4.largest_factor() == 4);
  CHECK(diagonal_ordinary_verdict(rep4, Int(5)).verdict == Verdict::Ordinary);
  CHECK(diagonal_ordinary_verdict(rep4, Int(3)).verdict ==
        Verdict::Inconclusive);
}

TEST_CASE("global ordinariness") {
  LaurentPolySpec g = paper_g_exponents();
  Polytope pg = Polytope::build(g);
  for (long pr : {2L, 3L, 5L, 7L, 11L, 101L}) {
    GlobalOrdinariness go = global_ordinariness(g, pg, Int(pr));
    CHECK(go.global.verdict == Verdict::Ordinary);
    CHECK(go.reports.size() == 9);
  }

  LaurentPolySpec seg = spec_of(1, {{1}, {-1}});
  Polytope pseg = Polytope::build(seg);
  CHECK(global_ordinariness(seg, pseg, Int(7)).global.verdict ==
        Verdict::Ordinary);

  LaurentPolySpec f = spec_of(1, {{2}});
  Polytope pf = Polytope::build(f);
  CHECK(global_ordinariness(f, pf, Int(2)).global.verdict ==
        Verdict::NotNonDegenerate);
}

TEST_CASE("non-diagonal facet yields Unsupported") {
  // the facet x = 1 carries three collinear terms
  LaurentPolySpec f = spec_of(2, {{1, 0}, {1, 1}, {1, -1}});
  Polytope p = Polytope::build(f);
  GlobalOrdinariness go = global_ordinariness(f, p, Int(3));
  CHECK(go.global.verdict == Verdict::Unsupported);
}

TEST_CASE("square facets are diagonal despite the extra vertex") {
  LaurentPolySpec f = spec_of(2, {{1, 0}, {0, 1}, {1, 1}});
  Polytope p = Polytope::build(f);
  GlobalOrdinariness go = global_ordinariness(f, p, Int(3));
  CHECK(go.global.verdict == Verdict::Ordinary);
}

TEST_CASE("unimodular facets are ordinary at every prime") {
  LaurentPolySpec g = paper_g_exponents();
  Polytope p = Polytope::build(g);
  for (int i = 0; i < 9; ++i) {
    DiagonalReport rep = diagonal_report(g, p, i);
    REQUIRE(rep.detAbs == 1);
    for (long pr : {2L, 3L, 5L, 7L, 13L})
      CHECK(diagonal_ordinary_verdict(rep, Int(pr)).verdict ==
            Verdict::Ordinary);
  }
}

TEST_CASE("predicted slopes") {
  LaurentPolySpec g = paper_g_exponents();
  Polytope p = Polytope::build(g);
  SlopePrediction sp = predicted_slopes(g, p, Int(3));
  REQUIRE(sp.slopes.size() == 5);
  CHECK(sp.total_multiplicity() == lfunction_degree(p));
  std::vector<std::pair<Rat, Int>> want = {
      {Rat(0), Int(1)}, {Rat(1), Int(2)}, {Rat(2), Int(3)},
      {Rat(3), Int(2)}, {Rat(4), Int(1)}};
  CHECK(sp.slopes == want);

  SlopePrediction derived = derived_slope_prediction(p);
  std::vector<std::pair<Rat, Int>> wantDerived = {
      {Rat(0), Int(2)}, {Rat(1), Int(3)}, {Rat(2), Int(2)}, {Rat(3), Int(1)}};
  CHECK(derived.slopes == wantDerived);
  CHECK(derived.shift == Rat(-1));
  CHECK(derived.total_multiplicity() == 8);

  // refuses without an Ordinary verdict
  LaurentPolySpec f = spec_of(1, {{2}});
  Polytope pf = Polytope::build(f);
  CHECK_THROWS_AS(predicted_slopes(f, pf, Int(2)), std::domain_error);

  LaurentPolySpec simplex = spec_of(2, {{1, 0}, {0, 1}});
  Polytope ps = Polytope::build(simplex);
  SlopePrediction ssp = predicted_slopes(simplex, ps, Int(5));
  CHECK(ssp.slopes == std::vector<std::pair<Rat, Int>>{{Rat(0), Int(1)}});
}

TEST_CASE("trivial unit root descriptor") {
  LaurentPolySpec g = paper_g_exponents();
  Polytope pg = Polytope::build(g);
  auto d = trivial_unit_root_descriptor(g, pg, Int(3));
  REQUIRE(d.has_value());
  CHECK(d->t == 0);  // no constant term: factor (1 - T)

  // f = x + 1 over F_2: factor 1 - zeta_2 T = 1 + T
  LaurentPolySpec f;
  f.n = 1;
  f.terms.push_back({Int(1), IntVec{Int(1)}});
  f.terms.push_back({Int(1), IntVec{Int(0)}});
  Polytope pf = Polytope::build(f);
  auto d2 = trivial_unit_root_descriptor(f, pf, Int(2));
  REQUIRE(d2.has_value());
  CHECK(d2->t == 1);

  LaurentPolySpec seg = spec_of(1, {{1}, {-1}});
  Polytope pseg = Polytope::build(seg);
  CHECK_FALSE(trivial_unit_root_descriptor(seg, pseg, Int(3)).has_value());
}
