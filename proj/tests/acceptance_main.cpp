// Acceptance suite: every criterion of the verification contract, with the
// expected values frozen as literals and the stated runtime limits enforced.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "property_checks.hpp"
#include "toricsum/conjecture.hpp"
#include "toricsum/hodge.hpp"
#include "toricsum/ordinariness.hpp"
#include "toricsum/verify.hpp"

using namespace toricsum;

namespace {

using Clock = std::chrono::steady_clock;

struct Row {
  int num;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Fail {
  std::string what;
};

void need(bool cond, const std::string& what) {
  if (!cond) throw Fail{what};
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<Rat> rat_slopes(std::vector<long> v) {
  std::vector<Rat> out;
  for (long s : v) out.emplace_back(s);
  return out;
}

class Gate {
 public:
  template <class Body>
  void criterion(int num, const std::string& name, double limit, Body&& body) {
    Row r;
    r.num = num;
    r.name = name;
    auto t0 = Clock::now();
    try {
      r.detail = body();
      r.pass = true;
    } catch (const Fail& f) {
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.pass && limit > 0 && r.seconds > limit) {
      r.pass = false;
      r.detail = "runtime " + std::to_string(r.seconds) + "s exceeds the " +
                 std::to_string(limit) + "s limit";
    }
    rows.push_back(std::move(r));
  }

  int report() const {
    bool ok = true;
    for (const Row& r : rows) {
      std::printf("%s criterion %2d (%s) [%.2fs]: %s\n",
                  r.pass ? "PASS" : "FAIL", r.num, r.name.c_str(), r.seconds,
                  r.detail.c_str());
      ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed"
                           : "acceptance: FAILURES present");
    return ok ? 0 : 1;
  }

  std::vector<Row> rows;
};

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

LaurentPolySpec concrete(int n,
                         std::vector<std::pair<long, std::vector<long>>> terms) {
  LaurentPolySpec f;
  f.n = n;
  for (const auto& [c, e] : terms) {
    IntVec v;
    for (long x : e) v.emplace_back(x);
    f.terms.push_back({Int(c), std::move(v)});
  }
  return f;
}

void need_moduli(const LPolynomial& l, std::vector<double> want,
                 const std::string& label) {
  std::sort(want.begin(), want.end());
  for (const auto& em : reciprocal_root_moduli(l)) {
    need(em.size() == want.size(), label + ": root count");
    for (size_t i = 0; i < want.size(); ++i)
      need(std::abs(em[i] - want[i]) <= 1e-6 * want[i],
           label + ": modulus " + std::to_string(em[i]) + " != " +
               std::to_string(want[i]));
  }
}

}  // namespace

int main() {
  Gate gate;
  std::optional<Polytope> gPoly;
  auto poly = [&]() -> const Polytope& {
    if (!gPoly) gPoly = Polytope::build(paper_g_exponents());
    return *gPoly;
  };

  gate.criterion(1, "facets of the shipped instance", 1.0, [&]() -> std::string {
    const Polytope& p = poly();
    const std::vector<std::vector<long>> wantEq = {
        {1, 1, 1, 1, 1},  {1, 1, 1, -1, 1},  {1, 1, -1, 1, 1},
        {1, -1, 1, 1, 1}, {1, -1, 1, -1, 1}, {1, -1, -1, 1, 1},
        {-1, 1, 1, 1, 1}, {-1, 1, 1, -1, 1}, {-1, 1, -1, 1, 1}};
    const std::vector<std::set<int>> wantVerts = {
        {1, 2, 3, 4, 5}, {1, 2, 3, 5, 7}, {1, 2, 4, 5, 7},
        {1, 3, 4, 5, 6}, {1, 3, 5, 6, 7}, {1, 4, 5, 6, 7},
        {2, 3, 4, 5, 6}, {2, 3, 5, 6, 7}, {2, 4, 5, 6, 7}};
    need(p.facets_off_origin().size() == 9, "expected exactly 9 facets");
    std::set<RatVec> eqs;
    for (const FacetForm& f : p.facets_off_origin()) eqs.insert(f.coeffs);
    for (const auto& eq : wantEq) {
      RatVec w;
      for (long c : eq) w.emplace_back(c);
      need(eqs.count(w) == 1, "missing facet equation " + join(eq));
    }
    std::vector<int> label = label_map(p);
    std::set<std::set<int>> sets;
    for (const auto& vs : p.facet_vertex_sets_off_origin()) {
      std::set<int> s;
      for (int i : vs) s.insert(label[i]);
      sets.insert(s);
    }
    for (const auto& w : wantVerts)
      need(sets.count(w) == 1, "facet vertex set mismatch");
    return "9 off-origin facets, equations and vertex sets as listed";
  });

  gate.criterion(2, "origin face tables", 1.0, [&]() -> std::string {
    const Polytope& p = poly();
    std::vector<long> f0 = p.faces_containing_origin_counts();
    need(f0.size() == 6 && f0[0] == 1 && f0[1] == 6 && f0[2] == 15 &&
             f0[3] == 18 && f0[4] == 9,
         "F_0(0..4) = (" + join(f0) + ") != (1,6,15,18,9)");
    // the full τ tables, as label sets
    std::vector<int> label = label_map(p);
    const auto& tables = default_expectations().tauTables;
    for (const auto& [dimk, want] : tables) {
      std::set<std::set<int>> got;
      for (const Face* f : p.face_lattice().of_dim(dimk)) {
        if (!f->containsOrigin) continue;
        std::set<int> s;
        for (int i : f->vertexSet) s.insert(label[i]);
        got.insert(s);
      }
      need(got.size() == want.size(),
           "face-count mismatch at dim " + std::to_string(dimk));
      for (const auto& w : want)
        need(got.count(w) == 1, "face table mismatch at dim " + std::to_string(dimk));
    }
    return "face tables reproduced; F_0 = (1,6,15,18,9)";
  });

  gate.criterion(3, "polytope invariants", 1.0, [&]() -> std::string {
    const Polytope& p = poly();
    need(p.denominator() == 1, "D != 1");
    need(p.normalized_volume() == 9, "normalized volume != 9");
    need(p.originIsVertex && origin_is_vertex(p), "origin must be a vertex");
    need(lfunction_degree(p) == 9, "degree != 9");
    return "D = 1, volume = 9, origin is a vertex, degree = 9";
  });

  gate.criterion(4, "lattice counts by both strategies", 30.0,
                 [&]() -> std::string {
    const Polytope& p = poly();
    const std::vector<long> want = {1, 7, 28, 82, 196, 406};
    need(pyramid_count_available(p), "pyramid strategy must be available");
    for (long k = 0; k <= 5; ++k) {
      long a = count_weight_k_box(p, k).count;
      long b = count_weight_k_pyramid(p, k).count;
      need(a == want[k], "box W(" + std::to_string(k) + ") = " +
                             std::to_string(a) + " != " +
                             std::to_string(want[k]));
      need(a == b, "strategies disagree at k = " + std::to_string(k));
    }
    return "W(0..5) = (1,7,28,82,196,406), strategies agree";
  });

  gate.criterion(5, "hodge numbers and polygon", 30.0, [&]() -> std::string {
    const Polytope& p = poly();
    std::vector<Int> h = hodge_numbers(p);
    need(h == std::vector<Int>{1, 2, 3, 2, 1, 0},
         "H != (1,2,3,2,1) with H(5) = 0");
    HodgePolygon hp = hodge_polygon(p);
    std::vector<PolygonPoint> want = {
        {Rat(0), Rat(0)}, {Rat(1), Rat(0)},  {Rat(3), Rat(2)},
        {Rat(6), Rat(8)}, {Rat(8), Rat(14)}, {Rat(9), Rat(18)}};
    need(hp.vertices == want, "Hodge polygon vertices mismatch");
    Int sum = 0;
    for (const Int& x : h) sum += x;
    need(sum == 9, "sum of Hodge numbers != 9");
    return "H = (1,2,3,2,1,0), HP vertices as stated, sum = 9";
  });

  gate.criterion(6, "ordinariness and predicted slopes", 30.0,
                 [&]() -> std::string {
    const Polytope& p = poly();
    LaurentPolySpec g = paper_g_exponents();
    for (int i = 0; i < 9; ++i) {
      DiagonalReport rep = diagonal_report(g, p, i);
      need(rep.isDiagonal && rep.detAbs == 1,
           "facet " + std::to_string(i) + " must be unimodular diagonal");
    }
    for (long pr : {2L, 3L, 5L, 7L, 11L, 101L})
      need(global_ordinariness(g, p, Int(pr)).global.verdict ==
               Verdict::Ordinary,
           "verdict at p = " + std::to_string(pr) + " is not Ordinary");
    SlopePrediction sp = derived_slope_prediction(p);
    std::vector<std::pair<Rat, Int>> want = {
        {Rat(0), Int(2)}, {Rat(1), Int(3)}, {Rat(2), Int(2)}, {Rat(3), Int(1)}};
    need(sp.slopes == want, "derived slope multiplicities != (2,3,2,1)");
    return "nine unimodular facets; Ordinary at 2,3,5,7,11,101; h = (2,3,2,1)";
  });

  gate.criterion(7, "conjectured weight counts", 5.0, [&]() -> std::string {
    const Polytope& p = poly();
    const std::vector<Int> ledger = {Int(1), Int(0), Int(1),
                                     Int(0), Int(1), Int(6)};
    Int w5 = conjectured_weight_count(p, 5).conjectured;
    need(w5 == 7, "conjectured w_5 = " + w5.get_str() + " != 7");
    need(ledger[5] == 6, "reference w_5 != 6");
    need(w5 != ledger[5], "expected the counterexample mismatch at k = 5");
    need(conjectured_weight_count(p, 0).conjectured == 1, "w_0 != 1");
    std::vector<ConjectureReport> reps =
        counterexample_report(p, ledger, "paper ledger");
    need(reps[5].agree.has_value() && !*reps[5].agree, "k = 5 must disagree");
    need(reps[0].agree.value_or(false), "k = 0 must agree");
    return "conjectured w_5 = 7 vs reference 6; ledger (1,0,1,0,1,6)";
  });

  std::optional<PaperPipeline> pipe;
  PaperInstance inst;  // p = 3, all-ones

  gate.criterion(8, "exact L* at p = 3", 600.0, [&]() -> std::string {
    pipe = run_paper_pipeline(inst, 9, /*fast=*/true);
    LaurentPolySpec g = paper_g_spec(inst);
    for (long k = 1; k <= 3; ++k)
      need(exp_sum_bruteforce(g, 3, k) == pipe->sStar[k - 1],
           "brute-force cross-check failed at k = " + std::to_string(k));
    need(pipe->lstar.has_value() && pipe->lstar->degree() == 9,
         "L* must have degree 9");
    LPolynomial l = *pipe->lstar;
    for (long u : {1L, 3L, 9L}) {
      LinearFactorDivision div = divide_linear_factor(l, Rat(u));
      need(div.exact, "(1 - " + std::to_string(u) + "T) does not divide L*");
      l = div.quotient;
    }
    std::vector<Rat> slopes = newton_polygon_slopes(*pipe->lstar);
    need(slopes == rat_slopes({0, 1, 1, 2, 2, 2, 3, 3, 4}),
         "L* slopes are not {0,1,1,2,2,2,3,3,4}");
    // slopes must equal the Hodge polygon of the polytope
    std::vector<Int> h = hodge_numbers(poly());
    std::vector<Rat> hpSlopes;
    for (size_t k = 0; k < h.size(); ++k)
      for (Int c = 0; c < h[k]; ++c) hpSlopes.emplace_back(static_cast<long>(k));
    need(slopes == hpSlopes, "NP(L*) != HP");
    double q52 = std::pow(3.0, 2.5);
    need_moduli(*pipe->lstar, {1.0, 3.0, 9.0, q52, q52, q52, q52, q52, q52},
                "L*");
    std::vector<long> hist = weight_histogram(*pipe->lstar, Int(3), 5);
    need(hist == std::vector<long>{1, 0, 1, 0, 1, 6},
         "weight histogram (" + join(hist) + ") != (1,0,1,0,1,6)");
    return "L* degree 9 = (1-T)(1-3T)(1-9T) * six weight-5 roots; NP = HP";
  });

  gate.criterion(9, "derived L-function two ways", 60.0, [&]() -> std::string {
    need(pipe.has_value() && pipe->lDerived && pipe->lDirect,
         "pipeline unavailable");
    need(pipe->lDerived->coeffs == pipe->lDirect->coeffs,
         "substitution and power-sum routes disagree");
    need(pipe->lDerived->degree() == 8, "derived degree != 8");
    LPolynomial l = *pipe->lDerived;
    for (long u : {1L, 3L}) {
      LinearFactorDivision div = divide_linear_factor(l, Rat(u));
      need(div.exact, "(1 - " + std::to_string(u) + "T) does not divide L");
      l = div.quotient;
    }
    need(newton_polygon_slopes(*pipe->lDerived) ==
             rat_slopes({0, 0, 1, 1, 1, 2, 2, 3}),
         "derived slopes are not {0,0,1,1,1,2,2,3}");
    double q32 = std::pow(3.0, 1.5);
    need_moduli(*pipe->lDerived, {1.0, 3.0, q32, q32, q32, q32, q32, q32},
                "derived L");
    return "both routes agree; degree 8, trivial (1-T)(1-3T), six |root| = 3^(3/2)";
  });

  gate.criterion(10, "bound and conjugation symmetry", 60.0,
                 [&]() -> std::string {
    need(pipe.has_value(), "pipeline unavailable");
    BoundReport br = verify_bound(inst, pipe->sConstrained);
    need(br.rows.size() == 9, "bound must cover k = 1..9");
    for (const BoundCheckRow& r : br.rows)
      need(r.pass, "bound fails at k = " + std::to_string(r.k));
    need(conjugation_symmetric(*pipe->lstar), "L* not conjugation-symmetric");
    return "|S_k| <= 6q^{3k/2} + q^k + 1 for k = 1..9; conjugation symmetry holds";
  });

  gate.criterion(11, "control instances", 300.0, [&]() -> std::string {
    // x + 1/x at p in {3, 5, 7}
    LaurentPolySpec seg = concrete(1, {{1, {1}}, {1, {-1}}});
    Polytope segPoly = Polytope::build(spec_of(1, {{1}, {-1}}));
    need(lfunction_degree(segPoly) == 2, "segment degree != 2");
    need(hodge_numbers(segPoly) == std::vector<Int>{1, 1}, "segment H != (1,1)");
    for (long p : {3L, 5L, 7L}) {
      std::vector<Cyclotomic> sums;
      for (long k = 1; k <= 2; ++k)
        sums.push_back(exp_sum_bruteforce(seg, p, k));
      LPolynomial l = reconstruct_l_polynomial(sums, 2, 1);
      need(newton_polygon_slopes(l) == rat_slopes({0, 1}),
           "segment slopes != {0,1} at p = " + std::to_string(p));
      double sq = std::sqrt(double(p));
      need_moduli(l, {sq, sq}, "segment p = " + std::to_string(p));
    }
    // the rank-3 Kloosterman triangle at p = 5
    LaurentPolySpec kl = concrete(2, {{1, {1, 0}}, {1, {0, 1}}, {1, {-1, -1}}});
    Polytope klPoly = Polytope::build(spec_of(2, {{1, 0}, {0, 1}, {-1, -1}}));
    need(lfunction_degree(klPoly) == 3, "triangle degree != 3");
    need(hodge_numbers(klPoly) == std::vector<Int>{1, 1, 1},
         "triangle H != (1,1,1)");
    std::vector<Cyclotomic> sums;
    for (long k = 1; k <= 3; ++k) sums.push_back(exp_sum_bruteforce(kl, 5, k));
    LPolynomial l = reconstruct_l_polynomial(sums, 3, 2);
    need(newton_polygon_slopes(l) == rat_slopes({0, 1, 2}),
         "triangle slopes != {0,1,2}");
    need_moduli(l, {5.0, 5.0, 5.0}, "triangle");
    // conjecture agreement at n = 2 against the oracle weight histogram
    std::vector<long> hist = weight_histogram(l, Int(5), 2);
    std::vector<Int> ledger;
    for (long x : hist) ledger.emplace_back(x);
    for (const ConjectureReport& r :
         counterexample_report(klPoly, ledger, "oracle histogram"))
      need(r.agree.value_or(false),
           "triangle conjecture disagrees at k = " + std::to_string(r.k));
    return "segment and triangle controls reproduce the classical values";
  });

  gate.criterion(12, "randomized property suites", 60.0, [&]() -> std::string {
    std::vector<props::SuiteResult> suites =
        props::run_all_property_suites(20240901);
    std::ostringstream os;
    for (const props::SuiteResult& s : suites) {
      need(s.cases >= 100, s.name + ": fewer than 100 cases");
      need(s.pass, s.name + ": " + s.detail);
      os << s.name << " (" << s.cases << " cases, "
         << static_cast<long>(s.seconds * 1000) << "ms); ";
    }
    return os.str();
  });

  return gate.report();
}
