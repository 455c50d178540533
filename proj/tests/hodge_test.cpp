#include <doctest.h>

#include "toricsum/hodge.hpp"
#include "toricsum/oracle.hpp"

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

IntVec ivec(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const Polytope& g_polytope() {
  static const Polytope p = Polytope::build(paper_g_exponents());
  return p;
}

}  // namespace

TEST_CASE("weight basics on the shipped instance") {
  const Polytope& p = g_polytope();
  CHECK(weight(p, ivec({0, 0, 0, 0, 0})) == Weight::of(Rat(0)));
  for (const IntVec& v : p.vertices) {
    bool zero = true;
    for (const Int& x : v) zero = zero && x == 0;
    if (!zero) CHECK(weight(p, v) == Weight::of(Rat(1)));
  }
  CHECK(weight(p, ivec({1, 1, 0, 0, 1})) == Weight::of(Rat(3)));
  CHECK_FALSE(weight(p, ivec({0, 0, 0, 0, -1})).finite());
}

TEST_CASE("weight and facet-form weight agree on all points of weight <= 3") {
  const Polytope& p = g_polytope();
  for (long k = 0; k <= 3; ++k) {
    WeightCount wc = count_weight_k_pyramid(p, k);
    for (const IntVec& u : wc.points) {
      Weight lp = weight(p, u);
      Weight ff = weight_by_facets(p, u);
      CHECK(lp == ff);
      CHECK(lp == Weight::of(Rat(k)));
    }
  }
}

TEST_CASE("weight counts of the shipped instance") {
  const Polytope& p = g_polytope();
  std::vector<long> expected = {1, 7, 28, 82, 196, 406};
  REQUIRE(pyramid_count_available(p));
  for (long k = 0; k <= 5; ++k) {
    CHECK(count_weight_k_pyramid(p, k).count == expected[k]);
    CHECK(count_weight_k_box(p, k).count == expected[k]);
  }
}

TEST_CASE("weight counts of control polytopes") {
  Polytope seg = Polytope::build(spec_of(1, {{1}, {-1}}));
  CHECK(count_weight_k(seg, 1).count == 2);
  CHECK(count_weight_k(seg, 0).count == 1);

  Polytope simplex2 = Polytope::build(spec_of(2, {{1, 0}, {0, 1}}));
  CHECK(count_weight_k(simplex2, 2).count == 3);

  // f = x^2 has D = 2; the box strategy must handle fractional targets
  Polytope sq = Polytope::build(spec_of(1, {{2}}));
  CHECK(sq.denominator() == 2);
  CHECK(count_weight_k_box(sq, 1).count == 1);  // the point u = 1
  CHECK(count_weight_k_box(sq, 2).count == 1);  // the point u = 2
}

TEST_CASE("hodge numbers") {
  std::vector<Int> hg = hodge_numbers(g_polytope());
  CHECK(hg == std::vector<Int>{1, 2, 3, 2, 1, 0});

  Polytope seg = Polytope::build(spec_of(1, {{1}, {-1}}));
  CHECK(hodge_numbers(seg) == std::vector<Int>{1, 1});

  Polytope simplex3 = Polytope::build(spec_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(hodge_numbers(simplex3) == std::vector<Int>{1, 0, 0, 0});
}

TEST_CASE("hodge polygon vertices") {
  HodgePolygon hp = hodge_polygon(g_polytope());
  std::vector<PolygonPoint> want = {
      {Rat(0), Rat(0)}, {Rat(1), Rat(0)},  {Rat(3), Rat(2)},
      {Rat(6), Rat(8)}, {Rat(8), Rat(14)}, {Rat(9), Rat(18)}};
  CHECK(hp.vertices == want);
  std::vector<PolygonPoint> breaks = {
      {Rat(3), Rat(2)}, {Rat(6), Rat(8)}, {Rat(8), Rat(14)}};
  CHECK(hp.breakPoints == breaks);

  Polytope simplex = Polytope::build(spec_of(2, {{1, 0}, {0, 1}}));
  HodgePolygon hs = hodge_polygon(simplex);
  CHECK(hs.vertices == std::vector<PolygonPoint>{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}});

  Polytope seg = Polytope::build(spec_of(1, {{1}, {-1}}));
  HodgePolygon hseg = hodge_polygon(seg);
  CHECK(hseg.vertices ==
        std::vector<PolygonPoint>{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(1)}});
}

TEST_CASE("chain polygon") {
  std::vector<PolygonPoint> ch = chain_polygon(g_polytope(), 2);
  std::vector<PolygonPoint> want = {
      {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(8), Rat(7)}, {Rat(36), Rat(63)}};
  CHECK(ch == want);

  // 1-simplex: W(k) = 1 for every k
  Polytope s = Polytope::build(spec_of(1, {{1}}));
  std::vector<PolygonPoint> cs = chain_polygon(s, 2);
  CHECK(cs == std::vector<PolygonPoint>{
                  {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(1)}, {Rat(3), Rat(3)}});
}

TEST_CASE("lfunction degree") {
  CHECK(lfunction_degree(g_polytope()) == 9);
  CHECK(lfunction_degree(Polytope::build(spec_of(1, {{1}, {-1}}))) == 2);
  CHECK(lfunction_degree(Polytope::build(spec_of(2, {{1, 0}, {0, 1}}))) == 1);
}

TEST_CASE("weight homogeneity on the shipped instance") {
  const Polytope& p = g_polytope();
  IntVec u = ivec({1, 1, 0, 0, 1});
  Weight w1 = weight(p, u);
  for (long lam = 0; lam <= 3; ++lam) {
    IntVec su(u.size());
    for (size_t i = 0; i < u.size(); ++i) su[i] = u[i] * lam;
    CHECK(weight(p, su) == Weight::of(*w1.value * Rat(lam)));
  }
}

TEST_CASE("hodge transform inversion on the shipped counts") {
  const Polytope& p = g_polytope();
  std::vector<Int> w = weight_counts_upto(p, 5);
  std::vector<Int> h = hodge_numbers_from_counts(w, p.n, p.denominator());
  std::vector<Int> back = inverse_hodge_transform(h, p.n, p.denominator(), 5);
  CHECK(back == w);
}

TEST_CASE("hodge data endpoint identity") {
  HodgeData hd = hodge_data(g_polytope());
  Int sum = 0;
  for (const Int& h : hd.hodgeNumbers) sum += h;
  CHECK(sum == hd.degree);
  CHECK(hd.degree == 9);
}
