#include <doctest.h>

#include "toricsum/int_matrix.hpp"
#include "toricsum/lp.hpp"

using namespace toricsum;

namespace {

IntMatrix mat(int r, int c, std::initializer_list<long> vals) {
  std::vector<Int> e;
  for (long v : vals) e.emplace_back(v);
  return IntMatrix(r, c, std::move(e));
}

RatVec rats(std::initializer_list<long> vals) {
  RatVec out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("det_exact basics") {
  CHECK(det_exact(IntMatrix::identity(5)) == 1);
  CHECK(det_exact(mat(2, 2, {2, 4, 6, 8})) == -8);
  CHECK(det_exact(mat(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(det_exact(mat(1, 1, {-7})) == -7);
  // zero pivot forces a row swap
  CHECK(det_exact(mat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det of the unimodular facet simplices of the shipped instance") {
  // columns e_1..e_5: the first facet's vertex matrix
  CHECK(abs(det_exact(IntMatrix::identity(5))) == 1);
  IntMatrix m = IntMatrix::identity(5);
  // replace the last two columns by (-1,-1,0,0,1) and (0,0,-1,-1,1)
  for (int i = 0; i < 5; ++i) {
    m.at(i, 3) = 0;
    m.at(i, 4) = 0;
  }
  m.at(0, 3) = -1;
  m.at(1, 3) = -1;
  m.at(4, 3) = 1;
  m.at(2, 4) = -1;
  m.at(3, 4) = -1;
  m.at(4, 4) = 1;
  CHECK(abs(det_exact(m)) == 1);
}

TEST_CASE("smith_normal_form small cases") {
  SnfResult id = smith_normal_form(IntMatrix::identity(4));
  for (const Int& d : id.diag) CHECK(d == 1);

  SnfResult s = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
  CHECK(s.diag == std::vector<Int>{2, 4});

  // Kloosterman facet {(0,1),(-1,-1)}: unit determinant forces unit factors
  SnfResult k = smith_normal_form(mat(2, 2, {0, -1, 1, -1}));
  CHECK(k.diag == std::vector<Int>{1, 1});

  // transform identity left*m*right = diag
  IntMatrix m = mat(3, 2, {2, 6, 4, 8, 6, 10});
  SnfResult r = smith_normal_form(m);
  IntMatrix prod = r.left.mul(m).mul(r.right);
  for (int i = 0; i < prod.rows; ++i)
    for (int j = 0; j < prod.cols; ++j)
      CHECK(prod.at(i, j) == (i == j && i < 2 ? r.diag[i] : Int(0)));
  CHECK(abs(det_exact(r.left)) == 1);
  CHECK(abs(det_exact(r.right)) == 1);
}

TEST_CASE("lp_solve on the weight-style programs") {
  // minimize sum c_j with sum c_j V_j = 0 over the seven generators: zero
  std::vector<std::vector<long>> gens = {
      {1, 0, 0, 0, 0},  {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
      {0, 0, 0, 0, 1},  {-1, -1, 0, 0, 1}, {0, 0, -1, -1, 1}};
  auto make = [&](std::initializer_list<long> target) {
    LpProblem prob;
    prob.a.assign(5, RatVec(7, Rat(0)));
    for (int j = 0; j < 7; ++j)
      for (int i = 0; i < 5; ++i) prob.a[i][j] = Rat(gens[j][i]);
    prob.b = rats(target);
    prob.cost.assign(7, Rat(1));
    return prob;
  };

  LpResult zero = lp_solve(make({0, 0, 0, 0, 0}));
  REQUIRE(zero.status == LpStatus::Optimal);
  CHECK(zero.value == 0);
  for (const Rat& x : zero.witness) CHECK(x == 0);

  LpResult w = lp_solve(make({1, 1, 0, 0, 1}));
  REQUIRE(w.status == LpStatus::Optimal);
  CHECK(w.value == 3);
  // witness feasibility, exactly
  RatVec sums(5, Rat(0));
  Rat total(0);
  for (int j = 0; j < 7; ++j) {
    CHECK(w.witness[j] >= 0);
    total += w.witness[j];
    for (int i = 0; i < 5; ++i) sums[i] += w.witness[j] * Rat(gens[j][i]);
  }
  CHECK(total == w.value);
  CHECK(sums == rats({1, 1, 0, 0, 1}));

  CHECK(lp_solve(make({0, 0, 0, 0, -1})).status == LpStatus::Infeasible);
}

TEST_CASE("lp_solve detects unbounded problems") {
  // minimize -x subject to x - y = 0: x can grow without bound
  LpProblem prob;
  prob.a = {rats({1, -1})};
  prob.b = rats({0});
  prob.cost = {Rat(-1), Rat(0)};
  CHECK(lp_solve(prob).status == LpStatus::Unbounded);
}

TEST_CASE("lcm_of_denominators") {
  CHECK(lcm_of_denominators(rats({1, -1, 1})) == 1);
  CHECK(lcm_of_denominators({make_rat(1, 2)}) == 2);
  CHECK(lcm_of_denominators({make_rat(1, 2), make_rat(1, 3)}) == 6);
  CHECK_THROWS_AS(lcm_of_denominators({}), std::invalid_argument);
}

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 1) == 0);
}
