#include <doctest.h>

#include <set>

#include "toricsum/finite_field.hpp"

using namespace toricsum;

TEST_CASE("prime field construction") {
  ExtField f3 = ExtField::build(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.generator() == 2);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.trace(2) == 2);
}

TEST_CASE("F_9") {
  ExtField f = ExtField::build(3, 2);
  CHECK(f.q() == 9);
  // x^2 + 1 is the least irreducible monic quadratic over F_3
  CHECK(f.modulus() == std::vector<long>{1, 0, 1});
  // exp table covers the full unit group
  std::set<uint32_t> units;
  for (long i = 0; i < 8; ++i) units.insert(f.exp(i));
  CHECK(units.size() == 8);
  // trace restricted to the base field is 2x
  for (long x = 0; x < 3; ++x) CHECK(f.trace(f.from_base(x)) == (2 * x) % 3);
}

TEST_CASE("F_8") {
  ExtField f = ExtField::build(2, 3);
  CHECK(f.q() == 8);
  // x^3 + x + 1
  CHECK(f.modulus() == std::vector<long>{1, 1, 0, 1});
  // generator has multiplicative order 7
  uint32_t g = f.generator();
  uint32_t acc = 1;
  int order = 0;
  do {
    acc = f.mul(acc, g);
    ++order;
  } while (acc != 1);
  CHECK(order == 7);
}

TEST_CASE("trace is additive and onto") {
  ExtField f = ExtField::build(3, 3);
  // linearity on a sample of pairs
  for (uint32_t a = 0; a < 27; a += 5)
    for (uint32_t b = 0; b < 27; b += 7)
      CHECK(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % 3);
  // complete character sum: sum over all x of zeta^{Tr(x)} = 0, i.e. the
  // trace classes are equidistributed
  std::vector<long> counts(3, 0);
  for (long x = 0; x < f.q(); ++x) ++counts[f.trace(static_cast<uint32_t>(x))];
  CHECK(counts[0] == counts[1]);
  CHECK(counts[1] == counts[2]);
}

TEST_CASE("field ops satisfy the defining identities") {
  ExtField f = ExtField::build(5, 2);
  for (uint32_t a = 1; a < 25; ++a) {
    CHECK(f.mul(a, f.inv(a)) == f.from_base(1));
    CHECK(f.add(a, f.neg(a)) == 0);
  }
  // Frobenius fixes the base field
  for (long v = 0; v < 5; ++v) {
    uint32_t x = f.from_base(v);
    uint32_t x5 = x;
    for (int i = 0; i < 4; ++i) x5 = f.mul(x5, x);
    CHECK((x == 0 || x5 == x));
  }
}

TEST_CASE("build_field caps and validation") {
  CHECK_THROWS_AS(ExtField::build(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(ExtField::build(3, 12), BudgetExceeded);
}
