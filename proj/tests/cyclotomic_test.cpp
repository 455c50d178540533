#include <doctest.h>

#include "toricsum/cyclotomic.hpp"

using namespace toricsum;

TEST_CASE("cyclotomic arithmetic basics") {
  long p = 3;
  Cyclotomic z = Cyclotomic::zeta_pow(p, 1);
  Cyclotomic z2 = Cyclotomic::zeta_pow(p, 2);
  // 1 + zeta + zeta^2 = 0
  CHECK((Cyclotomic::one(p) + z + z2).is_zero());
  // zeta * zeta^2 = 1
  CHECK(z * z2 == Cyclotomic::one(p));
  CHECK(Cyclotomic::zeta_pow(p, 5) == z2);
  CHECK(Cyclotomic::zeta_pow(p, -1) == z2);

  // p = 2: zeta = -1
  CHECK(Cyclotomic::zeta_pow(2, 1) == Cyclotomic::from_rational(2, Rat(-1)));
}

TEST_CASE("galois action and conjugation") {
  long p = 5;
  Cyclotomic x = Cyclotomic::zeta_pow(p, 1) * Rat(3) +
                 Cyclotomic::zeta_pow(p, 3) * Rat(-2) + Cyclotomic::one(p);
  CHECK(x.galois(1) == x);
  CHECK(x.conj() == x.galois(4));
  CHECK(x.conj().conj() == x);
  // galois is multiplicative on zeta powers
  CHECK(Cyclotomic::zeta_pow(p, 2).galois(3) == Cyclotomic::zeta_pow(p, 6));
  // the full orbit sum of zeta is -1
  Cyclotomic orbit = Cyclotomic::zero(p);
  for (long m = 1; m < p; ++m) orbit += Cyclotomic::zeta_pow(p, 1).galois(m);
  CHECK(orbit == Cyclotomic::from_rational(p, Rat(-1)));
}

TEST_CASE("zeta valuation") {
  long p = 3;
  // v(p) = p - 1
  CHECK(zeta_valuation(Cyclotomic::from_rational(p, Rat(p))) == p - 1);
  CHECK(zeta_valuation(Cyclotomic::from_rational(5, Rat(5))) == 4);
  // v(zeta - zeta^2) = 1
  Cyclotomic u = Cyclotomic::zeta_pow(p, 1) - Cyclotomic::zeta_pow(p, 2);
  CHECK(zeta_valuation(u) == 1);
  // 1 + 3 zeta maps to 4 under zeta -> 1: a unit
  Cyclotomic w = Cyclotomic::one(p) + Cyclotomic::zeta_pow(p, 1) * Rat(3);
  CHECK(zeta_valuation(w) == 0);
  CHECK_FALSE(zeta_valuation(Cyclotomic::zero(p)).has_value());
  CHECK_THROWS_AS(zeta_valuation(Cyclotomic::from_rational(p, make_rat(1, 2))),
                  std::invalid_argument);
  // 1 - zeta is a uniformizer
  CHECK(zeta_valuation(Cyclotomic::one(p) - Cyclotomic::zeta_pow(p, 1)) == 1);
  // p = 2: (1 - zeta) = 2
  CHECK(zeta_valuation(Cyclotomic::from_rational(2, Rat(8))) == 3);
}

TEST_CASE("ord_q extends to rational coordinates") {
  long p = 3;
  CHECK(*ord_q(Cyclotomic::from_rational(p, Rat(3))) == 1);
  CHECK(*ord_q(Cyclotomic::from_rational(p, Rat(9))) == 2);
  CHECK(*ord_q(Cyclotomic::from_rational(p, make_rat(1, 3))) == -1);
  CHECK(*ord_q(Cyclotomic::one(p) - Cyclotomic::zeta_pow(p, 1)) ==
        make_rat(1, 2));
  CHECK(*ord_q(Cyclotomic::from_rational(p, make_rat(2, 5))) == 0);
  CHECK_FALSE(ord_q(Cyclotomic::zero(p)).has_value());
}

TEST_CASE("embeddings") {
  long p = 5;
  Cyclotomic z = Cyclotomic::zeta_pow(p, 1);
  for (long m = 1; m < p; ++m) {
    std::complex<double> v = z.embed(m);
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
  }
  // sum of all unit roots is -1... as embedded values
  Cyclotomic s = Cyclotomic::zero(p);
  for (long e = 1; e < p; ++e) s += Cyclotomic::zeta_pow(p, e);
  CHECK(std::abs(s.embed(1) - std::complex<double>(-1, 0)) < 1e-12);
}

TEST_CASE("coordinates stay canonical") {
  long p = 5;
  Cyclotomic a = Cyclotomic::zeta_pow(p, 4);  // folded representation
  RatVec want(p - 1, Rat(-1));
  CHECK(a.coords() == want);
  CHECK((a * a) == Cyclotomic::zeta_pow(p, 8));
  CHECK(a.is_integral());
  CHECK_FALSE(a.is_rational());
  CHECK(Cyclotomic::from_rational(p, Rat(7)).is_rational());
}
