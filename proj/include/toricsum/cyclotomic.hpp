#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "toricsum/exact.hpp"

namespace toricsum {

// Exact element of Q(zeta_p), stored in the power basis 1, zeta, ...,
// zeta^{p-2} with the reduction zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
// Coordinates are canonical, so equality is coordinate equality.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(long p) : p_(check_prime(p)), c_(p - 1, Rat(0)) {}

  static Cyclotomic zero(long p) { return Cyclotomic(p); }
  static Cyclotomic one(long p);
  static Cyclotomic from_rational(long p, const Rat& v);
  static Cyclotomic zeta_pow(long p, long e);  // zeta^e, e taken mod p
  static Cyclotomic from_coords(long p, RatVec coords);  // length p-1

  long prime() const { return p_; }
  const RatVec& coords() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;  // all coordinates integers
  bool is_rational() const;  // coordinates 1..p-2 all zero
  Rat rational_value() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rat& s) const;
  bool operator==(const Cyclotomic& o) const = default;

  // Galois twist zeta -> zeta^m, gcd(m, p) = 1.
  Cyclotomic galois(long m) const;
  Cyclotomic conj() const { return galois(p_ - 1); }

  // Numeric value under the embedding zeta -> exp(2 pi i m / p).
  std::complex<double> embed(long m) const;

 private:
  static long check_prime(long p);
  long p_ = 0;
  RatVec c_;
};

// Largest power of (1 - zeta) dividing x in Z[zeta_p]; nullopt for x = 0.
// Rejects non-integral coordinates.
std::optional<long> zeta_valuation(const Cyclotomic& x);

// ord_q(x) with q = p, i.e. zeta-adic valuation / (p-1), extended to
// rational coordinates by clearing denominators. nullopt for x = 0.
std::optional<Rat> ord_q(const Cyclotomic& x);

}  // namespace toricsum
