#include "toricsum/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace toricsum {

namespace {

constexpr long kMaxPrime = 23;  // keeps p - 1 <= 20 and embeddings cheap

bool small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Canonicalize a group-ring vector w (length p, value sum w_i zeta^i) using
// sum_{i<p} zeta^i = 0: coordinates are w_i - w_{p-1}.
RatVec canonicalize(long p, const RatVec& w) {
  RatVec c(p - 1);
  for (long i = 0; i + 1 < p; ++i) c[i] = w[i] - w[p - 1];
  return c;
}

}  // namespace

long Cyclotomic::check_prime(long p) {
  if (!small_prime(p) || p > kMaxPrime)
    throw std::invalid_argument("Cyclotomic: p must be a prime <= " +
                                std::to_string(kMaxPrime));
  return p;
}

Cyclotomic Cyclotomic::one(long p) { return from_rational(p, Rat(1)); }

Cyclotomic Cyclotomic::from_rational(long p, const Rat& v) {
  Cyclotomic x(p);
  x.c_[0] = v;
  return x;
}

Cyclotomic Cyclotomic::zeta_pow(long p, long e) {
  Cyclotomic x(p);
  long r = e % p;
  if (r < 0) r += p;
  if (r < p - 1) {
    x.c_[r] = 1;
  } else {
    for (long i = 0; i < p - 1; ++i) x.c_[i] = -1;
  }
  return x;
}

Cyclotomic Cyclotomic::from_coords(long p, RatVec coords) {
  if (static_cast<long>(coords.size()) != p - 1)
    throw std::invalid_argument("Cyclotomic: need p-1 coordinates");
  Cyclotomic x(p);
  x.c_ = std::move(coords);
  return x;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

bool Cyclotomic::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rat& v) { return v.get_den() == 1; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational())
    throw std::domain_error("Cyclotomic: value is not rational");
  return c_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (p_ != o.p_) throw std::invalid_argument("Cyclotomic: mixed primes");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (p_ != o.p_) throw std::invalid_argument("Cyclotomic: mixed primes");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(p_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (p_ != o.p_) throw std::invalid_argument("Cyclotomic: mixed primes");
  RatVec w(p_, Rat(0));
  for (long i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j + 1 < p_; ++j) {
      if (o.c_[j] == 0) continue;
      w[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  Cyclotomic r(p_);
  r.c_ = canonicalize(p_, w);
  return r;
}

Cyclotomic Cyclotomic::operator*(const Rat& s) const {
  Cyclotomic r(p_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Cyclotomic Cyclotomic::galois(long m) const {
  long r = m % p_;
  if (r < 0) r += p_;
  if (r == 0) throw std::invalid_argument("galois: m must be coprime to p");
  RatVec w(p_, Rat(0));
  for (long i = 0; i + 1 < p_; ++i) w[(i * r) % p_] += c_[i];
  Cyclotomic out(p_);
  out.c_ = canonicalize(p_, w);
  return out;
}

std::complex<double> Cyclotomic::embed(long m) const {
  std::complex<double> acc(0, 0);
  for (long i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>((i * m) % p_) /
                   static_cast<double>(p_);
    acc += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::optional<long> zeta_valuation(const Cyclotomic& x) {
  if (!x.is_integral())
    throw std::invalid_argument("zeta_valuation: non-integral coordinates");
  if (x.is_zero()) return std::nullopt;
  long p = x.prime();
  // (1-zeta)^{-1} = (1/p) * prod_{i=2}^{p-1} (1 - zeta^i)
  Cyclotomic unitPart = Cyclotomic::one(p);
  for (long i = 2; i < p; ++i)
    unitPart = unitPart * (Cyclotomic::one(p) - Cyclotomic::zeta_pow(p, i));

  Cyclotomic cur = x;
  long v = 0;
  while (true) {
    // divisible by (1-zeta) iff the image under zeta -> 1 vanishes mod p
    Rat imageSum(0);
    for (const Rat& c : cur.coords()) imageSum += c;
    Int num = imageSum.get_num();
    if (num % p != 0) return v;
    Cyclotomic scaled = cur * unitPart;
    RatVec next = scaled.coords();
    for (Rat& c : next) {
      Int numerator = c.get_num();
      if (numerator % p != 0)
        throw ConsistencyError("inexact division by (1 - zeta)");
      mpz_divexact_ui(numerator.get_mpz_t(), numerator.get_mpz_t(),
                      static_cast<unsigned long>(p));
      c = Rat(numerator);
    }
    cur = Cyclotomic::from_coords(p, std::move(next));
    ++v;
  }
}

std::optional<Rat> ord_q(const Cyclotomic& x) {
  if (x.is_zero()) return std::nullopt;
  long p = x.prime();
  Int den = 1;
  for (const Rat& c : x.coords())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  Cyclotomic scaled = x * Rat(den);
  long v = *zeta_valuation(scaled);
  long shift = p_adic_valuation(den, Int(p)) * (p - 1);
  return make_rat(Int(v - shift), Int(p - 1));
}

}  // namespace toricsum
