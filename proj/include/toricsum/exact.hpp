#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace toricsum {

// Exact scalars shared by every module. Rat values are kept canonical
// (lowest terms, positive denominator) by gmp as long as they are built
// through make_rat or arithmetic on canonical operands.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Signals a failed internal cross-check (two exact routes disagreeing).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Raised when an exact enumeration would exceed its documented budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// lcm of the reduced denominators; rejects an empty list.
Int lcm_of_denominators(const std::vector<Rat>& xs);

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
Int binomial(long n, long k);

Int int_pow(const Int& base, unsigned long e);

// Multiplicity of the prime p in n (n != 0).
long p_adic_valuation(const Int& n, const Int& p);

long long to_long(const Int& v);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace toricsum
