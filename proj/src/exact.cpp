#include "toricsum/exact.hpp"

namespace toricsum {

Int lcm_of_denominators(const std::vector<Rat>& xs) {
  if (xs.empty()) throw std::invalid_argument("lcm_of_denominators: empty list");
  Int l = 1;
  for (const Rat& x : xs) {
    Int d = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

long p_adic_valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("p_adic_valuation: zero input");
  long v = 0;
  Int m = abs(n), q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

long long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
  return v.get_si();
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace toricsum
