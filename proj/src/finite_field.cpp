#include "toricsum/finite_field.hpp"

#include <algorithm>

namespace toricsum {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<long>;  // coefficients mod p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& mod, long p) {
  Poly w(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      w[i + j] = (w[i + j] + a[i] * b[j]) % p;
  }
  // reduce by the monic modulus of degree deg
  size_t deg = mod.size() - 1;
  for (size_t i = w.size(); i-- > deg;) {
    long c = w[i];
    if (c == 0) continue;
    w[i] = 0;
    for (size_t j = 0; j < deg; ++j)
      w[i - deg + j] = ((w[i - deg + j] - c * mod[j]) % p + p) % p;
  }
  w.resize(deg);
  return w;
}

Poly pow_mod(Poly base, Int e, const Poly& mod, long p) {
  Poly r(mod.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul_mod(r, base, mod, p);
    base = mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
  trim(a);
  trim(b);
  auto inv_mod_p = [p](long v) {
    long r = 1, base = ((v % p) + p) % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    long lead = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
      long c = a.back() * lead % p;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree k.
bool irreducible(const Poly& mod, long p) {
  size_t k = mod.size() - 1;
  if (k == 1) return true;
  Poly x = {0, 1};
  // x^{p^k} == x (mod f)
  Poly xp = pow_mod(x, int_pow(Int(p), static_cast<unsigned long>(k)), mod, p);
  Poly diff = xp;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^{p^{k/r}} - x, f) = 1 for every prime r | k
  for (long r = 2; r <= static_cast<long>(k); ++r) {
    if (k % r != 0) continue;
    bool rprime = is_prime(r);
    if (!rprime) continue;
    Poly xd = pow_mod(x, int_pow(Int(p), static_cast<unsigned long>(k / r)), mod, p);
    Poly d = xd;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = ((d[1] - 1) % p + p) % p;
    Poly g = poly_gcd(d, mod, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ExtField ExtField::build(long p, long k) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: p is not prime");
  if (k < 1) throw std::invalid_argument("build_field: k must be >= 1");
  Int qi = int_pow(Int(p), static_cast<unsigned long>(k));
  if (qi > kMaxOrder)
    throw BudgetExceeded("build_field: p^k exceeds the " +
                         std::to_string(kMaxOrder) + " cap");
  ExtField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = to_long(qi);

  // Smallest monic irreducible, elements ordered by digit encoding.
  long space = f.q_;
  for (long code = 0; code < space; ++code) {
    Poly mod(k + 1, 0);
    long c = code;
    for (long i = 0; i < k; ++i) {
      mod[i] = c % p;
      c /= p;
    }
    mod[k] = 1;
    if (irreducible(mod, p)) {
      f.mod_ = mod;
      break;
    }
  }

  auto decode = [&](uint32_t code) {
    Poly a(k, 0);
    long c = code;
    for (long i = 0; i < k; ++i) {
      a[i] = c % p;
      c /= p;
    }
    return a;
  };
  auto encode = [&](const Poly& a) {
    long code = 0;
    for (long i = k - 1; i >= 0; --i) code = code * p + (i < (long)a.size() ? a[i] : 0);
    return static_cast<uint32_t>(code);
  };

  // Smallest primitive element.
  std::vector<long> rs = prime_factors(f.q_ - 1);
  long gen = -1;
  for (long cand = 1; cand < f.q_; ++cand) {
    Poly a = decode(static_cast<uint32_t>(cand));
    bool ok = true;
    for (long r : rs) {
      Poly t = pow_mod(a, Int((f.q_ - 1) / r), f.mod_, p);
      trim(t);
      if (t.size() == 1 && t[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen < 0) throw ConsistencyError("no primitive element found");

  f.exp_.resize(f.q_ - 1);
  f.log_.assign(f.q_, -1);
  Poly g = decode(static_cast<uint32_t>(gen));
  Poly cur(k, 0);
  cur[0] = 1;
  for (long i = 0; i < f.q_ - 1; ++i) {
    f.exp_[i] = encode(cur);
    f.log_[f.exp_[i]] = i;
    cur = mul_mod(cur, g, f.mod_, p);
  }

  // trace(x) = x + x^p + ... + x^{p^{k-1}}, tabulated once
  f.trace_.assign(f.q_, 0);
  for (long code = 1; code < f.q_; ++code) {
    long lg = f.log_[code];
    uint32_t acc = 0;
    long e = lg;
    for (long i = 0; i < k; ++i) {
      acc = f.add(acc, f.exp_[e]);
      e = (e * p) % (f.q_ - 1);
    }
    if (acc >= static_cast<uint32_t>(p))
      throw ConsistencyError("trace landed outside the prime field");
    f.trace_[code] = acc;
  }
  return f;
}

uint32_t ExtField::add(uint32_t a, uint32_t b) const {
  uint32_t out = 0, mult = 1;
  for (long i = 0; i < k_; ++i) {
    long da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    out += mult * static_cast<uint32_t>((da + db) % p_);
    mult *= p_;
  }
  return out;
}

uint32_t ExtField::neg(uint32_t a) const {
  uint32_t out = 0, mult = 1;
  for (long i = 0; i < k_; ++i) {
    long da = a % p_;
    a /= p_;
    out += mult * static_cast<uint32_t>((p_ - da) % p_);
    mult *= p_;
  }
  return out;
}

uint32_t ExtField::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

uint32_t ExtField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("ExtField::inv(0)");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t ExtField::from_base(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

long ExtField::log(uint32_t a) const {
  if (a == 0) throw std::domain_error("ExtField::log(0)");
  return log_[a];
}

uint32_t ExtField::exp(long e) const {
  long n = q_ - 1;
  long r = e % n;
  if (r < 0) r += n;
  return exp_[r];
}

long ExtField::trace(uint32_t a) const { return trace_[a]; }

}  // namespace toricsum
