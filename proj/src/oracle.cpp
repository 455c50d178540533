#include "toricsum/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace toricsum {

namespace {

IntVec vec(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

void check_instance(const PaperInstance& inst) {
  for (long ai : inst.a)
    if (ai % inst.p == 0)
      throw std::invalid_argument("paper instance: coefficient is 0 mod p");
}

Cyclotomic counts_to_cyclotomic(long p, const std::vector<long long>& counts,
                                long twist) {
  Cyclotomic acc = Cyclotomic::zero(p);
  for (long t = 0; t < p; ++t) {
    if (counts[t] == 0) continue;
    acc += Cyclotomic::zeta_pow(p, t * twist) * Rat(static_cast<long>(counts[t]));
  }
  return acc;
}

void check_twist(long p, long twist) {
  if (twist % p == 0)
    throw std::invalid_argument("character twist must be nonzero mod p");
}

}  // namespace

LaurentPolySpec paper_g_exponents() {
  LaurentPolySpec g;
  g.n = 5;
  SymbolicNonzero s;
  g.terms.push_back({s, vec({1, 0, 0, 0, 0})});
  g.terms.push_back({s, vec({0, 1, 0, 0, 0})});
  g.terms.push_back({s, vec({0, 0, 1, 0, 0})});
  g.terms.push_back({s, vec({0, 0, 0, 1, 0})});
  g.terms.push_back({Int(-1), vec({0, 0, 0, 0, 1})});
  g.terms.push_back({s, vec({-1, -1, 0, 0, 1})});
  g.terms.push_back({s, vec({0, 0, -1, -1, 1})});
  return g;
}

LaurentPolySpec paper_g_spec(const PaperInstance& inst) {
  check_instance(inst);
  LaurentPolySpec g = paper_g_exponents();
  for (int i = 0; i < 4; ++i) g.terms[i].coeff = Int(inst.a[i]);
  g.terms[5].coeff = Int(inst.a[4]);
  g.terms[6].coeff = Int(inst.a[5]);
  return g;
}

Cyclotomic exp_sum_bruteforce(const LaurentPolySpec& f, long p, long k,
                              long twist) {
  validate(f, Int(p));
  check_twist(p, twist);
  ExtField field = ExtField::build(p, k);
  long n = f.n;
  long units = field.units();
  double budget = std::pow(static_cast<double>(units), static_cast<double>(n));
  if (budget > 1e8)
    throw BudgetExceeded(
        "exp_sum_bruteforce: (q^k - 1)^n > 1e8; use the fast path");

  // Precompute, per term, the coefficient log and exponent vector.
  struct Term {
    long coeffLog;
    std::vector<long> exp;
  };
  std::vector<Term> terms;
  for (const LaurentTerm& t : f.terms) {
    if (is_symbolic(t.coeff))
      throw std::invalid_argument(
          "exp_sum_bruteforce: symbolic coefficient; supply concrete values");
    uint32_t c = field.from_base(to_long(std::get<Int>(t.coeff) % p));
    Term tt;
    tt.coeffLog = field.log(c);
    for (const Int& e : t.exp) tt.exp.push_back(to_long(e));
    terms.push_back(std::move(tt));
  }

  std::vector<long long> counts(p, 0);
  std::vector<long> idx(n, 0);  // x_j = generator^{idx_j}
  while (true) {
    uint32_t val = 0;
    for (const Term& t : terms) {
      long e = t.coeffLog;
      for (long j = 0; j < n; ++j) e += idx[j] * t.exp[j];
      val = field.add(val, field.exp(e));
    }
    ++counts[field.trace(val)];
    long j = 0;
    while (j < n) {
      if (++idx[j] < units) break;
      idx[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return counts_to_cyclotomic(p, counts, twist);
}

Cyclotomic constrained_sum(const PaperInstance& inst, long k, long twist) {
  check_instance(inst);
  check_twist(inst.p, twist);
  ExtField field = ExtField::build(inst.p, k);
  long units = field.units();
  double budget = std::pow(static_cast<double>(units), 4.0);
  if (budget > 1e8)
    throw BudgetExceeded("constrained_sum: (q^k - 1)^4 > 1e8");

  uint32_t a1 = field.from_base(inst.a[0]), a2 = field.from_base(inst.a[1]);
  uint32_t a3 = field.from_base(inst.a[2]), a4 = field.from_base(inst.a[3]);
  uint32_t a5 = field.from_base(inst.a[4]), a6 = field.from_base(inst.a[5]);
  uint32_t one = field.from_base(1);

  std::vector<long long> counts(inst.p, 0);
  // x4 is determined by (x1, x2, x3) through the constraint
  // a6/(x3 x4) = 1 - a5/(x1 x2), when the right side is nonzero.
  for (long i1 = 0; i1 < units; ++i1) {
    uint32_t x1 = field.exp(i1);
    for (long i2 = 0; i2 < units; ++i2) {
      uint32_t x2 = field.exp(i2);
      uint32_t w = field.sub(one, field.mul(a5, field.inv(field.mul(x1, x2))));
      if (w == 0) continue;
      uint32_t partial12 = field.add(field.mul(a1, x1), field.mul(a2, x2));
      for (long i3 = 0; i3 < units; ++i3) {
        uint32_t x3 = field.exp(i3);
        uint32_t x4 = field.mul(a6, field.inv(field.mul(x3, w)));
        uint32_t s = field.add(
            partial12, field.add(field.mul(a3, x3), field.mul(a4, x4)));
        ++counts[field.trace(s)];
      }
    }
  }
  return counts_to_cyclotomic(inst.p, counts, twist);
}

Cyclotomic constrained_from_star(const Cyclotomic& star, long k, long p) {
  Rat scale = make_rat(Int(1), int_pow(Int(p), static_cast<unsigned long>(k)));
  return (star + Cyclotomic::one(p)) * scale;
}

std::vector<Cyclotomic> kloosterman3_table(const ExtField& field, long twist) {
  long p = field.p();
  check_twist(p, twist);
  long n = field.units();

  std::vector<long> tr(n);
  for (long j = 0; j < n; ++j) tr[j] = field.trace(field.exp(j));

  // two exact convolutions over Z/n of the trace-class indicator vectors
  std::vector<long long> conv2(static_cast<size_t>(n) * p, 0);
  for (long i = 0; i < n; ++i) {
    const long ti = tr[i];
    for (long m = 0; m < n; ++m) {
      long j = m - i;
      if (j < 0) j += n;
      ++conv2[static_cast<size_t>(m) * p + (ti + tr[j]) % p];
    }
  }
  std::vector<long long> conv3(static_cast<size_t>(n) * p, 0);
  for (long i = 0; i < n; ++i) {
    const long ti = tr[i];
    for (long m = 0; m < n; ++m) {
      long j = m - i;
      if (j < 0) j += n;
      const long long* src = &conv2[static_cast<size_t>(j) * p];
      long long* dst = &conv3[static_cast<size_t>(m) * p];
      for (long r = 0; r < p; ++r) dst[(r + ti) % p] += src[r];
    }
  }

  std::vector<Cyclotomic> table;
  table.reserve(n);
  for (long m = 0; m < n; ++m) {
    std::vector<long long> counts(conv3.begin() + static_cast<size_t>(m) * p,
                                  conv3.begin() + static_cast<size_t>(m + 1) * p);
    table.push_back(counts_to_cyclotomic(p, counts, twist));
  }
  return table;
}

Cyclotomic s_star_fast(const PaperInstance& inst, long k, long twist) {
  check_instance(inst);
  check_twist(inst.p, twist);
  ExtField field = ExtField::build(inst.p, k);
  long n = field.units();
  if (n > 20000)
    throw BudgetExceeded("s_star_fast: q^k - 1 exceeds the 2e4 cap");

  std::vector<Cyclotomic> kl3 = kloosterman3_table(field, twist);

  long la = field.log(field.mul(field.mul(field.from_base(inst.a[0]),
                                          field.from_base(inst.a[1])),
                                field.from_base(inst.a[4])));
  long lb = field.log(field.mul(field.mul(field.from_base(inst.a[2]),
                                          field.from_base(inst.a[3])),
                                field.from_base(inst.a[5])));
  long lneg = field.log(field.neg(field.from_base(1)));  // log(-1)

  Cyclotomic acc = Cyclotomic::zero(inst.p);
  for (long j = 0; j < n; ++j) {
    long m1 = (j + la) % n;
    long m2 = (j + lb) % n;
    long t = field.trace(field.exp(j + lneg));  // Tr(-x5)
    acc += kl3[m1] * kl3[m2] * Cyclotomic::zeta_pow(inst.p, t * twist);
  }
  return acc;
}

LPolynomial reconstruct_l_polynomial(const std::vector<Cyclotomic>& sums,
                                     int d, int n) {
  // L*(f,T)^{(-1)^{n-1}} = prod (1 - g_i T); its power sums relate to the
  // torus sums by sum g_i^k = (-1)^n S*_k.
  if (n % 2 == 1) return l_from_power_sums(sums, d);
  std::vector<Cyclotomic> flipped;
  flipped.reserve(sums.size());
  for (const Cyclotomic& s : sums) flipped.push_back(-s);
  return l_from_power_sums(flipped, d);
}

BoundReport verify_bound(const PaperInstance& inst,
                         const std::vector<Cyclotomic>& constrainedSums) {
  BoundReport report;
  double q = static_cast<double>(inst.p);
  for (size_t i = 0; i < constrainedSums.size(); ++i) {
    long k = static_cast<long>(i) + 1;
    double bound = 6.0 * std::pow(q, 1.5 * k) + std::pow(q, k) + 1.0;
    double worst = 0.0;
    for (long m = 1; m < inst.p; ++m)
      worst = std::max(worst, std::abs(constrainedSums[i].embed(m)));
    bool pass = worst <= bound * (1.0 + 1e-9);
    report.rows.push_back(BoundCheckRow{k, worst, bound, pass});
    if (!pass) report.pass = false;
  }
  return report;
}

}  // namespace toricsum
