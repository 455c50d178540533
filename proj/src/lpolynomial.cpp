#include "toricsum/lpolynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace toricsum {

LPolynomial l_from_power_sums(const std::vector<Cyclotomic>& sums, int d) {
  if (static_cast<int>(sums.size()) != d)
    throw std::invalid_argument("l_from_power_sums: need exactly d sums");
  if (d < 0) throw std::invalid_argument("l_from_power_sums: negative degree");
  long p = d > 0 ? sums[0].prime() : 2;
  LPolynomial l;
  l.p = p;
  l.coeffs.assign(d + 1, Cyclotomic::zero(p));
  l.coeffs[0] = Cyclotomic::one(p);
  // k c_k = sum_{i=1..k} S_i c_{k-i}  (from the logarithmic derivative)
  for (int k = 1; k <= d; ++k) {
    Cyclotomic acc = Cyclotomic::zero(p);
    for (int i = 1; i <= k; ++i) acc += sums[i - 1] * l.coeffs[k - i];
    l.coeffs[k] = acc * Rat(1, k);
  }
  return l;
}

std::vector<Cyclotomic> power_sums_of(const LPolynomial& l, int kmax) {
  long p = l.p;
  int d = l.degree();
  // k c_k = -sum_{i=1..k} p_i c_{k-i} with p_k the root power sums,
  // c_j = 0 past the degree; returns S_k = -p_k.
  std::vector<Cyclotomic> ps;
  for (int k = 1; k <= kmax; ++k) {
    Cyclotomic acc = Cyclotomic::zero(p);
    if (k <= d) acc += l.coeffs[k] * Rat(k);
    for (int i = 1; i < k; ++i)
      if (k - i <= d) acc += ps[i - 1] * l.coeffs[k - i];
    ps.push_back(-acc);
  }
  std::vector<Cyclotomic> out;
  out.reserve(ps.size());
  for (Cyclotomic& v : ps) out.push_back(-v);
  return out;
}

LinearFactorDivision divide_linear_factor(const LPolynomial& l, const Rat& u) {
  int d = l.degree();
  LinearFactorDivision res;
  if (d < 1) return res;
  std::vector<Cyclotomic> b(d, Cyclotomic::zero(l.p));
  b[0] = l.coeffs[0];
  for (int k = 1; k < d; ++k) b[k] = l.coeffs[k] + b[k - 1] * u;
  Cyclotomic rem = l.coeffs[d] + b[d - 1] * u;
  if (!rem.is_zero()) return res;
  res.exact = true;
  res.quotient.p = l.p;
  res.quotient.coeffs = std::move(b);
  return res;
}

LPolynomial substitute_and_strip_unit_pole(const LPolynomial& l, const Int& q) {
  // (1 - T) | L, checked exactly before substituting T -> T/q.
  Cyclotomic at_one = Cyclotomic::zero(l.p);
  for (const Cyclotomic& c : l.coeffs) at_one += c;
  if (!at_one.is_zero())
    throw ConsistencyError(
        "substitute_and_strip_unit_pole: (1 - T) does not divide L");
  LPolynomial scaled;
  scaled.p = l.p;
  Rat inv_q = make_rat(Int(1), q);
  Rat f(1);
  for (const Cyclotomic& c : l.coeffs) {
    scaled.coeffs.push_back(c * f);
    f *= inv_q;
  }
  LinearFactorDivision div = divide_linear_factor(scaled, inv_q);
  if (!div.exact)
    throw ConsistencyError(
        "substitute_and_strip_unit_pole: (1 - T/q) division left a remainder");
  return div.quotient;
}

std::vector<Rat> newton_polygon_slopes(const LPolynomial& l) {
  int d = l.degree();
  if (d < 0 || l.coeffs[d].is_zero())
    throw std::invalid_argument("newton_polygon_slopes: top coefficient is 0");
  struct Pt {
    Rat x, y;
  };
  std::vector<Pt> pts;
  for (int k = 0; k <= d; ++k) {
    std::optional<Rat> o = ord_q(l.coeffs[k]);
    if (o) pts.push_back(Pt{Rat(k), *o});
  }
  // lower convex hull, left to right
  std::vector<Pt> hull;
  auto cross = [](const Pt& o, const Pt& a, const Pt& b) -> Rat {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  for (const Pt& pt : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  std::vector<Rat> slopes;
  for (size_t i = 1; i < hull.size(); ++i) {
    Rat run = hull[i].x - hull[i - 1].x;
    Rat slope = (hull[i].y - hull[i - 1].y) / run;
    long len = to_long(run.get_num());
    for (long t = 0; t < len; ++t) slopes.push_back(slope);
  }
  return slopes;
}

std::vector<std::vector<double>> reciprocal_root_moduli(const LPolynomial& l) {
  int d = l.degree();
  if (d > 12)
    throw std::invalid_argument("reciprocal_root_moduli: degree > 12");
  std::vector<std::vector<double>> out;
  for (long m = 1; m < l.p; ++m) {
    std::vector<std::complex<double>> a(d + 1);
    for (int k = 0; k <= d; ++k) a[k] = l.coeffs[k].embed(m);
    if (std::abs(a[d]) == 0.0)
      throw ConsistencyError("vanishing leading coefficient in an embedding");
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -a[i] / a[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("complex root finder failed to converge");
    std::vector<double> moduli;
    for (int i = 0; i < d; ++i) {
      double r = std::abs(solver.eigenvalues()[i]);
      if (r == 0.0) throw ConsistencyError("zero root of an L-polynomial");
      moduli.push_back(1.0 / r);  // reciprocal-root modulus
    }
    std::sort(moduli.begin(), moduli.end());
    out.push_back(std::move(moduli));
  }
  return out;
}

std::vector<long> weight_histogram(const LPolynomial& l, const Int& q, int wmax,
                                   double tol) {
  double logq = std::log(q.get_d());
  std::vector<std::vector<double>> all = reciprocal_root_moduli(l);
  std::vector<long> hist(wmax + 1, 0);
  bool first = true;
  for (const std::vector<double>& moduli : all) {
    std::vector<long> h(wmax + 1, 0);
    for (double r : moduli) {
      double w = 2.0 * std::log(r) / logq;
      long wi = std::lround(w);
      if (wi < 0 || wi > wmax)
        throw ConsistencyError("root weight outside the admissible range");
      double expect = std::exp(0.5 * wi * logq);
      if (std::abs(r - expect) > tol * expect)
        throw ConsistencyError("root modulus is not an integral weight");
      ++h[wi];
    }
    if (first) {
      hist = h;
      first = false;
    } else if (h != hist) {
      throw ConsistencyError("weight histogram differs across embeddings");
    }
  }
  return hist;
}

bool conjugation_symmetric(const LPolynomial& l) {
  for (const Cyclotomic& c : l.coeffs)
    if (!(c == c.conj())) return false;
  return true;
}

}  // namespace toricsum
