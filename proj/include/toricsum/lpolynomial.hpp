#pragma once

#include <vector>

#include "toricsum/cyclotomic.hpp"

namespace toricsum {

// Polynomial 1 + c_1 T + ... + c_d T^d over Q(zeta_p), written through its
// reciprocal roots: L(T) = prod (1 - g_i T).
struct LPolynomial {
  long p = 0;
  std::vector<Cyclotomic> coeffs;  // c_0 = 1 first

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const LPolynomial&) const = default;
};

// Build L = prod (1 - g_i T) of degree d from the sums S_k = -(sum g_i^k),
// k = 1..d, by Newton's identities (exact).
LPolynomial l_from_power_sums(const std::vector<Cyclotomic>& sums, int d);

// Inverse direction: S_k = -(sum g_i^k) for k = 1..kmax from the
// coefficients; exact, works past the degree.
std::vector<Cyclotomic> power_sums_of(const LPolynomial& l, int kmax);

// L(T / q) / (1 - T / q); requires (1 - T) | L exactly, i.e. L(1) = 0.
LPolynomial substitute_and_strip_unit_pole(const LPolynomial& l, const Int& q);

// Quotient of L by (1 - u T), when the division is exact.
struct LinearFactorDivision {
  bool exact = false;
  LPolynomial quotient;
};
LinearFactorDivision divide_linear_factor(const LPolynomial& l, const Rat& u);

// Lower convex hull of (k, ord_q c_k); the slope multiset lists each slope
// with its horizontal length.
std::vector<Rat> newton_polygon_slopes(const LPolynomial& l);

// |g_i| for the reciprocal roots g_i, per complex embedding m = 1..p-1.
// Companion-matrix eigenvalues; meets a 1e-6 relative tolerance on degrees
// up to 12.
std::vector<std::vector<double>> reciprocal_root_moduli(const LPolynomial& l);

// Weight histogram: counts of roots with |g| ~ q^{w/2} for w = 0..wmax,
// checked to be consistent across all embeddings.
std::vector<long> weight_histogram(const LPolynomial& l, const Int& q, int wmax,
                                   double tol = 1e-6);

// Every coefficient fixed by zeta -> zeta^{-1}.
bool conjugation_symmetric(const LPolynomial& l);

}  // namespace toricsum
