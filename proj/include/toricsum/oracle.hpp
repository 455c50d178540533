#pragma once

#include <array>
#include <vector>

#include "toricsum/cyclotomic.hpp"
#include "toricsum/finite_field.hpp"
#include "toricsum/laurent.hpp"
#include "toricsum/lpolynomial.hpp"

namespace toricsum {

// The six-parameter family studied by the verification harness:
// sum over x_1..x_4 in the torus with a5/(x1 x2) + a6/(x3 x4) = 1 of
// psi(Tr(a1 x1 + a2 x2 + a3 x3 + a4 x4)), over F_{p^k} with q = p.
struct PaperInstance {
  long p = 3;
  std::array<long, 6> a{1, 1, 1, 1, 1, 1};
};

// The associated five-variable Laurent polynomial
//   a1 x1 + a2 x2 + a3 x3 + a4 x4 + x5 (a5/(x1 x2) + a6/(x3 x4) - 1)
// whose torus sums determine the constrained family.
LaurentPolySpec paper_g_spec(const PaperInstance& inst);
LaurentPolySpec paper_g_exponents();  // symbolic-coefficient version

// S*_k(f): full-torus sum of psi(Tr f) over F_{p^k}, by enumeration of all
// (p^k - 1)^n torus points. Budget: (p^k - 1)^n <= 10^8. The twist parameter
// replaces psi by psi^m.
Cyclotomic exp_sum_bruteforce(const LaurentPolySpec& f, long p, long k,
                              long twist = 1);

// S_k(a): the constrained four-fold sum, by enumeration.
// Budget: (p^k - 1)^4 <= 10^8.
Cyclotomic constrained_sum(const PaperInstance& inst, long k, long twist = 1);

// S_k(a) from S*_k(g) through the exact identity q^k S_k(a) = 1 + S*_k(g).
Cyclotomic constrained_from_star(const Cyclotomic& star, long k, long p);

// Kl3(t) = sum over y1 y2 y3 = t of psi(Tr(y1 + y2 + y3)), for every t in
// the unit group, indexed by discrete log. Exact triple convolution over
// Z/(q-1) on trace counts.
std::vector<Cyclotomic> kloosterman3_table(const ExtField& field, long twist = 1);

// S*_k(g) through the Kloosterman splitting
//   sum_{x5} Kl3(a1 a2 a5 x5) Kl3(a3 a4 a6 x5) psi(Tr(-x5)).
// Budget: p^k - 1 <= 2 * 10^4.
Cyclotomic s_star_fast(const PaperInstance& inst, long k, long twist = 1);

// L-polynomial of degree d for a non-degenerate f in n variables, from the
// sums S*_1..S*_d; n only fixes the sign convention (L*(f,T)^{(-1)^{n-1}}
// is the polynomial).
LPolynomial reconstruct_l_polynomial(const std::vector<Cyclotomic>& sums,
                                     int d, int n);

struct BoundCheckRow {
  long k = 0;
  double observed = 0;  // max |S_k(a)| over the embeddings
  double bound = 0;     // 6 q^{3k/2} + q^k + 1
  bool pass = false;
};

struct BoundReport {
  bool pass = true;
  std::vector<BoundCheckRow> rows;
};

// |S_k(a)| <= 6 q^{3k/2} + q^k + 1 in every embedding, with 1e-9 relative
// slack on the comparison.
BoundReport verify_bound(const PaperInstance& inst,
                         const std::vector<Cyclotomic>& constrainedSums);

}  // namespace toricsum
