#pragma once

#include <cstdint>
#include <vector>

#include "toricsum/exact.hpp"

namespace toricsum {

// F_{p^k} as F_p[x]/(modulus) with full exp/log tables. Construction is
// deterministic: the modulus is the lexicographically smallest monic
// irreducible of degree k, the generator the smallest primitive element
// (elements ordered by their base-p digit encoding).
class ExtField {
 public:
  static constexpr long kMaxOrder = 200000;

  static ExtField build(long p, long k);

  long p() const { return p_; }
  long k() const { return k_; }
  long q() const { return q_; }
  long units() const { return q_ - 1; }
  const std::vector<long>& modulus() const { return mod_; }  // c_0..c_{k-1}
  uint32_t generator() const { return exp_[1]; }

  // Elements are codes 0..q-1; base-p digits are polynomial coefficients.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t from_base(long v) const;  // embed a residue 0..p-1

  long log(uint32_t a) const;           // for nonzero a
  uint32_t exp(long e) const;           // generator^e, e arbitrary
  long trace(uint32_t a) const;         // to F_p, value 0..p-1

 private:
  long p_ = 0, k_ = 0, q_ = 0;
  std::vector<long> mod_;
  std::vector<uint32_t> exp_;
  std::vector<long> log_;
  std::vector<long> trace_;
};

}  // namespace toricsum
