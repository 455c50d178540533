#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "toricsum/exact.hpp"

namespace toricsum {

// A coefficient is either a concrete residue representative or the marker
// "some nonzero value" (enough for all the polyhedral invariants).
struct SymbolicNonzero {
  bool operator==(const SymbolicNonzero&) const = default;
};
using CoeffSpec = std::variant<SymbolicNonzero, Int>;

struct LaurentTerm {
  CoeffSpec coeff;
  IntVec exp;
  bool operator==(const LaurentTerm&) const = default;
};

// Laurent polynomial in n variables, presented as a list of terms with
// integer exponent vectors. The single input object of the library.
struct LaurentPolySpec {
  int n = 0;
  std::vector<LaurentTerm> terms;
  bool operator==(const LaurentPolySpec&) const = default;
};

inline bool is_symbolic(const CoeffSpec& c) {
  return std::holds_alternative<SymbolicNonzero>(c);
}

// Structural validation: n >= 1, exponent lengths n, exponents distinct,
// and concrete coefficients nonzero mod p when a prime is supplied.
// Throws std::invalid_argument with a description of the first violation.
void validate(const LaurentPolySpec& f, const std::optional<Int>& p = std::nullopt);

// Constant term (exponent vector zero), if present.
std::optional<CoeffSpec> constant_term(const LaurentPolySpec& f);

}  // namespace toricsum
