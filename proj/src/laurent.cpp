#include "toricsum/laurent.hpp"

#include <algorithm>
#include <set>

namespace toricsum {

void validate(const LaurentPolySpec& f, const std::optional<Int>& p) {
  if (f.n < 1) throw std::invalid_argument("spec: n must be >= 1");
  if (f.terms.empty()) throw std::invalid_argument("spec: no terms");
  std::set<IntVec> seen;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    const LaurentTerm& t = f.terms[i];
    if (static_cast<int>(t.exp.size()) != f.n)
      throw std::invalid_argument("spec: term " + std::to_string(i) +
                                  " exponent length != n");
    if (!seen.insert(t.exp).second)
      throw std::invalid_argument("spec: duplicate exponent vector at term " +
                                  std::to_string(i));
    if (p && !is_symbolic(t.coeff)) {
      Int v = std::get<Int>(t.coeff) % *p;
      if (v == 0)
        throw std::invalid_argument("spec: coefficient of term " +
                                    std::to_string(i) + " is zero mod p");
    }
  }
}

std::optional<CoeffSpec> constant_term(const LaurentPolySpec& f) {
  for (const LaurentTerm& t : f.terms) {
    bool zero = std::all_of(t.exp.begin(), t.exp.end(),
                            [](const Int& e) { return e == 0; });
    if (zero) return t.coeff;
  }
  return std::nullopt;
}

}  // namespace toricsum
