#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricsum/fixture.hpp"
#include "toricsum/oracle.hpp"

namespace toricsum {

struct CheckResult {
  std::string id;
  std::string detail;
  bool pass = false;
  bool skipped = false;
  double seconds = 0;

  bool ok() const { return pass || skipped; }
};

struct VerifyOptions {
  long prime = 3;
  std::array<long, 6> coeffs{1, 1, 1, 1, 1, 1};
  int kmax = 9;
  bool fast = true;
  PaperExpectations expected = default_expectations();
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  std::string ledger;  // slope/weight table of the derived L-function

  bool all_ok() const {
    for (const CheckResult& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

// The consolidated paper-reproduction harness: polyhedral checks always run,
// oracle checks run when the budget admits k = 1..degree and are marked
// skipped otherwise.
VerifyOutcome run_paper_verification(const VerifyOptions& opts);

// Exponential-sum pipeline for the six-parameter family: S*_k, the derived
// constrained sums, and the L-polynomials both ways (when kmax reaches the
// degrees).
struct PaperPipeline {
  PaperInstance inst;
  int kmax = 0;
  std::vector<Cyclotomic> sStar;            // k = 1..kmax
  std::vector<Cyclotomic> sConstrained;     // k = 1..kmax, via the identity
  std::optional<LPolynomial> lstar;         // degree 9, when kmax >= 9
  std::optional<LPolynomial> lDerived;      // substitution route, degree 8
  std::optional<LPolynomial> lDirect;       // power-sum route, degree 8
};

PaperPipeline run_paper_pipeline(const PaperInstance& inst, int kmax, bool fast);

// Largest k with p^k - 1 within the fast-path cap.
int max_fast_k(long p);

std::string render_checks(const std::vector<CheckResult>& checks);

}  // namespace toricsum
