#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "toricsum/cli.hpp"

namespace {

std::optional<std::array<long, 6>> parse_coeffs(const std::string& s) {
  std::array<long, 6> out{};
  std::stringstream ss(s);
  std::string item;
  size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 6) return std::nullopt;
    try {
      out[i++] = std::stol(item);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (i != 6) return std::nullopt;
  return out;
}

std::optional<std::vector<long>> parse_ledger(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact polyhedral invariants, ordinariness criteria, and finite-field "
      "L-function verification for toric exponential sums"};
  app.fallthrough();
  app.require_subcommand(1);

  toricsum::AnalysisRequest req;
  std::string inputOpt, coeffsOpt, referenceOpt, expectedOpt;
  long primeOpt = -1, kmaxOpt = -1, kOpt = -1;

  app.add_flag("--json", req.jsonOutput, "emit a machine record");
  app.add_option("--input", inputOpt,
                 "input document: a file path, or inline JSON starting with "
                 "'{' (default: the shipped six-parameter instance)");
  app.add_option("--prime", primeOpt, "characteristic p");
  app.add_option("--kmax", kmaxOpt, "largest extension degree k");
  app.add_flag("--fast", req.fast,
               "use the Kloosterman convolution path for the shipped family");
  app.add_option("--coeffs", coeffsOpt, "a1,...,a6 for the shipped family");

  app.add_subcommand("polytope", "vertices, facets, and the face lattice");
  app.add_subcommand("hodge",
                     "denominator, weight counts, Hodge numbers and polygons");
  app.add_subcommand("ordinary", "diagonal non-degeneracy and ordinariness");
  auto* conj = app.add_subcommand(
      "conjecture", "conjectured weight counts vs a reference ledger");
  conj->add_option("--k", kOpt, "evaluate a single k");
  conj->add_option("--reference", referenceOpt,
                   "comma-separated reference ledger w_0,...,w_n");
  app.add_subcommand("lfunction",
                     "exponential sums, L-polynomials, slopes, weights");
  auto* vp = app.add_subcommand("verify-paper",
                                "run the consolidated verification harness");
  vp->add_option("--expected", expectedOpt, "expectation record file");

  CLI11_PARSE(app, argc, argv);

  req.command = app.get_subcommands().front()->get_name();
  if (!inputOpt.empty()) req.input = inputOpt;
  if (primeOpt >= 0) req.prime = primeOpt;
  if (kmaxOpt >= 0) req.kmax = kmaxOpt;
  if (kOpt >= 0) req.conjectureK = kOpt;
  if (!expectedOpt.empty()) req.expectedPath = expectedOpt;
  if (!coeffsOpt.empty()) {
    auto c = parse_coeffs(coeffsOpt);
    if (!c) {
      std::cerr << "error: --coeffs expects six comma-separated integers\n";
      return toricsum::kExitInputError;
    }
    req.coeffs = *c;
  }
  if (!referenceOpt.empty()) {
    auto r = parse_ledger(referenceOpt);
    if (!r) {
      std::cerr << "error: --reference expects comma-separated integers\n";
      return toricsum::kExitInputError;
    }
    req.referenceLedger = *r;
  }

  toricsum::CommandOutcome out = toricsum::run_command(req);
  if (req.jsonOutput)
    std::cout << out.record.dump(2) << "\n";
  else
    std::cout << out.text;
  return out.exitCode;
}
