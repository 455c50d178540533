#pragma once

#include <json.hpp>

#include <array>
#include <optional>
#include <string>

#include "toricsum/laurent.hpp"
#include "toricsum/verify.hpp"

namespace toricsum {

using Json = nlohmann::json;

// Problems with the request or input document; mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct ParsedInput {
  LaurentPolySpec spec;
  std::optional<long> prime;
};

// Input document: {"n": int, "p": optional int,
//                  "terms": [{"coeff": int | "*", "exp": [int; n]}]}
ParsedInput parse_input(const std::string& document);

struct AnalysisRequest {
  std::string command;  // polytope|hodge|ordinary|conjecture|lfunction|verify-paper
  std::optional<std::string> input;  // file path, or inline JSON when it
                                     // starts with '{'; default: the shipped
                                     // six-parameter instance
  std::optional<long> prime;
  std::optional<long> kmax;
  bool fast = false;
  bool jsonOutput = false;
  std::optional<std::array<long, 6>> coeffs;
  std::optional<long> conjectureK;
  std::optional<std::vector<long>> referenceLedger;
  std::optional<std::string> expectedPath;  // verify-paper
};

struct CommandOutcome {
  int exitCode = kExitOk;
  std::string text;
  Json record;
};

CommandOutcome run_command(const AnalysisRequest& req);

// Expectation records for verify-paper (the shipped .record file format).
Json expectations_to_json(const PaperExpectations& e);
PaperExpectations expectations_from_json(const Json& j);

}  // namespace toricsum
