#pragma once

#include "facschur/sequence.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace facschur {

struct VerifyOptions {
  std::string identity;
  int max_weight = 4;
  int m = 2;
  int n = 2;
  // Defaults depend on the identity when unset (see default_sequence).
  std::optional<ParamSequence> seq;
  int trials = 5;
  std::uint64_t seed = 1;
  int order = 12; // truncation order of the generating series
  int jobs = 1;
};

struct CaseFailure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string identity;
  std::string grid;
  int cases_run = 0;
  std::vector<CaseFailure> failures;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& identity_names();

// Sequence used when none is given: arith:0 for the numeric suites
// (genseries-*, basis-roundtrip), otherwise a symbolic sequence over the
// conservative window of the grid.
ParamSequence default_sequence(const std::string& identity, int max_weight, int m, int n);

// Throws PreconditionViolated for an unknown identity or invalid sizes.
VerifyReport run_verify(const VerifyOptions& options);

// Text and JSON renderings. Neither includes the wall time, so equal
// options give identical output.
std::string report_text(const VerifyReport& report);
nlohmann::json report_json(const VerifyReport& report);

} // namespace facschur
