#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hdet/hdet.hpp"

namespace hdet::cli {

/// Invariant evaluator on raw amplitudes; replaceable so that a corrupted
/// pipeline can be shown to fail verification.
using InvariantFn = std::function<InvariantTriple(const Amplitudes4&)>;

struct VerifyOptions {
  std::vector<std::string> only;
  InvariantFn invariants = [](const Amplitudes4& a) { return invariants_of_amplitudes(a); };
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  int checks = 0;
  double seconds = 0.0;
};

const std::vector<std::string>& verify_suite_names();

/// Throws BadRange for an unknown suite name in `only`.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

/// Prints one line per suite and a summary; returns 0 if all passed, 1
/// otherwise.
int report_verify(const std::vector<SuiteResult>& results, std::ostream& out);

}  // namespace hdet::cli
