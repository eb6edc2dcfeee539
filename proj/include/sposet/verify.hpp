#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sposet/signed_poset.hpp"

namespace sposet {

/// Outcome of one property suite.
struct SuiteResult {
  SuiteResult() = default;
  SuiteResult(std::string id_, std::string title_) : id(std::move(id_)), title(std::move(title_)) {}

  std::string id;
  std::string title;
  bool passed = true;
  std::size_t cases = 0;
  /// First few counterexamples.
  std::vector<std::string> failures;
  /// Witnesses and diagnostics that do not affect `passed`.
  std::vector<std::string> notes;
  double seconds = 0.0;

  void fail(const std::string& message);
};

struct VerifyOptions {
  /// Exhaustive checks cover every signed poset on [n] for n = 1..max_n.
  int max_n = 3;
  /// Largest dilate for lattice-point comparisons.
  int max_t = 3;
};

/// Every signed poset on [n], cached per process.
const std::vector<SignedPoset>& all_posets(int n);

/// Acceptance criteria 1..12.
int acceptance_criterion_count();
SuiteResult run_acceptance_criterion(int id, const VerifyOptions& options = {});

/// Module invariant suites, by name.
std::vector<std::string> invariant_suite_names();
SuiteResult run_invariant_suite(const std::string& name, const VerifyOptions& options = {});

/// Everything: acceptance criteria followed by the invariant suites.
std::vector<SuiteResult> run_all(const VerifyOptions& options = {});

}  // namespace sposet
