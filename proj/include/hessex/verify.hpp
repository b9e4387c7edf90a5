#pragma once

// Verification jobs: each checks one family of claims and reports a verdict
// with a witness per sub-claim.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hessex/hessenberg.hpp"
#include "hessex/schubert.hpp"

namespace hessex {

struct Witness {
  std::string claim;
  bool holds = false;
  /// What was computed: polynomials, bases, dimensions or permutations.
  nlohmann::json evidence;
};

struct VerificationReport {
  std::string job;
  nlohmann::json params;
  std::vector<Witness> witnesses;
  /// Exploratory jobs report evidence and never a proof verdict.
  bool evidence_only = false;
  /// Set when the Groebner engine ran out of S-pair budget.
  bool budget_exceeded = false;
  double millis = 0;

  bool passed() const;
  /// "pass", "fail", "budget_exceeded" or "evidence".
  std::string verdict() const;
  /// Omitting the timing makes reports byte-identical across runs.
  nlohmann::json to_json(bool with_millis = true) const;
};

struct JobParams {
  int n = 4;
  std::optional<HessenbergFunction> h;
  std::vector<Rational> samples = {0, 1, -1, 2};
  std::optional<int> i;
  std::optional<int> j;
  /// Order for equality and membership tests.
  MonomialOrder order = MonomialOrder::elimination(4);
  /// Eigenvalue data for explore-conjecture; regular semisimple by default.
  std::optional<JordanData> jordan;
  /// Per-job S-pair cap on top of the engine budget.
  std::optional<std::uint64_t> pair_budget;
};

/// Job names in the order the suite runs them.
const std::vector<std::string>& job_names();
bool is_job(const std::string& name);

VerificationReport verify_assprimes(const JobParams& p);
VerificationReport verify_flatness(const JobParams& p);
VerificationReport verify_grobner_tables(const JobParams& p);
VerificationReport verify_nilpotent_fiber(const JobParams& p);
VerificationReport verify_dim_and_class(const JobParams& p);
VerificationReport verify_component_degeneration(const JobParams& p);
VerificationReport explore_conjecture(const JobParams& p);

/// Dispatches by name and fills in the timing. Throws DomainError for an
/// unknown job or missing parameters; BudgetExceeded propagates.
VerificationReport run_job(const std::string& name, const JobParams& p);

struct SuiteEntry {
  std::string job;
  JobParams params;
};
/// Every job for every applicable Hessenberg function (and every i < j for
/// the table job) at size n.
std::vector<SuiteEntry> suite_entries(int n);
/// Runs the entries on a pool of `threads` workers; reports come back in
/// entry order whatever the thread count.
std::vector<VerificationReport> run_suite(const std::vector<SuiteEntry>& entries, int threads);

}  // namespace hessex
