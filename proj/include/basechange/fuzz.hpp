#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "basechange/analysis.hpp"
#include "basechange/oracle.hpp"
#include "basechange/random.hpp"

namespace basechange {

struct Violation {
  std::uint64_t trial = 0;
  int degree = 0;
  std::string check;     // e.g. "lemma2", "theorem-a", "oracle-order"
  std::string message;
  std::string document;  // the complex, re-runnable through `analyze`
};

// Truth assignment of (phi^p surjective, phi^{p-1} surjective, H^p free),
// packed as bits 2, 1, 0.
inline constexpr std::size_t kStrata = 8;
constexpr std::size_t stratum_index(bool surjective, bool lower_surjective, bool free) {
  return (surjective ? 4u : 0u) | (lower_surjective ? 2u : 0u) | (free ? 1u : 0u);
}
// (surjective, surjective, not free) and (surjective, not surjective, free)
// contradict the theorem; hits there are also reported as violations.
constexpr bool stratum_forbidden(std::size_t index) { return index == 6 || index == 5; }
std::string stratum_label(std::size_t index);

struct TrialOutcome {
  std::vector<Violation> violations;
  std::array<std::uint64_t, kStrata> strata{};
  std::uint64_t degrees_checked = 0;
  std::uint64_t oracle_degrees_checked = 0;
  std::uint64_t oracle_degrees_skipped = 0;
  std::uint64_t commutation_checks = 0;
  CheckStatus corollary = CheckStatus::skipped;
};

struct CheckOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  bool run_oracle = true;
  Execution oracle_execution = Execution::parallel;
};

// Runs every per-degree property on one complex: agreement of the four
// surjectivity criteria, surjective => isomorphism, the freeness equivalence
// with quotient commutation, top-degree isomorphism, field behaviour, the
// Euler characteristic identity, the H^1 vanishing check, and, on finite
// rings within the cap, oracle agreement.
TrialOutcome check_complex(const FreeComplex& c, const CheckOptions& options = {});

struct FuzzSummary {
  FuzzConfig config;
  std::uint64_t trials = 0;
  std::uint64_t degrees_checked = 0;
  std::array<std::uint64_t, kStrata> strata{};
  bool oracle_available = false;
  std::uint64_t oracle_degrees_checked = 0;
  std::uint64_t oracle_degrees_skipped = 0;
  std::uint64_t commutation_checks = 0;
  std::uint64_t corollary_instances = 0;  // hypothesis satisfied
  std::vector<Violation> violations;      // ordered by trial index
  double seconds = 0;

  bool ok() const noexcept { return violations.empty(); }
  std::uint64_t surjective_nonfree() const noexcept { return strata[4] + strata[6]; }
  // Empty strata that are not forbidden.
  std::vector<std::string> coverage_warnings() const;
};

// Trials run concurrently under Execution::parallel; outcomes are aggregated
// by trial index so the summary is identical for both modes.
FuzzSummary run_fuzz(const FuzzConfig& cfg, Execution execution = Execution::parallel);

}  // namespace basechange
