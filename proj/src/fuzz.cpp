#include "basechange/fuzz.hpp"

#include <chrono>

#include "basechange/document.hpp"

namespace basechange {

std::string stratum_label(std::size_t index) {
  const bool surjective = index & 4u, lower = index & 2u, free = index & 1u;
  return std::string(surjective ? "phi^p surj" : "phi^p not surj") + ", " +
         (lower ? "phi^{p-1} surj" : "phi^{p-1} not surj") + ", " + (free ? "H^p free" : "H^p not free");
}

namespace {

// Alternating sum of lengths (Artinian rings) or ranks (domains); both sides
// of the Euler characteristic identity.
struct EulerSums {
  std::int64_t modules = 0;
  std::int64_t cohomology = 0;
};

std::int64_t presentation_measure(const RingDescriptor& ring, const ModulePresentation& h) {
  const auto nil = ring.nilpotency_degree();
  if (!nil || ring.is_field()) return static_cast<std::int64_t>(h.free_rank);
  std::int64_t length = static_cast<std::int64_t>(h.free_rank) * *nil;
  for (int a : h.torsion_exponents) length += a;
  return length;
}

}  // namespace

TrialOutcome check_complex(const FreeComplex& c, const CheckOptions& options) {
  TrialOutcome out;
  const RingDescriptor& ring = c.ring();
  std::string document;
  auto report = [&](int degree, const char* check, std::string message) {
    if (document.empty()) document = write_complex_document(c);
    out.violations.push_back(Violation{0, degree, check, std::move(message), document});
  };

  const auto nil = ring.nilpotency_degree();
  const bool length_form = nil && !ring.is_field();
  EulerSums euler;

  for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
    ++out.degrees_checked;
    const ModulePresentation h = cohomology(c, p);
    const PhiReport phi = phi_report(c, p);
    const Lemma2Verdict lemma2 = lemma2_check(c, p);
    const bool lower_surjective = phi_surjective(c, p - 1);

    if (!lemma2.agree) report(p, "lemma2", lemma2.violation.value_or("conditions disagree"));
    if (phi.violation) report(p, "theorem-a", *phi.violation);

    const TheoremBReport theorem_b = theorem_b_check(c, p);
    if (theorem_b.status == CheckStatus::violated) report(p, "theorem-b", theorem_b.message);
    out.commutation_checks += theorem_b.quotients_checked.size();
    ++out.strata[stratum_index(phi.surjective, lower_surjective, h.is_free())];

    if (p == c.max_degree() && !phi.isomorphism)
      report(p, "top-degree", "phi at the top degree is not an isomorphism");
    if (ring.is_field() && (!phi.isomorphism || !h.is_free()))
      report(p, "field", "over a field phi^p must be an isomorphism and H^p free");

    const std::int64_t sign = (p % 2 == 0) ? 1 : -1;
    const std::int64_t module_measure = static_cast<std::int64_t>(c.rank(p)) * (length_form ? *nil : 1);
    euler.modules += sign * module_measure;
    euler.cohomology += sign * presentation_measure(ring, h);

    if (options.run_oracle && ring.is_finite()) {
      if (!oracle_can_enumerate(c, p, options.cap)) {
        ++out.oracle_degrees_skipped;
        continue;
      }
      ++out.oracle_degrees_checked;
      const std::uint64_t order = brute_cohomology_order(c, p, options.cap, options.oracle_execution);
      const auto predicted = module_order(ring, h);
      if (!predicted || *predicted != order)
        report(p, "oracle-order",
               "enumerated |H^" + std::to_string(p) + "| = " + std::to_string(order) + " but presentation " +
                   h.to_string() + " predicts " + (predicted ? std::to_string(*predicted) : "overflow"));
      const bool brute = brute_phi_surjective(c, p, options.cap, options.oracle_execution);
      const bool via_block = phi_surjective_via_block(c, p);
      if (brute != phi.surjective || brute != via_block)
        report(p, "oracle-phi",
               "enumeration says phi^" + std::to_string(p) + (brute ? " surjective" : " not surjective") +
                   ", kernel-rank path " + (phi.surjective ? "surjective" : "not surjective") +
                   ", block path " + (via_block ? "surjective" : "not surjective"));
    }
  }

  if (euler.modules != euler.cohomology)
    report(c.min_degree(), "euler",
           "alternating sum over F^p is " + std::to_string(euler.modules) + " but over H^p is " +
               std::to_string(euler.cohomology));

  if (c.min_degree() == 0) {
    const CorollaryReport corollary = corollary_check(c);
    out.corollary = corollary.status;
    out.commutation_checks += corollary.quotients_checked.size();
    if (corollary.status == CheckStatus::violated) report(0, "corollary", corollary.message);
  }
  return out;
}

std::vector<std::string> FuzzSummary::coverage_warnings() const {
  std::vector<std::string> warnings;
  if (trials == 0) return warnings;
  for (std::size_t i = 0; i < kStrata; ++i)
    if (!stratum_forbidden(i) && strata[i] == 0) warnings.push_back("empty stratum: " + stratum_label(i));
  return warnings;
}

FuzzSummary run_fuzz(const FuzzConfig& cfg, Execution execution) {
  const auto start = std::chrono::steady_clock::now();
  const auto trials = static_cast<std::int64_t>(cfg.trials);
  std::vector<TrialOutcome> outcomes(cfg.trials);
  CheckOptions options;
  options.cap = cfg.cap;
  options.oracle_execution = execution;

#pragma omp parallel for schedule(dynamic) if (execution == Execution::parallel)
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    try {
      outcomes[trial] = check_complex(random_complex(cfg, trial), options);
    } catch (const std::exception& e) {
      outcomes[trial] = TrialOutcome{};
      outcomes[trial].violations.push_back(Violation{trial, 0, "error", e.what(), ""});
    }
    for (Violation& v : outcomes[trial].violations) v.trial = trial;
  }

  FuzzSummary summary;
  summary.config = cfg;
  summary.trials = cfg.trials;
  summary.oracle_available = cfg.ring.is_finite();
  for (const TrialOutcome& o : outcomes) {
    summary.degrees_checked += o.degrees_checked;
    for (std::size_t i = 0; i < kStrata; ++i) summary.strata[i] += o.strata[i];
    summary.oracle_degrees_checked += o.oracle_degrees_checked;
    summary.oracle_degrees_skipped += o.oracle_degrees_skipped;
    summary.commutation_checks += o.commutation_checks;
    if (o.corollary != CheckStatus::skipped) ++summary.corollary_instances;
    summary.violations.insert(summary.violations.end(), o.violations.begin(), o.violations.end());
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace basechange
