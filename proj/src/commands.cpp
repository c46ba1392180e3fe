#include "basechange/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "basechange/document.hpp"
#include "basechange/linalg.hpp"

namespace basechange {

using nlohmann::json;

namespace {

json presentation_json(const ModulePresentation& h) {
  return {{"free_rank", h.free_rank}, {"torsion", h.torsion_exponents}, {"text", h.to_string()}};
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Loads a document, reporting failures on err. Returns nullopt on input error.
std::optional<FreeComplex> load(std::string_view document, std::ostream& err) {
  try {
    return parse_complex_document(document);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return std::nullopt;
}

void print_matrix(std::ostream& out, const char* name, const Matrix& m) {
  out << name << " (" << m.rows() << "x" << m.cols() << ")";
  if (m.rows() == 0 || m.cols() == 0) {
    out << ": empty\n";
    return;
  }
  out << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).to_string();
    out << "\n";
  }
}

}  // namespace

json analyze_report(const FreeComplex& c) {
  json degrees = json::array();
  json violations = json::array();
  for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
    const ModulePresentation h = cohomology(c, p);
    const PhiReport phi = phi_report(c, p);
    const Lemma2Verdict lemma2 = lemma2_check(c, p);
    const TheoremBReport theorem_b = theorem_b_check(c, p);
    if (phi.violation) violations.push_back({{"degree", p}, {"check", "theorem-a"}, {"message", *phi.violation}});
    if (!lemma2.agree)
      violations.push_back({{"degree", p}, {"check", "lemma2"}, {"message", lemma2.violation.value_or("")}});
    if (theorem_b.status == CheckStatus::violated)
      violations.push_back({{"degree", p}, {"check", "theorem-b"}, {"message", theorem_b.message}});
    degrees.push_back({
        {"degree", p},
        {"rank", c.rank(p)},
        {"cohomology", presentation_json(h)},
        {"phi",
         {{"dim_source", phi.dim_source},
          {"dim_target", phi.dim_target},
          {"surjective", phi.surjective},
          {"isomorphism", phi.isomorphism}}},
        {"lemma2",
         {{"i", lemma2.cond_i},
          {"ii", lemma2.cond_ii},
          {"iii", lemma2.cond_iii},
          {"iv", lemma2.cond_iv},
          {"agree", lemma2.agree}}},
        {"theorem_b",
         {{"status", to_string(theorem_b.status)},
          {"lower_surjective", theorem_b.lower_surjective},
          {"cohomology_free", theorem_b.cohomology_free},
          {"quotients_checked", theorem_b.quotients_checked},
          {"message", theorem_b.message}}},
    });
  }
  json corollary = nullptr;
  if (c.min_degree() == 0 && !c.empty()) {
    const CorollaryReport r = corollary_check(c);
    corollary = {{"status", to_string(r.status)}, {"quotients_checked", r.quotients_checked}, {"message", r.message}};
    if (r.status == CheckStatus::violated)
      violations.push_back({{"degree", 0}, {"check", "corollary"}, {"message", r.message}});
  }
  return {{"ring", c.ring().spec_string()},
          {"min_degree", c.min_degree()},
          {"max_degree", c.max_degree()},
          {"degrees", std::move(degrees)},
          {"corollary", std::move(corollary)},
          {"violations", violations},
          {"ok", violations.empty()}};
}

int cmd_analyze(std::string_view document, std::ostream& out, std::ostream& err, OutputFormat format) {
  const auto c = load(document, err);
  if (!c) return kExitInputError;
  json report;
  try {
    report = analyze_report(*c);
  } catch (const std::exception& e) {
    err << "error: analysis failed: " << e.what() << "\n";
    return kExitViolation;
  }
  const int code = report["ok"].get<bool>() ? kExitOk : kExitViolation;

  if (format == OutputFormat::json) {
    out << report.dump(2) << "\n";
    return code;
  }

  out << "ring " << report["ring"].get<std::string>();
  if (c->empty()) {
    out << ", empty complex\n";
    return code;
  }
  out << ", degrees " << c->min_degree() << ".." << c->max_degree() << "\n";
  for (const json& d : report["degrees"]) {
    const int p = d["degree"].get<int>();
    const json& phi = d["phi"];
    const json& l2 = d["lemma2"];
    const json& tb = d["theorem_b"];
    out << "degree " << p << " (rank " << d["rank"].get<std::size_t>() << ")\n";
    out << "  H^" << p << " = " << d["cohomology"]["text"].get<std::string>() << "\n";
    out << "  phi^" << p << ": dim H^p(F)(x)k = " << phi["dim_source"].get<std::size_t>()
        << ", dim H^p(F(x)k) = " << phi["dim_target"].get<std::size_t>() << ", "
        << (phi["isomorphism"].get<bool>()  ? "isomorphism"
            : phi["surjective"].get<bool>() ? "surjective"
                                            : "not surjective")
        << "\n";
    out << "  surjectivity criteria: (i) " << yes_no(l2["i"].get<bool>()) << "  (ii) " << yes_no(l2["ii"].get<bool>())
        << "  (iii) " << yes_no(l2["iii"].get<bool>()) << "  (iv) " << yes_no(l2["iv"].get<bool>()) << "  "
        << (l2["agree"].get<bool>() ? "[agree]" : "[DISAGREE]") << "\n";
    out << "  freeness: " << tb["status"].get<std::string>();
    if (!tb["message"].get<std::string>().empty()) out << " (" << tb["message"].get<std::string>() << ")";
    if (tb["status"] == "holds")
      out << (tb["cohomology_free"].get<bool>() ? ", H^p free, phi^{p-1} surjective" : ", H^p not free, phi^{p-1} not surjective");
    if (!tb["quotients_checked"].empty()) out << ", commutes with A/m^n for n = " << tb["quotients_checked"].dump();
    out << "\n";
  }
  if (!report["corollary"].is_null()) {
    const json& cor = report["corollary"];
    out << "corollary: " << cor["status"].get<std::string>();
    if (!cor["message"].get<std::string>().empty()) out << " (" << cor["message"].get<std::string>() << ")";
    out << "\n";
  }
  if (report["violations"].empty()) {
    out << "no violations\n";
  } else {
    for (const json& v : report["violations"])
      out << "VIOLATION [" << v["check"].get<std::string>() << "] degree " << v["degree"].get<int>() << ": "
          << v["message"].get<std::string>() << "\n";
  }
  return code;
}

int cmd_decompose(std::string_view document, int degree, std::ostream& out, std::ostream& err,
                  OutputFormat format) {
  const auto c = load(document, err);
  if (!c) return kExitInputError;
  if (degree < c->min_degree() || degree >= c->max_degree()) {
    err << "error: degree " << degree << " is outside the map range [" << c->min_degree() << ", "
        << c->max_degree() - 1 << "]\n";
    return kExitInputError;
  }
  const Matrix d = c->differential(degree);
  const BlockDecomposition bd = block_decompose(d);
  const bool verified = is_invertible(bd.P) && is_invertible(bd.Q) &&
                        invert(bd.Q) * d * bd.P == block_normal_form(bd.M, bd.N);

  if (format == OutputFormat::json) {
    out << json{{"degree", degree},
                {"r", bd.r},
                {"s", bd.s},
                {"t", bd.t},
                {"P", matrix_json(bd.P)},
                {"Q", matrix_json(bd.Q)},
                {"M", matrix_json(bd.M)},
                {"N", matrix_json(bd.N)},
                {"verified", verified}}
               .dump(2)
        << "\n";
  } else {
    out << "d^" << degree << " over " << c->ring().spec_string() << ": r = " << bd.r << ", s = " << bd.s
        << ", t = " << bd.t << "\n";
    print_matrix(out, "P", bd.P);
    print_matrix(out, "Q", bd.Q);
    print_matrix(out, "M", bd.M);
    print_matrix(out, "N", bd.N);
    out << (verified ? "block identity Q^-1 d P = [[M, Id], [N, 0]] verified\n" : "block identity FAILED\n");
  }
  return verified ? kExitOk : kExitViolation;
}

json fuzz_report(const FuzzSummary& s) {
  json strata = json::array();
  for (std::size_t i = 0; i < kStrata; ++i)
    strata.push_back({{"surjective", (i & 4u) != 0},
                      {"lower_surjective", (i & 2u) != 0},
                      {"free", (i & 1u) != 0},
                      {"forbidden", stratum_forbidden(i)},
                      {"count", s.strata[i]}});
  json violations = json::array();
  for (const Violation& v : s.violations) {
    json doc = nullptr;
    if (!v.document.empty()) doc = json::parse(v.document);
    violations.push_back(
        {{"trial", v.trial}, {"degree", v.degree}, {"check", v.check}, {"message", v.message}, {"document", doc}});
  }
  return {{"config",
           {{"ring", s.config.ring.spec_string()},
            {"degrees", s.config.num_degrees},
            {"max_rank", s.config.max_rank},
            {"trials", s.config.trials},
            {"seed", s.config.seed},
            {"split_bias", s.config.split_bias},
            {"cap", s.config.cap}}},
          {"trials", s.trials},
          {"degrees_checked", s.degrees_checked},
          {"strata", std::move(strata)},
          {"surjective_nonfree", s.surjective_nonfree()},
          {"oracle",
           {{"available", s.oracle_available},
            {"degrees_checked", s.oracle_degrees_checked},
            {"degrees_skipped", s.oracle_degrees_skipped}}},
          {"commutation_checks", s.commutation_checks},
          {"corollary_instances", s.corollary_instances},
          {"warnings", s.coverage_warnings()},
          {"violations", std::move(violations)},
          {"ok", s.ok()}};
}

int cmd_fuzz(const FuzzConfig& cfg, std::ostream& out, std::ostream& err, OutputFormat format, Execution execution) {
  FuzzSummary summary;
  try {
    summary = run_fuzz(cfg, execution);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const int code = summary.ok() ? kExitOk : kExitViolation;
  if (format == OutputFormat::json) {
    out << fuzz_report(summary).dump(2) << "\n";
    return code;
  }

  out << "fuzz " << cfg.ring.spec_string() << ": " << summary.trials << " trials, " << cfg.num_degrees
      << " degrees, ranks <= " << cfg.max_rank << ", seed " << cfg.seed << ", split bias " << cfg.split_bias << "\n";
  if (summary.trials == 0) {
    out << "nothing to do\n";
    return code;
  }
  out << "degrees checked: " << summary.degrees_checked << "\n";
  if (summary.oracle_available)
    out << "oracle: " << summary.oracle_degrees_checked << " degrees enumerated, " << summary.oracle_degrees_skipped
        << " over the cap of " << cfg.cap << "\n";
  else
    out << "oracle: skipped, " << cfg.ring.spec_string() << " is infinite\n";
  out << "quotient commutation checks: " << summary.commutation_checks << "\n";
  out << "corollary instances (H^1(F(x)k) = 0): " << summary.corollary_instances << "\n";
  out << "strata (phi^p, phi^{p-1}, H^p):\n";
  for (std::size_t i = kStrata; i-- > 0;)
    out << "  " << stratum_label(i) << ": " << summary.strata[i] << (stratum_forbidden(i) ? "  (forbidden)" : "")
        << "\n";
  for (const std::string& w : summary.coverage_warnings()) out << "warning: " << w << "\n";
  out << "violations: " << summary.violations.size() << "\n";
  for (const Violation& v : summary.violations) {
    out << "trial " << v.trial << ", degree " << v.degree << " [" << v.check << "]: " << v.message << "\n";
    if (!v.document.empty()) out << v.document;
  }
  return code;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace basechange
