// basechange: analyze complexes of free modules over local rings, print
// block decompositions, and fuzz the base change theorems.

#include <iostream>

#include <CLI11.hpp>

#include "basechange/commands.hpp"

using namespace basechange;

int main(int argc, char** argv) {
  CLI::App app{"Base change analysis for complexes of free modules over local rings"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string input_path;
  auto* analyze = app.add_subcommand("analyze", "Cohomology, phi^p and theorem checks for every degree");
  analyze->add_option("input", input_path, "Complex document, or - for stdin")->required();
  add_format(analyze);

  int degree = 0;
  auto* decompose = app.add_subcommand("decompose", "Block decomposition of d^p");
  decompose->add_option("input", input_path, "Complex document, or - for stdin")->required();
  decompose->add_option("--degree", degree, "Degree p of the map d^p")->required();
  add_format(decompose);

  std::string ring_spec = "zmod-pk:2:3";
  FuzzConfig cfg;
  bool serial = false;
  auto* fuzz = app.add_subcommand("fuzz", "Check the theorems on random complexes");
  fuzz->add_option("--ring", ring_spec, "Ring, e.g. zmod-pk:2:3, p-local:2, trunc-poly:fp:5:3, trunc-poly:q:3")
      ->capture_default_str();
  fuzz->add_option("--degrees", cfg.num_degrees, "Number of degrees")->capture_default_str()->check(CLI::PositiveNumber);
  fuzz->add_option("--max-rank", cfg.max_rank, "Largest rank of F^p")->capture_default_str();
  fuzz->add_option("--trials", cfg.trials, "Number of random complexes")->capture_default_str();
  fuzz->add_option("--seed", cfg.seed, "Seed; trial t uses seed + t")->capture_default_str();
  fuzz->add_option("--split-bias", cfg.split_bias, "Probability of a split block per map")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  fuzz->add_option("--cap", cfg.cap, "Oracle enumeration limit per module")->capture_default_str();
  fuzz->add_flag("--serial", serial, "Run trials and the oracle on one thread");
  add_format(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }
  const OutputFormat format = format_name == "json" ? OutputFormat::json : OutputFormat::text;

  if (*fuzz) {
    try {
      cfg.ring = RingDescriptor::parse_spec(ring_spec);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInputError;
    }
    return cmd_fuzz(cfg, std::cout, std::cerr, format, serial ? Execution::serial : Execution::parallel);
  }

  std::string document;
  try {
    document = read_input(input_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (*analyze) return cmd_analyze(document, std::cout, std::cerr, format);
  return cmd_decompose(document, degree, std::cout, std::cerr, format);
}
