#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "basechange/fuzz.hpp"

namespace basechange {

enum class OutputFormat { text, json };

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// Full per-degree analysis of a complex.
nlohmann::json analyze_report(const FreeComplex& c);
int cmd_analyze(std::string_view document, std::ostream& out, std::ostream& err, OutputFormat format);

int cmd_decompose(std::string_view document, int degree, std::ostream& out, std::ostream& err,
                  OutputFormat format);

nlohmann::json fuzz_report(const FuzzSummary& summary);
int cmd_fuzz(const FuzzConfig& cfg, std::ostream& out, std::ostream& err, OutputFormat format,
             Execution execution = Execution::parallel);

// Reads a file, or standard input when path is "-". Throws std::runtime_error.
std::string read_input(const std::string& path);

}  // namespace basechange
