#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cosetforge::report {

inline constexpr const char* kVersion = "1.0.0";

enum class Status { pass, fail, unknown };

std::string to_string(Status s);

/// One verified claim. status is pass iff computed == expected, except that
/// a check whose search ran out of budget reports unknown.
struct CheckResult {
  std::string name;
  Status status = Status::unknown;
  nlohmann::json computed;
  nlohmann::json expected;
  /// "published", "derived" or "trivial"
  std::string source;
  std::uint64_t elapsed_ms = 0;
  std::string note;
};

struct SuiteOptions {
  std::optional<std::string> check;
  std::chrono::milliseconds budget{20000};
  /// When false, elapsed_ms is written as 0 so output is byte-stable.
  bool meta = true;
};

/// codes, graphs, spectra, schemes, groups, binary, all
const std::vector<std::string>& suite_names();
/// Check names of a suite in execution order; throws InvalidArgument for an unknown suite.
std::vector<std::string> check_names(const std::string& suite);

/// Runs a suite (or the single named check in it) in declaration order.
/// Throws InvalidArgument for an unknown suite or check name.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options = {});

nlohmann::json to_json(const std::string& suite, const std::vector<CheckResult>& results);
std::string to_text(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

/// graph:coset-D-, graph:cayley-1024, code:D-, code:B-, scheme:P-matrices
const std::vector<std::string>& export_targets();

/// Renders an export target in edgelist, dot, json or code-text format.
/// Throws InvalidArgument for an unknown target or an unsupported format.
std::string render_export(const std::string& what, const std::string& format);

}  // namespace cosetforge::report
