#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cosetforge/error.hpp"
#include "cosetforge/io.hpp"
#include "cosetforge/report.hpp"

namespace report = cosetforge::report;

namespace {

constexpr int kUsageError = 2;

int run_verify(const std::string& suite, const std::optional<std::string>& check, const std::optional<std::string>& json_path,
               long long budget_ms, bool no_meta) {
  report::SuiteOptions options;
  options.check = check;
  options.budget = std::chrono::milliseconds(budget_ms);
  options.meta = !no_meta;
  std::vector<report::CheckResult> results;
  try {
    results = report::run_suite(suite, options);
  } catch (const cosetforge::InvalidArgument& e) {
    std::cerr << "cosetforge: " << e.what() << "\n";
    return kUsageError;
  }
  std::cout << report::to_text(results);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.status == report::Status::fail;
  std::cout << results.size() - failed << "/" << results.size() << " checks without failure\n";
  if (json_path) {
    try {
      cosetforge::io::write_file(*json_path, report::to_json(suite, results).dump(2) + "\n");
    } catch (const cosetforge::Error& e) {
      std::cerr << "cosetforge: " << e.what() << "\n";
      return 1;
    }
  }
  return failed == 0 ? 0 : 1;
}

int run_export(const std::string& what, const std::string& format, const std::string& out) {
  std::string text;
  try {
    text = report::render_export(what, format);
  } catch (const cosetforge::InvalidArgument& e) {
    std::cerr << "cosetforge: " << e.what() << "\n";
    return kUsageError;
  }
  try {
    cosetforge::io::write_file(out, text);
  } catch (const cosetforge::Error& e) {
    std::cerr << "cosetforge: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the punctured dodecacode and its coset graph", "cosetforge"};
  app.set_version_flag("--version", report::kVersion);
  app.require_subcommand(1);

  std::string suite;
  std::optional<std::string> check, json_path;
  long long budget_ms = 20000;
  bool no_meta = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "codes, graphs, spectra, schemes, groups, binary or all")->required();
  verify->add_option("--check", check, "Run only the named check");
  verify->add_option("--json", json_path, "Write the results as JSON to this path");
  verify->add_option("--budget-ms", budget_ms, "Time budget for each search")->check(CLI::NonNegativeNumber);
  verify->add_flag("--no-meta", no_meta, "Write elapsed times as 0 so output is reproducible");

  std::string what, format, out;
  auto* exporter = app.add_subcommand("export", "Write a graph, code or scheme to a file");
  exporter->add_option("what", what, "graph:coset-D-, graph:cayley-1024, code:D-, code:B- or scheme:P-matrices")->required();
  exporter->add_option("--format", format, "edgelist, dot, json or code-text")->required();
  exporter->add_option("--out", out, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (verify->parsed()) return run_verify(suite, check, json_path, budget_ms, no_meta);
  return run_export(what, format, out);
}
