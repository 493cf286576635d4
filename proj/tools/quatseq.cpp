// Command-line front end: analyze | batch | selftest.
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quatseq/analysis.hpp"
#include "quatseq/error.hpp"
#include "quatseq/selftest.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;

enum class Format { Json, Csv, Text };

void emit(const quatseq::AnalysisReport& report, Format format, bool& header_done) {
  switch (format) {
    case Format::Json: std::cout << quatseq::to_json(report).dump() << '\n'; break;
    case Format::Csv:
      if (!header_done) std::cout << quatseq::csv_header() << ",error\n";
      std::cout << quatseq::to_csv(report) << ",\n";
      break;
    case Format::Text: std::cout << quatseq::to_text(report); break;
  }
  header_done = true;
}

void emit(const quatseq::BatchError& error, Format format, bool& header_done) {
  switch (format) {
    case Format::Json: std::cout << quatseq::to_json(error).dump() << '\n'; break;
    case Format::Csv: {
      if (!header_done) std::cout << quatseq::csv_header() << ",error\n";
      // 20 report columns stay empty; the message goes in the last one.
      std::cout << std::string(20, ',') << quatseq::json(error.message).dump() << '\n';
      break;
    }
    case Format::Text:
      std::cout << "line " << error.line << " (" << error.input << "): " << error.message << '\n';
      break;
  }
  header_done = true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternary cyclotomic sequences over Z4: spectra, linear complexity, traces"};
  app.require_subcommand(1);

  quatseq::AnalysisOptions options;
  std::uint64_t p = 0, q = 0, g = 0;
  std::string pairs_file;
  Format format = Format::Json;
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--oracle", options.oracle, "Also compute linear complexity from recurrences");
    cmd->add_flag("--verify-trace", options.verify_trace,
                  "Check the trace representation against every sequence term");
    cmd->add_flag("--emit-spectrum", options.emit_spectrum, "Include the DFT coefficients");
    cmd->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--seed", options.seed, "Seed (reports do not use randomness)");
  };

  auto* analyze = app.add_subcommand("analyze", "Analyze one parameter pair");
  analyze->add_option("--p", p, "First prime")->required();
  analyze->add_option("--q", q, "Second prime")->required();
  auto* g_opt = analyze->add_option("--g", g, "Common primitive root (default: smallest)");
  add_common(analyze);

  auto* batch = app.add_subcommand("batch", "Analyze one \"p q\" pair per line of a file");
  batch->add_option("--pairs,pairs", pairs_file, "Input file; '#' starts a comment")->required();
  add_common(batch);

  std::uint64_t selftest_seed = 42;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in identity checks");
  selftest->add_option("--seed", selftest_seed, "Seed for the random sequences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  bool header_done = false;
  if (*analyze) {
    if (*g_opt) options.g = g;
    try {
      const auto report = quatseq::analyze(p, q, options);
      emit(report, format, header_done);
      return report.consistent() ? 0 : kExitMismatch;
    } catch (const quatseq::Error& err) {
      std::cerr << "error: " << err.what() << '\n';
      return err.code() == quatseq::ErrorCode::InvalidParameters ||
                     err.code() == quatseq::ErrorCode::NoParameters
                 ? kExitInvalid
                 : kExitMismatch;
    }
  }

  if (*batch) {
    std::ifstream in(pairs_file);
    if (!in) {
      std::cerr << "error: cannot read " << pairs_file << '\n';
      return kExitInvalid;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    int status = 0;
    for (const auto& entry : quatseq::analyze_batch(buffer.str(), options)) {
      if (const auto* report = std::get_if<quatseq::AnalysisReport>(&entry)) {
        emit(*report, format, header_done);
        if (!report->consistent()) status = kExitMismatch;
      } else {
        emit(std::get<quatseq::BatchError>(entry), format, header_done);
      }
    }
    return status;
  }

  quatseq::SelftestOptions st;
  st.seed = selftest_seed;
  const auto result = quatseq::run_selftest(st);
  for (const auto& check : result.checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
    std::cout << '\n';
  }
  if (!result.passed()) {
    std::cout << result.failures().size() << " check(s) failed\n";
    return kExitMismatch;
  }
  std::cout << "all " << result.checks.size() << " checks passed\n";
  return 0;
}
