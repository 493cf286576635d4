#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace quatseq {

/// Largest pq accepted by analyze(); larger moduli make ell (and the ring
/// degree) impractically big.
inline constexpr std::uint64_t kMaxModulus = 100000;

struct AnalysisOptions {
  bool oracle = false;
  bool verify_trace = false;
  bool emit_spectrum = false;
  std::optional<std::uint64_t> g;
  std::uint64_t seed = 0;
};

struct AnalysisReport {
  std::uint64_t p = 0, q = 0;
  std::string case_name;
  std::uint64_t g = 0, h = 0, e = 0;
  std::uint64_t ell = 0, ell_p = 0, ell_q = 0;
  int two_class_index = 0;
  std::vector<int> modulus;
  std::uint64_t lc_spectrum = 0;
  std::uint64_t lc_closed_form = 0;
  std::optional<std::uint64_t> lc_oracle;
  std::optional<int> zero_branch;
  std::vector<int> rho;
  std::optional<bool> trace_verified;
  bool closed_form_matches_dft = false;
  double elapsed_ms = 0;
  std::optional<std::vector<std::vector<int>>> spectrum;

  /// All computed routes agree and every requested verification passed.
  bool consistent() const;
};

/// Runs the whole pipeline for (p, q): builds the classes and the sequence,
/// the ring GR(4, 4^ell) and a primitive pq-th root, then the DFT, the
/// closed forms, and optionally the recurrence oracle and the trace check.
/// Throws Error(InvalidParameters) for unusable (p, q).
AnalysisReport analyze(std::uint64_t p, std::uint64_t q, const AnalysisOptions& options = {});

using json = nlohmann::ordered_json;

json to_json(const AnalysisReport& report);
std::string csv_header();
std::string to_csv(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

struct BatchError {
  std::size_t line = 0;
  std::string input;
  std::string message;
};

using BatchEntry = std::variant<AnalysisReport, BatchError>;

/// One entry per non-comment, non-blank line of `text`, each holding "p q".
std::vector<BatchEntry> analyze_batch(const std::string& text, const AnalysisOptions& options);

json to_json(const BatchError& error);

}  // namespace quatseq
