#include "quatseq/analysis.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "quatseq/error.hpp"
#include "quatseq/galois.hpp"
#include "quatseq/lc_oracle.hpp"
#include "quatseq/spectra.hpp"

namespace quatseq {

bool AnalysisReport::consistent() const {
  if (lc_spectrum != lc_closed_form || !closed_form_matches_dft) return false;
  if (lc_oracle && *lc_oracle != lc_spectrum) return false;
  if (trace_verified && !*trace_verified) return false;
  return true;
}

AnalysisReport analyze(std::uint64_t p, std::uint64_t q, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (p > kMaxModulus || q > kMaxModulus || p * q > kMaxModulus) {
    throw Error(ErrorCode::InvalidParameters,
                "pq exceeds the supported maximum of " + std::to_string(kMaxModulus));
  }
  const CyclotomicSystem sys = CyclotomicSystem::build(p, q, options.g);
  const QuatSequence seq = build_sequence(sys);
  const RingPtr ring = standard_ring(static_cast<int>(sys.ell()));
  const GrElement beta = primitive_nth_root(*ring, sys.modulus());

  AnalysisReport report;
  report.p = p;
  report.q = q;
  report.case_name = std::string(to_string(sys.case_tag()));
  report.g = sys.g();
  report.h = sys.h();
  report.e = sys.e();
  report.ell = sys.ell();
  report.ell_p = sys.ell_p();
  report.ell_q = sys.ell_q();
  report.two_class_index = sys.two_class();
  report.modulus = to_list(ring->modulus());

  const Spectrum spectrum = dft(seq, beta);
  const Spectrum closed = ms_closed_form(sys, beta);
  const ClosedFormReport lc = lc_closed_form(sys, beta);
  report.lc_spectrum = linear_complexity_from_spectrum(spectrum);
  report.lc_closed_form = lc.lc_predicted;
  report.zero_branch = lc.zero_branch;
  report.rho = to_list(lc.rho);
  report.closed_form_matches_dft = spectrum.coeffs == closed.coeffs;

  if (options.oracle) report.lc_oracle = minimal_connection(seq).length;
  if (options.verify_trace) {
    const TraceRepresentation rep(sys, beta);
    bool ok = true;
    for (std::uint64_t u = 0; u < sys.modulus() && ok; ++u) {
      try {
        ok = rep.evaluate(u) == seq[u];
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NotScalar) throw;
        ok = false;
      }
    }
    report.trace_verified = ok;
  }
  if (options.emit_spectrum) {
    std::vector<std::vector<int>> coeffs;
    for (const auto& c : spectrum.coeffs) coeffs.push_back(to_list(c));
    report.spectrum = std::move(coeffs);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
  report.elapsed_ms = std::round(ms * 1000.0) / 1000.0;
  return report;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["case"] = r.case_name;
  j["g"] = r.g;
  j["h"] = r.h;
  j["e"] = r.e;
  j["ell"] = r.ell;
  j["ell_p"] = r.ell_p;
  j["ell_q"] = r.ell_q;
  j["two_class_index"] = r.two_class_index;
  j["modulus"] = r.modulus;
  j["lc_spectrum"] = r.lc_spectrum;
  j["lc_closed_form"] = r.lc_closed_form;
  if (r.lc_oracle) j["lc_oracle"] = *r.lc_oracle;
  if (r.zero_branch) j["zero_branch"] = *r.zero_branch;
  j["rho"] = r.rho;
  if (r.trace_verified) j["trace_verified"] = *r.trace_verified;
  j["closed_form_matches_dft"] = r.closed_form_matches_dft;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.spectrum) j["spectrum"] = *r.spectrum;
  return j;
}

json to_json(const BatchError& error) {
  json j;
  j["line"] = error.line;
  j["input"] = error.input;
  j["error"] = error.message;
  return j;
}

namespace {

std::string list_text(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

std::string spectrum_text(const std::vector<std::vector<int>>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += list_text(s[i]);
  }
  return out + "]";
}

}  // namespace

std::string csv_header() {
  return "p,q,case,g,h,e,ell,ell_p,ell_q,two_class_index,modulus,lc_spectrum,lc_closed_form,"
         "lc_oracle,zero_branch,rho,trace_verified,closed_form_matches_dft,elapsed_ms,spectrum";
}

std::string to_csv(const AnalysisReport& r) {
  std::ostringstream os;
  os << r.p << ',' << r.q << ',' << r.case_name << ',' << r.g << ',' << r.h << ',' << r.e << ','
     << r.ell << ',' << r.ell_p << ',' << r.ell_q << ',' << r.two_class_index << ",\""
     << list_text(r.modulus) << "\"," << r.lc_spectrum << ',' << r.lc_closed_form << ','
     << opt_text(r.lc_oracle) << ',' << opt_text(r.zero_branch) << ",\"" << list_text(r.rho)
     << "\"," << opt_text(r.trace_verified) << ','
     << (r.closed_form_matches_dft ? "true" : "false") << ',' << json(r.elapsed_ms).dump() << ',';
  if (r.spectrum) os << '"' << spectrum_text(*r.spectrum) << '"';
  return os.str();
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "(p, q) = (" << r.p << ", " << r.q << ")  " << r.case_name << "\n"
     << "  g = " << r.g << ", h = " << r.h << ", e = " << r.e << "\n"
     << "  ord(2): pq " << r.ell << ", p " << r.ell_p << ", q " << r.ell_q
     << "; 2 in D" << r.two_class_index << "\n"
     << "  ring GR(4, 4^" << r.ell << ") modulus " << list_text(r.modulus) << "\n"
     << "  rho = " << list_text(r.rho);
  if (r.zero_branch) os << ", vanishing class D" << *r.zero_branch;
  os << "\n  linear complexity: spectrum " << r.lc_spectrum << ", closed form "
     << r.lc_closed_form;
  if (r.lc_oracle) os << ", recurrence " << *r.lc_oracle;
  os << "\n  closed form matches DFT: " << (r.closed_form_matches_dft ? "yes" : "NO");
  if (r.trace_verified) os << "\n  trace representation: " << (*r.trace_verified ? "ok" : "FAILED");
  os << "\n  " << r.elapsed_ms << " ms\n";
  return os.str();
}

std::vector<BatchEntry> analyze_batch(const std::string& text, const AnalysisOptions& options) {
  std::vector<BatchEntry> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string content = line.substr(0, line.find('#'));
    const auto first_char = content.find_first_not_of(" \t\r");
    content = first_char == std::string::npos
                  ? std::string()
                  : content.substr(first_char, content.find_last_not_of(" \t\r") - first_char + 1);
    std::istringstream fields(content);
    std::string first;
    if (!(fields >> first)) continue;
    std::istringstream pair_in(content);
    long long p = 0, q = 0;
    std::string extra;
    if (!(pair_in >> p >> q) || (pair_in >> extra) || p <= 0 || q <= 0) {
      out.emplace_back(BatchError{line_no, content, "expected two positive integers \"p q\""});
      continue;
    }
    try {
      out.emplace_back(analyze(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q), options));
    } catch (const Error& err) {
      out.emplace_back(BatchError{line_no, content, err.what()});
    }
  }
  return out;
}

}  // namespace quatseq
