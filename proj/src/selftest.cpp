#include "quatseq/selftest.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <string>

#include "quatseq/cyclotomy.hpp"
#include "quatseq/lc_oracle.hpp"
#include "quatseq/spectra.hpp"

namespace quatseq {

bool SelftestResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> SelftestResult::failures() const {
  std::vector<CheckResult> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const CheckResult& c) { return !c.passed; });
  return out;
}

namespace {

template <typename Fn>
void guarded(std::vector<CheckResult>& out, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& err) {
    out.push_back({name, false, err.what()});
  }
}

void check_pair(std::vector<CheckResult>& out, std::uint64_t p, std::uint64_t q,
                const ModulusProvider& modulus) {
  const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ") ";
  guarded(out, tag + "pipeline", [&] {
    const auto sys = CyclotomicSystem::build(p, q);
    auto classes = check_class_identities(sys);
    out.insert(out.end(), classes.begin(), classes.end());

    const auto ring = GaloisRing::create(modulus(static_cast<int>(sys.ell())));
    const GrElement beta = primitive_nth_root(*ring, sys.modulus());
    auto roots = check_root_identities(sys, beta);
    out.insert(out.end(), roots.begin(), roots.end());

    const QuatSequence seq = build_sequence(sys);
    const Spectrum spectrum = dft(seq, beta);
    const Spectrum closed = ms_closed_form(sys, beta);
    out.push_back({tag + "closed form equals DFT", spectrum.coeffs == closed.coeffs, {}});

    const auto predicted = lc_closed_form(sys, beta).lc_predicted;
    const auto oracle = minimal_connection(seq).length;
    out.push_back({tag + "linear complexity routes agree",
                   predicted == spectrum.nonzero_count && oracle == spectrum.nonzero_count,
                   "spectrum " + std::to_string(spectrum.nonzero_count) + ", closed form " +
                       std::to_string(predicted) + ", recurrence " + std::to_string(oracle)});

    const TraceRepresentation rep(sys, beta);
    bool trace_ok = true;
    for (std::uint64_t u = 0; u < sys.modulus(); ++u) trace_ok = trace_ok && rep.evaluate(u) == seq[u];
    out.push_back({tag + "trace representation", trace_ok, {}});
  });
}

void check_random(std::vector<CheckResult>& out, std::uint64_t period, int degree,
                  const SelftestOptions& options, std::mt19937_64& rng) {
  const std::string name = "recurrence vs spectrum, period " + std::to_string(period);
  guarded(out, name, [&] {
    const auto ring = GaloisRing::create(options.modulus(degree));
    const GrElement beta = primitive_nth_root(*ring, period);
    std::uniform_int_distribution<int> value(0, 3);
    std::size_t mismatches = 0;
    for (std::size_t t = 0; t < options.random_sequences; ++t) {
      std::vector<std::uint8_t> v(period);
      for (auto& x : v) x = static_cast<std::uint8_t>(value(rng));
      const QuatSequence seq(std::move(v));
      const Spectrum spectrum = dft(seq, beta);
      bool ok = minimal_connection(seq).length == spectrum.nonzero_count;
      for (std::uint64_t u = 0; u < period && ok; ++u) ok = reconstruct(spectrum, u) == seq[u];
      mismatches += ok ? 0 : 1;
    }
    out.push_back({name, mismatches == 0,
                   std::to_string(mismatches) + " of " + std::to_string(options.random_sequences) +
                       " disagree"});
  });
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& options) {
  SelftestResult result;
  for (const auto& [p, q] : options.params) check_pair(result.checks, p, q, options.modulus);
  std::mt19937_64 rng(options.seed);
  check_random(result.checks, 7, 3, options, rng);
  check_random(result.checks, 15, 4, options, rng);
  return result;
}

}  // namespace quatseq
