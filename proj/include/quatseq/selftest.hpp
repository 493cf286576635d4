#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "quatseq/galois.hpp"
#include "quatseq/lemmas.hpp"

namespace quatseq {

/// Supplies the Z4 modulus used for GR(4, 4^r).
using ModulusProvider = std::function<Z4Poly(int degree)>;

struct SelftestOptions {
  std::uint64_t seed = 42;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> params{{5, 13}, {17, 5}, {5, 17}};
  /// Random sequences per period (7 and 15) in the recurrence-vs-spectrum check.
  std::size_t random_sequences = 50;
  ModulusProvider modulus = standard_modulus;
};

struct SelftestResult {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<CheckResult> failures() const;
};

/// Class and root-of-unity identities, closed forms against the DFT, the
/// three linear complexity routes and the trace representation on each
/// parameter pair, then the recurrence oracle against spectrum weight on
/// seeded random sequences of period 7 and 15. Exceptions are recorded as
/// failed checks.
SelftestResult run_selftest(const SelftestOptions& options = {});

}  // namespace quatseq
