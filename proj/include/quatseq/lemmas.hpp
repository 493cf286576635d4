#pragma once

#include <string>
#include <vector>

#include "quatseq/cyclotomy.hpp"
#include "quatseq/galois.hpp"

namespace quatseq {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural facts about the classes that need no ring: the partition of
/// Z_pq, h^4 in D0, ell = lcm(ell_p, ell_q), the counts of w in D0 with
/// h^a + w = 0 modulo p, q and pq, the class of 2 against the case, and the
/// divisibility of ell implied by that class.
std::vector<CheckResult> check_class_identities(const CyclotomicSystem& sys);

/// Identities evaluated at a primitive pq-th root beta: root-of-unity sums,
/// D_i at 1, beta^{kq} and beta^{kp}, the 4x4 table of C_i(beta).C_j(beta),
/// and the rearrangements of rho used by the closed forms.
std::vector<CheckResult> check_root_identities(const CyclotomicSystem& sys, const GrElement& beta);

}  // namespace quatseq
