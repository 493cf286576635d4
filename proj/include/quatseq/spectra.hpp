#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quatseq/cyclotomy.hpp"
#include "quatseq/galois.hpp"

namespace quatseq {

/// Coefficients rho_0..rho_{T-1} of the Mattson-Solomon polynomial
/// G(X) = sum rho_i X^i of a period-T sequence with respect to a primitive
/// T-th root of unity beta, so that s_u = G(beta^u).
struct Spectrum {
  std::uint64_t period = 0;
  RingPtr ring;
  GrElement beta;
  std::vector<GrElement> coeffs;
  std::size_t nonzero_count = 0;
};

struct ClosedFormReport {
  GrElement rho;
  /// The class index k whose coefficient (rho - k, or rho + 2 - k outside
  /// Case55) vanishes, if any.
  std::optional<int> zero_branch;
  std::uint64_t lc_predicted = 0;
  CaseTag case_tag = CaseTag::Case55;
};

/// beta^0, beta^1, ..., beta^{n-1}.
std::vector<GrElement> power_table(const GrElement& beta, std::uint64_t n);

/// D_i(a) = sum over u in D_i of a^u.
GrElement class_poly_eval(const CyclotomicSystem& sys, int i, const GrElement& a);

/// rho_i = T^{-1} sum_u s_u beta^{-iu}. The T^{-1} factor (mod 4) is 1 for
/// every T = 1 mod 4, including all pq in the cyclotomic family, and keeps
/// the transform exactly invertible for T = 3 mod 4.
/// Throws OrderMismatch unless beta has order exactly T.
Spectrum dft(const QuatSequence& seq, const GrElement& beta);

/// G(beta^u) as an element of Z4; throws NotScalar if it is not one.
std::uint8_t reconstruct(const Spectrum& spec, std::uint64_t u);

std::size_t linear_complexity_from_spectrum(const Spectrum& spec);

/// rho = D_1(beta) + 2 D_2(beta) + 3 D_3(beta).
GrElement rho_parameter(const CyclotomicSystem& sys, const GrElement& beta);

/// C_i(beta) . C_j(beta) = sum_k D_{i+k}(beta) D_{j+k}(beta).
GrElement tuple_inner_product(const CyclotomicSystem& sys, const GrElement& beta, int i, int j);

/// G(X) assembled from the closed forms:
///   Case55: 2 sum_{j<p} X^{jq} + sum_k (rho - k) D_k(X)
///   Case15: 2 sum_{j<p} X^{jq} + 2 sum_{0<j<q} X^{jp} + sum_k (rho + 2 - k) D_k(X)
///   Case51: 2 + sum_k (rho + 2 - k) D_k(X)
Spectrum ms_closed_form(const CyclotomicSystem& sys, const GrElement& beta);

/// Linear complexity predicted from the case and from which (if any) class
/// coefficient vanishes.
ClosedFormReport lc_closed_form(const CyclotomicSystem& sys, const GrElement& beta);

/// Coset decomposition of D_0 into cosets g^i <2^step> used by the trace
/// representation.
struct CosetDecomposition {
  int step = 1;                        // 1, 2 or 4
  std::uint64_t generator = 2;         // 2^step mod pq
  std::vector<std::uint64_t> subgroup; // powers of `generator`
  std::vector<std::uint64_t> reps;     // g^i mod pq
};

/// Builds the decomposition of D_0 into cosets of the subgroup generated by
/// 2^step and validates that the cosets partition D_0. step is chosen from
/// the case and from the class of 2: 1 when 2 is in D_0, 2 when it is in
/// D_2, 4 otherwise.
CosetDecomposition class_cosets(const CyclotomicSystem& sys);

enum class TraceMethod {
  /// Teichmuller power sums t + t^(2^s) + ... evaluated by exponent lookup.
  PowerSum,
  /// galois::trace on the ring element (Teichmuller decomposition and
  /// Frobenius); slower, used as a cross-check.
  Frobenius,
};

/// Evaluates e_u through the trace representation
///   e_u = 2 + 2 sum_i TR_1^{l_p}(beta^{u g^i q})          (Case55, Case15)
///           + 2 sum_i TR_1^{l_q}(beta^{u g^i p})          (Case15)
///           + sum_j c_j sum_i TR_s^{l}(beta^{u g^i h^j})
/// with c_j = rho - j (Case55) or rho + 2 - j, and s taken from class_cosets.
class TraceRepresentation {
 public:
  TraceRepresentation(const CyclotomicSystem& sys, const GrElement& beta,
                      TraceMethod method = TraceMethod::PowerSum);

  /// Throws NotScalar if the ring value has non-constant terms.
  std::uint8_t evaluate(std::uint64_t u) const;
  GrElement evaluate_raw(std::uint64_t u) const;

  const CosetDecomposition& cosets() const { return cosets_; }

 private:
  GrElement trace_of_power(std::uint64_t exponent, int s, int r) const;

  CyclotomicSystem sys_;
  GrElement beta_;
  TraceMethod method_;
  std::vector<GrElement> powers_;
  std::vector<GrElement> class_coeffs_;
  CosetDecomposition cosets_;
  std::vector<std::uint64_t> q_reps_, p_reps_;
};

std::uint8_t trace_representation(const CyclotomicSystem& sys, const GrElement& beta,
                                  std::uint64_t u);

/// Throws OrderMismatch unless beta has order exactly n.
void require_order(const GrElement& beta, std::uint64_t n);

}  // namespace quatseq
