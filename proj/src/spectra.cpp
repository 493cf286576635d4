#include "quatseq/spectra.hpp"

#include <string>

#include "quatseq/error.hpp"
#include "quatseq/numth.hpp"

namespace quatseq {

namespace {

// Offset added to rho in the class coefficients: rho - k for Case55,
// rho + 2 - k otherwise.
std::uint8_t class_offset(CaseTag tag) { return tag == CaseTag::Case55 ? 0 : 2; }

std::vector<GrElement> class_coefficients(const CyclotomicSystem& sys, const GrElement& rho) {
  std::vector<GrElement> out;
  const std::uint8_t offset = class_offset(sys.case_tag());
  for (int k = 0; k < 4; ++k) {
    GrElement c = rho;
    c.add_scalar(static_cast<std::uint8_t>((offset + 4 - k) & 3));
    out.push_back(std::move(c));
  }
  return out;
}

GrElement sum_over(std::span<const std::uint64_t> exponents, const std::vector<GrElement>& powers,
                   const GrElement& zero) {
  GrElement acc = zero;
  for (std::uint64_t u : exponents) acc += powers[u % powers.size()];
  return acc;
}

std::size_t count_nonzero(const std::vector<GrElement>& coeffs) {
  std::size_t n = 0;
  for (const auto& c : coeffs) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace

void require_order(const GrElement& beta, std::uint64_t n) {
  if (!has_exact_order(beta, n)) {
    throw Error(ErrorCode::OrderMismatch,
                "root of unity does not have order " + std::to_string(n));
  }
}

std::vector<GrElement> power_table(const GrElement& beta, std::uint64_t n) {
  std::vector<GrElement> powers;
  powers.reserve(n);
  GrElement cur = beta.ring().one();
  for (std::uint64_t k = 0; k < n; ++k) {
    powers.push_back(cur);
    cur *= beta;
  }
  return powers;
}

GrElement class_poly_eval(const CyclotomicSystem& sys, int i, const GrElement& a) {
  return sum_over(sys.cls(i), power_table(a, sys.modulus()), a.ring().zero());
}

Spectrum dft(const QuatSequence& seq, const GrElement& beta) {
  const std::uint64_t T = seq.period();
  if (T % 2 == 0) throw Error(ErrorCode::OrderMismatch, "period must be odd");
  require_order(beta, T);
  const auto powers = power_table(beta, T);
  const std::size_t r = static_cast<std::size_t>(beta.ring().degree());
  // T is odd, so T * T = 1 (mod 4) and T is its own inverse.
  const std::uint32_t inv_t = static_cast<std::uint32_t>(T % 4);

  std::vector<GrElement> coeffs;
  coeffs.reserve(T);
  std::vector<std::uint32_t> acc(r);
  std::vector<std::uint8_t> reduced(r);
  for (std::uint64_t i = 0; i < T; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint64_t u = 0; u < T; ++u) {
      const std::uint32_t s = seq[u];
      if (s == 0) continue;
      const auto& w = powers[(T - (i * u) % T) % T].coeffs();
      for (std::size_t c = 0; c < r; ++c) acc[c] += s * w[c];
    }
    for (std::size_t c = 0; c < r; ++c) reduced[c] = static_cast<std::uint8_t>((acc[c] * inv_t) & 3);
    coeffs.push_back(beta.ring().element(reduced));
  }
  std::size_t nonzero = count_nonzero(coeffs);
  return Spectrum{T, beta.ring_ptr(), beta, std::move(coeffs), nonzero};
}

std::uint8_t reconstruct(const Spectrum& spec, std::uint64_t u) {
  const std::uint64_t T = spec.period;
  const auto powers = power_table(spec.beta, T);
  GrElement acc = spec.ring->zero();
  for (std::uint64_t i = 0; i < T; ++i) {
    if (spec.coeffs[i].is_zero()) continue;
    acc += spec.coeffs[i] * powers[(i * (u % T)) % T];
  }
  if (!acc.is_scalar()) {
    throw Error(ErrorCode::NotScalar, "G(beta^" + std::to_string(u) + ") is not in Z4");
  }
  return acc.constant_term();
}

std::size_t linear_complexity_from_spectrum(const Spectrum& spec) { return spec.nonzero_count; }

GrElement rho_parameter(const CyclotomicSystem& sys, const GrElement& beta) {
  require_order(beta, sys.modulus());
  const auto powers = power_table(beta, sys.modulus());
  GrElement rho = beta.ring().zero();
  for (int k = 1; k < 4; ++k) {
    rho.add_scaled(sum_over(sys.cls(k), powers, beta.ring().zero()), static_cast<std::uint8_t>(k));
  }
  return rho;
}

GrElement tuple_inner_product(const CyclotomicSystem& sys, const GrElement& beta, int i, int j) {
  require_order(beta, sys.modulus());
  const auto powers = power_table(beta, sys.modulus());
  std::vector<GrElement> d;
  for (int k = 0; k < 4; ++k) d.push_back(sum_over(sys.cls(k), powers, beta.ring().zero()));
  GrElement acc = beta.ring().zero();
  for (int k = 0; k < 4; ++k) {
    acc += d[CyclotomicSystem::index_mod4(i + k)] * d[CyclotomicSystem::index_mod4(j + k)];
  }
  return acc;
}

Spectrum ms_closed_form(const CyclotomicSystem& sys, const GrElement& beta) {
  const std::uint64_t T = sys.modulus();
  const GrElement rho = rho_parameter(sys, beta);
  const auto class_coeffs = class_coefficients(sys, rho);

  std::vector<GrElement> coeffs(T, beta.ring().zero());
  for (int k = 0; k < 4; ++k) {
    for (std::uint64_t u : sys.cls(k)) coeffs[u] = class_coeffs[k];
  }
  switch (sys.case_tag()) {
    case CaseTag::Case55:
      for (std::uint64_t j = 0; j < sys.p(); ++j) coeffs[j * sys.q()].add_scalar(2);
      break;
    case CaseTag::Case15:
      for (std::uint64_t j = 0; j < sys.p(); ++j) coeffs[j * sys.q()].add_scalar(2);
      for (std::uint64_t j = 1; j < sys.q(); ++j) coeffs[j * sys.p()].add_scalar(2);
      break;
    case CaseTag::Case51:
      coeffs[0].add_scalar(2);
      break;
  }
  std::size_t nonzero = count_nonzero(coeffs);
  return Spectrum{T, beta.ring_ptr(), beta, std::move(coeffs), nonzero};
}

ClosedFormReport lc_closed_form(const CyclotomicSystem& sys, const GrElement& beta) {
  GrElement rho = rho_parameter(sys, beta);
  const auto class_coeffs = class_coefficients(sys, rho);
  std::optional<int> zero_branch;
  for (int k = 0; k < 4; ++k) {
    if (class_coeffs[k].is_zero()) {
      if (zero_branch) throw Error(ErrorCode::Internal, "two class coefficients vanish");
      zero_branch = k;
    }
  }
  const std::uint64_t p = sys.p(), q = sys.q();
  std::uint64_t base = 0;
  switch (sys.case_tag()) {
    case CaseTag::Case55: base = p + (p - 1) * (q - 1); break;
    case CaseTag::Case15: base = p + q - 1 + (p - 1) * (q - 1); break;
    case CaseTag::Case51: base = 1 + (p - 1) * (q - 1); break;
  }
  const std::uint64_t lc = zero_branch ? base - sys.e() : base;
  return ClosedFormReport{std::move(rho), zero_branch, lc, sys.case_tag()};
}

CosetDecomposition class_cosets(const CyclotomicSystem& sys) {
  const int two = sys.two_class();
  int step = 0;
  if (sys.case_tag() == CaseTag::Case55) {
    if (two == 0) step = 1;
    if (two == 2) step = 2;
  } else if (two % 2 == 1) {
    step = 4;
  }
  if (step == 0) {
    throw Error(ErrorCode::Internal, "class of 2 (D" + std::to_string(two) +
                                         ") is inconsistent with " +
                                         std::string(to_string(sys.case_tag())));
  }
  const std::uint64_t n = sys.modulus();
  CosetDecomposition dec;
  dec.step = step;
  dec.generator = pow_mod(2, static_cast<std::uint64_t>(step), n);
  std::uint64_t x = 1;
  do {
    dec.subgroup.push_back(x);
    x = mul_mod(x, dec.generator, n);
  } while (x != 1);
  if (sys.ell() % static_cast<std::uint64_t>(step) != 0 ||
      dec.subgroup.size() != sys.ell() / static_cast<std::uint64_t>(step)) {
    throw Error(ErrorCode::Internal, "subgroup generated by 2^step has unexpected size");
  }
  const std::uint64_t coset_count = sys.e() / dec.subgroup.size();
  std::vector<std::uint8_t> seen(n, 0);
  std::uint64_t rep = 1;
  for (std::uint64_t i = 0; i < coset_count; ++i) {
    dec.reps.push_back(rep);
    for (std::uint64_t v : dec.subgroup) {
      std::uint64_t w = mul_mod(rep, v, n);
      if (sys.class_shift(w) != 0 || seen[w]) {
        throw Error(ErrorCode::Internal, "cosets do not partition D0");
      }
      seen[w] = 1;
    }
    rep = mul_mod(rep, sys.g(), n);
  }
  return dec;
}

namespace {

// Representatives g^i (i < (m-1)/ord_m(2)) of the cosets of <2> in Z_m^*.
std::vector<std::uint64_t> prime_coset_reps(std::uint64_t m, std::uint64_t ell_m, std::uint64_t g) {
  std::vector<std::uint64_t> reps;
  std::vector<std::uint8_t> seen(m, 0);
  std::uint64_t rep = 1;
  for (std::uint64_t i = 0; i < (m - 1) / ell_m; ++i) {
    reps.push_back(rep);
    std::uint64_t x = rep;
    for (std::uint64_t j = 0; j < ell_m; ++j) {
      if (seen[x]) throw Error(ErrorCode::Internal, "cosets of <2> overlap");
      seen[x] = 1;
      x = mul_mod(x, 2, m);
    }
    rep = mul_mod(rep, g, m);
  }
  return reps;
}

}  // namespace

TraceRepresentation::TraceRepresentation(const CyclotomicSystem& sys, const GrElement& beta,
                                         TraceMethod method)
    : sys_(sys), beta_(beta), method_(method) {
  require_order(beta, sys.modulus());
  powers_ = power_table(beta, sys.modulus());
  class_coeffs_ = class_coefficients(sys, rho_parameter(sys, beta));
  cosets_ = class_cosets(sys);
  if (sys.case_tag() != CaseTag::Case51) q_reps_ = prime_coset_reps(sys.p(), sys.ell_p(), sys.g());
  if (sys.case_tag() == CaseTag::Case15) p_reps_ = prime_coset_reps(sys.q(), sys.ell_q(), sys.g());
}

GrElement TraceRepresentation::trace_of_power(std::uint64_t exponent, int s, int r) const {
  const std::uint64_t T = sys_.modulus();
  exponent %= T;
  if (method_ == TraceMethod::Frobenius) return trace(powers_[exponent], s, r);
  const std::uint64_t frob = pow_mod(2, static_cast<std::uint64_t>(s), T);
  GrElement acc = beta_.ring().zero();
  for (int j = 0; j < r / s; ++j) {
    acc += powers_[exponent];
    exponent = mul_mod(exponent, frob, T);
  }
  return acc;
}

GrElement TraceRepresentation::evaluate_raw(std::uint64_t u) const {
  const std::uint64_t T = sys_.modulus();
  u %= T;
  GrElement acc = beta_.ring().scalar(2);
  for (std::uint64_t rep : q_reps_) {
    std::uint64_t exponent = mul_mod(mul_mod(u, rep, T), sys_.q(), T);
    acc.add_scaled(trace_of_power(exponent, 1, static_cast<int>(sys_.ell_p())), 2);
  }
  for (std::uint64_t rep : p_reps_) {
    std::uint64_t exponent = mul_mod(mul_mod(u, rep, T), sys_.p(), T);
    acc.add_scaled(trace_of_power(exponent, 1, static_cast<int>(sys_.ell_q())), 2);
  }
  const int ell = static_cast<int>(sys_.ell());
  std::uint64_t h_pow = 1;
  for (int j = 0; j < 4; ++j) {
    GrElement inner = beta_.ring().zero();
    for (std::uint64_t rep : cosets_.reps) {
      std::uint64_t exponent = mul_mod(mul_mod(u, rep, T), h_pow, T);
      inner += trace_of_power(exponent, cosets_.step, ell);
    }
    acc += class_coeffs_[j] * inner;
    h_pow = mul_mod(h_pow, sys_.h(), T);
  }
  return acc;
}

std::uint8_t TraceRepresentation::evaluate(std::uint64_t u) const {
  GrElement value = evaluate_raw(u);
  if (!value.is_scalar()) {
    throw Error(ErrorCode::NotScalar,
                "trace representation at u=" + std::to_string(u) + " is not in Z4");
  }
  return value.constant_term();
}

std::uint8_t trace_representation(const CyclotomicSystem& sys, const GrElement& beta,
                                  std::uint64_t u) {
  return TraceRepresentation(sys, beta).evaluate(u);
}

}  // namespace quatseq
