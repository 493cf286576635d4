#include <doctest.h>

#include <random>

#include "quatseq/error.hpp"
#include "quatseq/numth.hpp"
#include "quatseq/spectra.hpp"

using namespace quatseq;

namespace {

struct Setup {
  CyclotomicSystem sys;
  GrElement beta;
};

Setup setup(std::uint64_t p, std::uint64_t q, std::optional<std::uint64_t> g = {}) {
  auto sys = build_system(p, q, g);
  auto ring = standard_ring(static_cast<int>(sys.ell()));
  return {sys, primitive_nth_root(*ring, sys.modulus())};
}

QuatSequence random_sequence(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = rng() & 3;
  return QuatSequence(std::move(v));
}

}  // namespace

TEST_CASE("dft roundtrip on random sequences") {
  std::mt19937_64 rng(3);
  for (auto [r, n] : {std::pair<int, std::uint64_t>{2, 3}, {3, 7}, {4, 15}, {4, 5}}) {
    auto beta = primitive_nth_root(*standard_ring(r), n);
    for (int t = 0; t < 30; ++t) {
      auto s = random_sequence(n, rng);
      auto spec = dft(s, beta);
      for (std::uint64_t u = 0; u < n; ++u) REQUIRE(reconstruct(spec, u) == s[u]);
    }
  }
}

TEST_CASE("dft is linear and rejects the wrong period") {
  std::mt19937_64 rng(5);
  auto beta = primitive_nth_root(*standard_ring(4), 15);
  auto a = random_sequence(15, rng), b = random_sequence(15, rng);
  std::vector<std::uint8_t> sum(15);
  for (int i = 0; i < 15; ++i) sum[i] = (a[i] + b[i]) & 3;
  auto sa = dft(a, beta), sb = dft(b, beta), ss = dft(QuatSequence(sum), beta);
  for (int i = 0; i < 15; ++i) CHECK(ss.coeffs[i] == sa.coeffs[i] + sb.coeffs[i]);
  CHECK_THROWS_AS(dft(random_sequence(7, rng), beta), Error);
}

TEST_CASE("closed form spectrum equals dft") {
  for (auto [p, q, g] : {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{5, 13, 2},
                         {5, 13, 7}, {17, 5, 3}, {5, 17, 3}, {13, 5, 2}}) {
    auto [sys, beta] = setup(p, q, g);
    auto direct = dft(build_sequence(sys), beta);
    auto closed = ms_closed_form(sys, beta);
    REQUIRE(direct.coeffs.size() == closed.coeffs.size());
    for (std::size_t i = 0; i < direct.coeffs.size(); ++i) CHECK(direct.coeffs[i] == closed.coeffs[i]);
    auto report = lc_closed_form(sys, beta);
    CHECK(report.lc_predicted == linear_complexity_from_spectrum(direct));
  }
}

TEST_CASE("linear complexity regression values") {
  CHECK(lc_closed_form(setup(5, 13).sys, setup(5, 13).beta).lc_predicted == 41);
  CHECK(lc_closed_form(setup(5, 13, 7).sys, setup(5, 13, 7).beta).lc_predicted == 53);
  CHECK(lc_closed_form(setup(17, 5).sys, setup(17, 5).beta).lc_predicted == 85);
  CHECK(lc_closed_form(setup(5, 17).sys, setup(5, 17).beta).lc_predicted == 65);
}

TEST_CASE("class sums shift under unit multipliers") {
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 13}, {17, 5}, {5, 17}}) {
    auto [sys, beta] = setup(p, q);
    for (int k = 0; k < 4; ++k) {
      auto w = sys.cls(k)[0];
      auto bw = pow(beta, w);
      for (int i = 0; i < 4; ++i) {
        CHECK(class_poly_eval(sys, i, bw) == class_poly_eval(sys, i + k, beta));
      }
    }
    // at most one of rho, rho - 1, rho - 2, rho - 3 vanishes
    int zeros = 0;
    for (std::uint8_t k = 0; k < 4; ++k) {
      auto v = rho_parameter(sys, beta);
      v.add_scalar(static_cast<std::uint8_t>(4 - k));
      zeros += v.is_zero();
    }
    CHECK(zeros <= 1);
  }
}

TEST_CASE("trace representation reproduces the sequence") {
  for (auto [p, q, g] : {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{5, 13, 2},
                         {5, 13, 7}, {17, 5, 3}, {5, 17, 3}}) {
    auto [sys, beta] = setup(p, q, g);
    auto seq = build_sequence(sys);
    TraceRepresentation a(sys, beta), b(sys, beta, TraceMethod::Frobenius);
    for (std::uint64_t u = 0; u < sys.modulus(); ++u) {
      CHECK(a.evaluate(u) == seq[u]);
      CHECK(b.evaluate_raw(u) == a.evaluate_raw(u));
    }
    auto expected_step = sys.case_tag() != CaseTag::Case55 ? 4 : sys.two_class() == 0 ? 1 : 2;
    CHECK(a.cosets().step == expected_step);
    CHECK(a.cosets().reps.size() * a.cosets().subgroup.size() == sys.e());
  }
}

TEST_CASE("beta independence of the linear complexity") {
  auto [sys, beta] = setup(5, 13);
  auto seq = build_sequence(sys);
  auto base = linear_complexity_from_spectrum(dft(seq, beta));
  for (std::uint64_t w : {2, 3, 7, 11, 64}) {
    CHECK(linear_complexity_from_spectrum(dft(seq, pow(beta, w))) == base);
  }
}
