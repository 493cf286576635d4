#include <doctest.h>

#include <numeric>

#include "quatseq/error.hpp"
#include "quatseq/numth.hpp"

using namespace quatseq;

TEST_CASE("primality and factoring") {
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(65));
  CHECK(prime_factors(4095) == std::vector<std::uint64_t>{3, 5, 7, 13});
  CHECK(prime_factors(1) == std::vector<std::uint64_t>{});
  // 2^62 - 1 needs the rho path for its larger factors
  const std::uint64_t m = (std::uint64_t{1} << 62) - 1;
  std::uint64_t prod = 1;
  for (auto f : prime_factors(m)) {
    CHECK(is_prime(f));
    std::uint64_t k = m;
    while (k % f == 0) { k /= f; prod *= f; }
  }
  CHECK(prod == m);
}

TEST_CASE("modular arithmetic") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(inverse_mod(3, 65) == 22);
  CHECK_THROWS_AS(inverse_mod(5, 65), Error);
  CHECK(euler_phi(65) == 48);
  CHECK(mul_order(2, 65) == 12);
  CHECK(mul_order(2, 85) == 8);
  CHECK_THROWS_AS(mul_order(5, 65), Error);
  CHECK_THROWS_AS(mul_order(2, 1), Error);
}

TEST_CASE("mul_order divides phi and is minimal") {
  for (std::uint64_t m = 3; m < 300; m += 2) {
    for (std::uint64_t a = 2; a < m; a += 7) {
      if (std::gcd(a, m) != 1) continue;
      auto k = mul_order(a, m);
      CHECK(euler_phi(m) % k == 0);
      CHECK(pow_mod(a, k, m) == 1);
      for (std::uint64_t j = 1; j < k; ++j) REQUIRE(pow_mod(a, j, m) != 1);
    }
  }
}

TEST_CASE("common primitive root and crt") {
  CHECK(common_primitive_root(5, 13) == 2);
  CHECK(common_primitive_root(17, 5) == 3);
  CHECK(common_primitive_root(5, 17) == 3);
  CHECK(crt_pair(2, 1, 5, 13) == 27);
  for (std::uint64_t a = 0; a < 5; ++a) {
    for (std::uint64_t b = 0; b < 13; ++b) {
      auto x = crt_pair(a, b, 5, 13);
      CHECK(x % 5 == a);
      CHECK(x % 13 == b);
    }
  }
  CHECK_THROWS_AS(crt_pair(1, 1, 6, 9), Error);
}

TEST_CASE("parameter validation") {
  CHECK(validate_params(5, 13) == CaseTag::Case55);
  CHECK(validate_params(17, 5) == CaseTag::Case15);
  CHECK(validate_params(5, 17) == CaseTag::Case51);
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{3, 7}, {5, 5}, {4, 13}, {7, 13}, {5, 15}}) {
    try {
      validate_params(p, q);
      FAIL("accepted (" << p << "," << q << ")");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParameters);
    }
  }
}
