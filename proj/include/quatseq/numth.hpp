#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace quatseq {

/// Congruence class of (p mod 8, q mod 8) for primes with gcd(p-1, q-1) = 4.
/// Case15 is p = 1, q = 5; Case51 is p = 5, q = 1; Case55 is p = q = 5.
enum class CaseTag { Case15, Case51, Case55 };

std::string_view to_string(CaseTag tag);

/// Deterministic trial division. Intended for the small primes used as
/// sequence parameters.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Throws NotCoprime when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Distinct prime factors in ascending order. Handles the full 64-bit range
/// (Pollard rho), which is needed for 2^r - 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Least n >= 1 with a^n = 1 (mod m).
std::uint64_t mul_order(std::uint64_t a, std::uint64_t m);

bool is_primitive_root(std::uint64_t g, std::uint64_t p);

/// Smallest g >= 2 that is a primitive root modulo both p and q.
std::uint64_t common_primitive_root(std::uint64_t p, std::uint64_t q);

/// The unique x in [0, pq) with x = a (mod p) and x = b (mod q).
std::uint64_t crt_pair(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                       std::uint64_t q);

/// Checks that p, q are distinct odd primes with gcd(p-1, q-1) = 4 and
/// returns their case. Throws InvalidParameters with the reason otherwise.
CaseTag validate_params(std::uint64_t p, std::uint64_t q);

}  // namespace quatseq
