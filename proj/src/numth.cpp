#include "quatseq/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quatseq/error.hpp"

namespace quatseq {

namespace {

using u128 = unsigned __int128;

// Deterministic Miller-Rabin for 64-bit inputs; only used while factoring.
bool probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. n must be odd and composite.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case15: return "Case15";
    case CaseTag::Case51: return "Case51";
    case CaseTag::Case55: return "Case55";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to avoid overflow near 2^64.
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 quot = old_r / r;
    __int128 tmp = r;
    r = old_r - quot * r;
    old_r = tmp;
    tmp = s;
    s = old_s - quot * s;
    old_s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::NotCoprime,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  __int128 mm = m;
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  collect_factors(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (std::uint64_t p : prime_factors(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t mul_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  }
  if (std::gcd(a % m, m) != 1) {
    throw Error(ErrorCode::NotCoprime,
                std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  std::uint64_t n = euler_phi(m);
  for (std::uint64_t f : prime_factors(n)) {
    while (n % f == 0 && pow_mod(a, n / f, m) == 1) n /= f;
  }
  return n;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
  if (g % p == 0) return false;
  for (std::uint64_t f : prime_factors(p - 1)) {
    if (pow_mod(g, (p - 1) / f, p) == 1) return false;
  }
  return true;
}

std::uint64_t common_primitive_root(std::uint64_t p, std::uint64_t q) {
  if (p == q || !is_prime(p) || !is_prime(q)) {
    throw Error(ErrorCode::NoParameters,
                "need two distinct primes, got " + std::to_string(p) + " and " +
                    std::to_string(q));
  }
  // A common root exists below pq by the Chinese remainder theorem.
  for (std::uint64_t g = 2; g < p * q; ++g) {
    if (is_primitive_root(g, p) && is_primitive_root(g, q)) return g;
  }
  throw Error(ErrorCode::NoParameters, "no common primitive root (p or q is 2)");
}

std::uint64_t crt_pair(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                       std::uint64_t q) {
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "moduli " + std::to_string(p) + " and " +
                                           std::to_string(q) + " are not coprime");
  }
  a %= p;
  b %= q;
  // x = a + p * ((b - a) * p^-1 mod q)
  std::uint64_t diff = (b + q - a % q) % q;
  std::uint64_t t = mul_mod(diff, inverse_mod(p % q, q), q);
  return a + p * t;
}

CaseTag validate_params(std::uint64_t p, std::uint64_t q) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidParameters,
                "invalid (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) +
                    "): " + why);
  };
  if (p % 2 == 0 || !is_prime(p)) fail("p is not an odd prime");
  if (q % 2 == 0 || !is_prime(q)) fail("q is not an odd prime");
  if (p == q) fail("p and q are not distinct");
  std::uint64_t g = std::gcd(p - 1, q - 1);
  if (g != 4) fail("gcd(p-1, q-1) = " + std::to_string(g) + ", expected 4");
  if (p % 8 == 1) return CaseTag::Case15;
  if (q % 8 == 1) return CaseTag::Case51;
  return CaseTag::Case55;
}

}  // namespace quatseq
