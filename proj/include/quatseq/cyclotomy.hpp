#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quatseq/numth.hpp"

namespace quatseq {

/// Which piece of the partition of Z_pq a residue belongs to: one of the
/// generalized cyclotomic classes D0..D3, the multiples of p (P), the
/// nonzero multiples of q (Q), or zero (R).
struct ClassLabel {
  enum class Kind : std::uint8_t { D, P, Q, R };

  Kind kind = Kind::R;
  int index = 0;  // meaningful for Kind::D only

  static ClassLabel d(int i) { return {Kind::D, i}; }
  static ClassLabel p() { return {Kind::P, 0}; }
  static ClassLabel q() { return {Kind::Q, 0}; }
  static ClassLabel r() { return {Kind::R, 0}; }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(const ClassLabel& label);

/// One period of a sequence over Z4.
class QuatSequence {
 public:
  explicit QuatSequence(std::vector<std::uint8_t> values);

  std::size_t period() const { return values_.size(); }
  /// Value at u mod period.
  std::uint8_t operator[](std::uint64_t u) const { return values_[u % values_.size()]; }
  std::span<const std::uint8_t> values() const { return values_; }

  friend bool operator==(const QuatSequence&, const QuatSequence&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// The arithmetic context for a pair of primes (p, q) with gcd(p-1, q-1) = 4:
/// the common primitive root g, the CRT partner h (h = g mod p, h = 1 mod q),
/// the four classes D_i = { g^s h^i mod pq : 0 <= s < e }, and the orders of
/// 2 modulo pq, p and q. Immutable once built.
class CyclotomicSystem {
 public:
  /// Builds the system for (p, q). When `g` is given it must be a common
  /// primitive root of p and q; otherwise the smallest one is used.
  static CyclotomicSystem build(std::uint64_t p, std::uint64_t q,
                                std::optional<std::uint64_t> g = std::nullopt);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t modulus() const { return p_ * q_; }
  std::uint64_t g() const { return g_; }
  std::uint64_t h() const { return h_; }
  std::uint64_t e() const { return e_; }
  CaseTag case_tag() const { return case_; }
  std::uint64_t ell() const { return ell_; }
  std::uint64_t ell_p() const { return ell_p_; }
  std::uint64_t ell_q() const { return ell_q_; }

  /// Sorted residues of D_i; the index is taken mod 4.
  std::span<const std::uint64_t> cls(int i) const { return classes_[index_mod4(i)]; }
  std::span<const std::uint64_t> set_p() const { return set_p_; }
  std::span<const std::uint64_t> set_q() const { return set_q_; }

  ClassLabel class_of(std::uint64_t u) const;

  /// j with u in D_j, so that u * D_i = D_{i+j}. Throws NotAUnit.
  int class_shift(std::uint64_t u) const;

  /// Index of the class containing 2.
  int two_class() const { return class_shift(2); }

  static int index_mod4(int i) { return ((i % 4) + 4) % 4; }

 private:
  CyclotomicSystem() = default;

  std::uint64_t p_ = 0, q_ = 0, g_ = 0, h_ = 0, e_ = 0;
  std::uint64_t ell_ = 0, ell_p_ = 0, ell_q_ = 0;
  CaseTag case_ = CaseTag::Case55;
  std::array<std::vector<std::uint64_t>, 4> classes_;
  std::vector<std::uint64_t> set_p_, set_q_;
  // 0..3 = D_i, 4 = P, 5 = Q, 6 = R
  std::vector<std::uint8_t> labels_;
};

inline CyclotomicSystem build_system(std::uint64_t p, std::uint64_t q,
                                     std::optional<std::uint64_t> g = std::nullopt) {
  return CyclotomicSystem::build(p, q, g);
}

/// e_u = 2 on Q and R, 0 on P, i on D_i.
QuatSequence build_sequence(const CyclotomicSystem& sys);

}  // namespace quatseq
