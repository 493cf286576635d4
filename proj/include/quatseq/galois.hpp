#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quatseq {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial over the 2-element field, one 0/1 entry per coefficient,
/// constant term first.
using BinaryPoly = std::vector<std::uint8_t>;

/// Polynomial over Z4, constant term first.
using Z4Poly = std::vector<std::uint8_t>;

bool is_irreducible_gf2(std::span<const std::uint8_t> poly);

/// The irreducible binary polynomial of degree r that is smallest when read
/// as a binary number (leading coefficient first).
BinaryPoly smallest_binary_irreducible(int r);

class GrElement;

/// GR(4, 4^r) realised as Z4[X] / (f) for a monic basic irreducible f.
/// Rings are immutable and always owned by a shared_ptr so elements can
/// refer back to them.
class GaloisRing : public std::enable_shared_from_this<GaloisRing> {
 public:
  /// Throws NotIrreducible unless `modulus` is monic over Z4 with an
  /// irreducible reduction mod 2.
  static std::shared_ptr<const GaloisRing> create(Z4Poly modulus);

  int degree() const { return degree_; }
  std::span<const std::uint8_t> modulus() const { return modulus_; }

  GrElement zero() const;
  GrElement one() const;
  GrElement scalar(std::uint8_t c) const;
  /// The class of X.
  GrElement x() const;
  /// Reduces an arbitrary Z4 polynomial into the ring. Values are taken mod 4.
  GrElement element(std::span<const std::uint8_t> coeffs) const;

  bool same_as(const GaloisRing& other) const {
    return this == &other || modulus_ == other.modulus_;
  }

 private:
  explicit GaloisRing(Z4Poly modulus);

  friend class GrElement;
  friend GrElement operator*(const GrElement& lhs, const GrElement& rhs);
  // Reduces a product buffer of length up to 2r-1 in place.
  void reduce(std::vector<std::uint32_t>& buf) const;

  int degree_;
  Z4Poly modulus_;
};

using RingPtr = std::shared_ptr<const GaloisRing>;

/// Graeffe lift: the monic f over Z4 with f(X^2) = +-bin(X) bin(-X).
/// Throws NotIrreducible for reducible input.
RingPtr lift_binary_irreducible(std::span<const std::uint8_t> bin);

/// Lift of the smallest binary irreducible of degree r.
Z4Poly standard_modulus(int r);
RingPtr standard_ring(int r);

/// Element of a Galois ring: r coefficients in {0,1,2,3}, canonically
/// reduced. Arithmetic across different rings throws RingMismatch.
class GrElement {
 public:
  const GaloisRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const std::uint8_t> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when every non-constant coefficient is zero.
  bool is_scalar() const;
  std::uint8_t constant_term() const { return coeffs_[0]; }

  GrElement& operator+=(const GrElement& rhs);
  GrElement& operator-=(const GrElement& rhs);
  GrElement& operator*=(const GrElement& rhs);
  /// this += c * rhs, without allocating.
  GrElement& add_scaled(const GrElement& rhs, std::uint8_t c);
  GrElement& add_scalar(std::uint8_t c);

  friend GrElement operator+(GrElement lhs, const GrElement& rhs) { return lhs += rhs; }
  friend GrElement operator-(GrElement lhs, const GrElement& rhs) { return lhs -= rhs; }
  friend GrElement operator*(const GrElement& lhs, const GrElement& rhs);
  friend GrElement operator*(std::uint8_t c, GrElement a);
  GrElement operator-() const;

  friend bool operator==(const GrElement& a, const GrElement& b);

 private:
  friend class GaloisRing;
  GrElement(RingPtr ring, std::vector<std::uint8_t> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  void require_same_ring(const GrElement& other) const;

  RingPtr ring_;
  std::vector<std::uint8_t> coeffs_;
};

GrElement pow(const GrElement& base, std::uint64_t exp);
GrElement pow(const GrElement& base, const BigInt& exp);

/// a^(2^r): the Teichmuller representative with the same residue mod 2.
GrElement teichmuller_lift(const GrElement& a);
bool is_teichmuller(const GrElement& a);

/// (a1, a2) with a = a1 + 2 a2 and both parts in the Teichmuller set.
std::pair<GrElement, GrElement> teichmuller_decompose(const GrElement& a);

/// a1 + 2 a2  ->  a1^2 + 2 a2^2.
GrElement frobenius(const GrElement& a);

/// The Frobenius applied s times. Throws NotADivisor unless s | r.
GrElement generalized_frobenius(const GrElement& a, int s);

/// TR_s^r(a): the sum of a, Phi_s(a), ..., Phi_s^{r/s-1}(a) where Phi_s is
/// the s-fold Frobenius. r must divide the ring degree and a must lie in the
/// subring GR(4, 4^r) (NotInSubring otherwise); s must divide r.
GrElement trace(const GrElement& a, int s, int r);

/// Generator of the cyclic group of order 2^r - 1 (the nonzero Teichmuller
/// elements). Needs the factorization of 2^r - 1, so r is limited to 63.
GrElement find_group_generator(const GaloisRing& ring);

/// Element of multiplicative order exactly n. n must be odd and divide
/// 2^r - 1; throws OrderUnavailable otherwise.
GrElement primitive_nth_root(const GaloisRing& ring, std::uint64_t n);

/// True when a^n = 1 and a^(n/m) != 1 for every prime m | n.
bool has_exact_order(const GrElement& a, std::uint64_t n);

/// Coefficients as plain integers, constant term first.
std::vector<int> to_list(const GrElement& a);
std::vector<int> to_list(std::span<const std::uint8_t> poly);

}  // namespace quatseq
