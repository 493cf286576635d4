#include "quatseq/galois.hpp"

#include <algorithm>
#include <string>

#include "quatseq/error.hpp"
#include "quatseq/numth.hpp"

namespace quatseq {

namespace {

// Dense bit-packed polynomials over GF(2), used for irreducibility testing.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly from_bits(std::span<const std::uint8_t> bits) {
    Gf2Poly p;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] & 1) p.set(static_cast<int>(i));
    }
    return p;
  }

  static Gf2Poly monomial(int i) {
    Gf2Poly p;
    p.set(i);
    return p;
  }

  int degree() const {
    for (int wi = static_cast<int>(words_.size()) - 1; wi >= 0; --wi) {
      if (words_[wi] != 0) return wi * 64 + 63 - __builtin_clzll(words_[wi]);
    }
    return -1;
  }

  bool is_zero() const { return degree() < 0; }
  bool bit(int i) const {
    std::size_t wi = static_cast<std::size_t>(i) / 64;
    return wi < words_.size() && ((words_[wi] >> (i % 64)) & 1);
  }
  void set(int i) {
    grow(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void flip(int i) {
    grow(i);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  // this ^= other << shift
  void xor_shifted(const Gf2Poly& other, int shift) {
    int od = other.degree();
    if (od < 0) return;
    grow(od + shift);
    int ws = shift / 64, bs = shift % 64;
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
      std::uint64_t w = other.words_[i];
      if (w == 0) continue;
      words_[i + ws] ^= w << bs;
      if (bs != 0 && i + ws + 1 < words_.size()) words_[i + ws + 1] ^= w >> (64 - bs);
    }
  }

  void reduce(const Gf2Poly& f) {
    int df = f.degree();
    for (int i = degree(); i >= df; --i) {
      if (bit(i)) xor_shifted(f, i - df);
    }
    trim();
  }

  Gf2Poly square_mod(const Gf2Poly& f) const {
    Gf2Poly out;
    for (int i = degree(); i >= 0; --i) {
      if (bit(i)) out.set(2 * i);
    }
    out.reduce(f);
    return out;
  }

  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) {
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
      std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
      if (x != y) return false;
    }
    return true;
  }

 private:
  void grow(int bit_index) {
    std::size_t need = static_cast<std::size_t>(bit_index) / 64 + 1;
    if (words_.size() < need) words_.resize(need, 0);
  }
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    a.reduce(b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint8_t> residue_bits(std::uint64_t k, int r) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r && i < 64; ++i) bits[i] = (k >> i) & 1;
  return bits;
}

}  // namespace

bool is_irreducible_gf2(std::span<const std::uint8_t> poly) {
  Gf2Poly f = Gf2Poly::from_bits(poly);
  const int r = f.degree();
  if (r < 1) return false;
  // Rabin: x^(2^r) = x mod f, and gcd(x^(2^(r/m)) - x, f) = 1 for primes m | r.
  Gf2Poly x = Gf2Poly::monomial(1);
  x.reduce(f);
  std::vector<std::uint64_t> primes = prime_factors(static_cast<std::uint64_t>(r));
  std::vector<Gf2Poly> frob(static_cast<std::size_t>(r) + 1);
  frob[0] = x;
  for (int i = 1; i <= r; ++i) frob[i] = frob[i - 1].square_mod(f);
  if (!(frob[r] == x)) return false;
  for (std::uint64_t m : primes) {
    Gf2Poly h = frob[r / static_cast<int>(m)];
    h.xor_shifted(x, 0);
    if (gf2_gcd(f, h).degree() != 0) return false;
  }
  return true;
}

BinaryPoly smallest_binary_irreducible(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  if (r == 1) return {0, 1};
  // Ascending numeric order of the lower coefficients is lexicographic order
  // of the whole polynomial read from the leading term.
  for (std::uint64_t k = 1;; k += 2) {
    BinaryPoly poly = residue_bits(k, r);
    poly.push_back(1);
    if (is_irreducible_gf2(poly)) return poly;
  }
}

// GaloisRing ---------------------------------------------------------------

GaloisRing::GaloisRing(Z4Poly modulus)
    : degree_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {}

RingPtr GaloisRing::create(Z4Poly modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorCode::NotIrreducible, "modulus must be monic of degree at least 1");
  }
  for (auto c : modulus) {
    if (c > 3) throw Error(ErrorCode::InvalidArgument, "modulus coefficient outside Z4");
  }
  BinaryPoly reduced(modulus.size());
  std::transform(modulus.begin(), modulus.end(), reduced.begin(),
                 [](std::uint8_t c) { return static_cast<std::uint8_t>(c & 1); });
  if (!is_irreducible_gf2(reduced)) {
    throw Error(ErrorCode::NotIrreducible, "modulus is not basic irreducible");
  }
  return RingPtr(new GaloisRing(std::move(modulus)));
}

void GaloisRing::reduce(std::vector<std::uint32_t>& buf) const {
  const std::size_t r = static_cast<std::size_t>(degree_);
  for (std::size_t k = buf.size(); k-- > r;) {
    std::uint32_t t = buf[k] & 3;
    if (t == 0) continue;
    std::uint32_t neg = 4 - t;
    std::size_t base = k - r;
    for (std::size_t i = 0; i < r; ++i) buf[base + i] += neg * modulus_[i];
  }
  buf.resize(r);
}

GrElement GaloisRing::element(std::span<const std::uint8_t> coeffs) const {
  std::vector<std::uint32_t> buf(std::max(coeffs.size(), static_cast<std::size_t>(degree_)), 0);
  std::copy(coeffs.begin(), coeffs.end(), buf.begin());
  reduce(buf);
  std::vector<std::uint8_t> out(buf.size());
  std::transform(buf.begin(), buf.end(), out.begin(),
                 [](std::uint32_t v) { return static_cast<std::uint8_t>(v & 3); });
  return GrElement(shared_from_this(), std::move(out));
}

GrElement GaloisRing::zero() const {
  return GrElement(shared_from_this(), std::vector<std::uint8_t>(degree_, 0));
}

GrElement GaloisRing::scalar(std::uint8_t c) const {
  std::vector<std::uint8_t> v(degree_, 0);
  v[0] = c & 3;
  return GrElement(shared_from_this(), std::move(v));
}

GrElement GaloisRing::one() const { return scalar(1); }

GrElement GaloisRing::x() const {
  const std::uint8_t x[] = {0, 1};
  return element(x);
}

RingPtr lift_binary_irreducible(std::span<const std::uint8_t> bin) {
  if (!is_irreducible_gf2(bin)) {
    throw Error(ErrorCode::NotIrreducible, "binary polynomial is reducible");
  }
  std::size_t n = bin.size();
  while (n > 0 && (bin[n - 1] & 1) == 0) --n;
  const std::size_t r = n - 1;
  // g(X) * g(-X) over Z4; odd-degree terms cancel.
  std::vector<int> prod(2 * r + 1, 0);
  for (std::size_t i = 0; i <= r; ++i) {
    if ((bin[i] & 1) == 0) continue;
    for (std::size_t j = 0; j <= r; ++j) {
      if ((bin[j] & 1) == 0) continue;
      prod[i + j] += (j % 2 == 0) ? 1 : -1;
    }
  }
  const int sign = (r % 2 == 0) ? 1 : -1;
  Z4Poly f(r + 1);
  for (std::size_t i = 0; i <= r; ++i) {
    f[i] = static_cast<std::uint8_t>(((sign * prod[2 * i]) % 4 + 4) % 4);
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (((prod[2 * i + 1] % 4) + 4) % 4 != 0) {
      throw Error(ErrorCode::Internal, "Graeffe product has odd-degree terms");
    }
  }
  return GaloisRing::create(std::move(f));
}

Z4Poly standard_modulus(int r) {
  RingPtr ring = lift_binary_irreducible(smallest_binary_irreducible(r));
  return Z4Poly(ring->modulus().begin(), ring->modulus().end());
}

RingPtr standard_ring(int r) { return lift_binary_irreducible(smallest_binary_irreducible(r)); }

// GrElement ----------------------------------------------------------------

void GrElement::require_same_ring(const GrElement& other) const {
  if (!ring_->same_as(*other.ring_)) {
    throw Error(ErrorCode::RingMismatch, "operands belong to different Galois rings");
  }
}

bool GrElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint8_t c) { return c == 0; });
}

bool GrElement::is_scalar() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint8_t c) { return c == 0; });
}

GrElement& GrElement::operator+=(const GrElement& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + rhs.coeffs_[i]) & 3;
  return *this;
}

GrElement& GrElement::operator-=(const GrElement& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] + 4 - rhs.coeffs_[i]) & 3;
  }
  return *this;
}

GrElement& GrElement::add_scaled(const GrElement& rhs, std::uint8_t c) {
  require_same_ring(rhs);
  c &= 3;
  if (c == 0) return *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] + c * rhs.coeffs_[i]) & 3;
  }
  return *this;
}

GrElement& GrElement::add_scalar(std::uint8_t c) {
  coeffs_[0] = (coeffs_[0] + c) & 3;
  return *this;
}

GrElement& GrElement::operator*=(const GrElement& rhs) {
  *this = *this * rhs;
  return *this;
}

GrElement operator*(const GrElement& lhs, const GrElement& rhs) {
  lhs.require_same_ring(rhs);
  const std::size_t r = lhs.coeffs_.size();
  std::vector<std::uint32_t> buf(2 * r - 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint32_t a = lhs.coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < r; ++j) buf[i + j] += a * rhs.coeffs_[j];
  }
  lhs.ring_->reduce(buf);
  std::vector<std::uint8_t> out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = static_cast<std::uint8_t>(buf[i] & 3);
  return GrElement(lhs.ring_, std::move(out));
}

GrElement operator*(std::uint8_t c, GrElement a) {
  for (auto& v : a.coeffs_) v = (v * c) & 3;
  return a;
}

GrElement GrElement::operator-() const {
  GrElement out = *this;
  for (auto& v : out.coeffs_) v = (4 - v) & 3;
  return out;
}

bool operator==(const GrElement& a, const GrElement& b) {
  return a.ring_->same_as(*b.ring_) && a.coeffs_ == b.coeffs_;
}

GrElement pow(const GrElement& base, std::uint64_t exp) {
  GrElement result = base.ring().one();
  GrElement b = base;
  while (exp != 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

GrElement pow(const GrElement& base, const BigInt& exp) {
  if (exp < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  GrElement result = base.ring().one();
  if (exp == 0) return result;
  for (auto bit = static_cast<std::int64_t>(boost::multiprecision::msb(exp)); bit >= 0; --bit) {
    result *= result;
    if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(bit))) result *= base;
  }
  return result;
}

GrElement teichmuller_lift(const GrElement& a) {
  GrElement t = a;
  for (int i = 0; i < a.ring().degree(); ++i) t *= t;
  return t;
}

bool is_teichmuller(const GrElement& a) { return teichmuller_lift(a) == a; }

std::pair<GrElement, GrElement> teichmuller_decompose(const GrElement& a) {
  GrElement a1 = teichmuller_lift(a);
  GrElement diff = a - a1;
  std::vector<std::uint8_t> half(diff.coeffs().size());
  for (std::size_t i = 0; i < half.size(); ++i) {
    std::uint8_t c = diff.coeffs()[i];
    if (c & 1) throw Error(ErrorCode::Internal, "a - a^(2^r) is not divisible by 2");
    half[i] = c >> 1;
  }
  return {std::move(a1), teichmuller_lift(a.ring().element(half))};
}

GrElement frobenius(const GrElement& a) {
  auto [a1, a2] = teichmuller_decompose(a);
  GrElement out = a1 * a1;
  out.add_scaled(a2 * a2, 2);
  return out;
}

GrElement generalized_frobenius(const GrElement& a, int s) {
  const int r = a.ring().degree();
  if (s < 1 || r % s != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(s) + " does not divide the ring degree " + std::to_string(r));
  }
  auto [a1, a2] = teichmuller_decompose(a);
  for (int i = 0; i < s; ++i) {
    a1 *= a1;
    a2 *= a2;
  }
  a1.add_scaled(a2, 2);
  return a1;
}

GrElement trace(const GrElement& a, int s, int r) {
  const int degree = a.ring().degree();
  if (s < 1 || r < 1 || r % s != 0 || degree % r != 0) {
    throw Error(ErrorCode::NotADivisor, "trace needs s | r | ring degree, got s=" +
                                            std::to_string(s) + " r=" + std::to_string(r) +
                                            " degree=" + std::to_string(degree));
  }
  auto [a1, a2] = teichmuller_decompose(a);
  GrElement t1 = a1, t2 = a2;
  GrElement sum = a.ring().zero();
  for (int j = 0; j < r / s; ++j) {
    sum += t1;
    sum.add_scaled(t2, 2);
    for (int i = 0; i < s; ++i) {
      t1 *= t1;
      t2 *= t2;
    }
  }
  // After r/s rounds both parts have been raised to 2^r.
  if (!(t1 == a1) || !(t2 == a2)) {
    throw Error(ErrorCode::NotInSubring,
                "argument does not lie in GR(4, 4^" + std::to_string(r) + ")");
  }
  return sum;
}

bool has_exact_order(const GrElement& a, std::uint64_t n) {
  if (n == 0) return false;
  GrElement one = a.ring().one();
  if (!(pow(a, n) == one)) return false;
  for (std::uint64_t m : prime_factors(n)) {
    if (pow(a, n / m) == one) return false;
  }
  return true;
}

GrElement find_group_generator(const GaloisRing& ring) {
  const int r = ring.degree();
  if (r > 63) {
    throw Error(ErrorCode::Unsupported, "group generator search needs degree <= 63");
  }
  const std::uint64_t order = (std::uint64_t{1} << r) - 1;
  if (order == 1) return ring.one();
  for (std::uint64_t k = 2; k <= order; ++k) {
    GrElement xi = teichmuller_lift(ring.element(residue_bits(k, r)));
    if (has_exact_order(xi, order)) return xi;
  }
  throw Error(ErrorCode::Internal, "no generator found; modulus is not basic irreducible");
}

GrElement primitive_nth_root(const GaloisRing& ring, std::uint64_t n) {
  const int r = ring.degree();
  if (n == 0 || n % 2 == 0 || pow_mod(2, static_cast<std::uint64_t>(r), n) != 1 % n) {
    throw Error(ErrorCode::OrderUnavailable, "no element of order " + std::to_string(n) +
                                                 " in GR(4, 4^" + std::to_string(r) + ")");
  }
  if (n == 1) return ring.one();
  const BigInt cofactor = ((BigInt(1) << r) - 1) / n;
  // Walk the Teichmuller lifts of residue-field elements in a fixed order and
  // keep the first whose cofactor power has exact order n.
  const std::uint64_t limit = r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  for (std::uint64_t k = 2; k <= limit; ++k) {
    GrElement t = teichmuller_lift(ring.element(residue_bits(k, r)));
    GrElement beta = pow(t, cofactor);
    if (has_exact_order(beta, n)) return beta;
  }
  throw Error(ErrorCode::Internal, "no primitive root found; modulus is not basic irreducible");
}

std::vector<int> to_list(std::span<const std::uint8_t> poly) {
  return std::vector<int>(poly.begin(), poly.end());
}

std::vector<int> to_list(const GrElement& a) { return to_list(a.coeffs()); }

}  // namespace quatseq
