#include "quatseq/cyclotomy.hpp"

#include <algorithm>
#include <numeric>

#include "quatseq/error.hpp"

namespace quatseq {

namespace {

constexpr std::uint8_t kLabelP = 4;
constexpr std::uint8_t kLabelQ = 5;
constexpr std::uint8_t kLabelR = 6;
constexpr std::uint8_t kUnset = 0xff;

}  // namespace

std::string to_string(const ClassLabel& label) {
  switch (label.kind) {
    case ClassLabel::Kind::D: return "D" + std::to_string(label.index);
    case ClassLabel::Kind::P: return "P";
    case ClassLabel::Kind::Q: return "Q";
    case ClassLabel::Kind::R: return "R";
  }
  return "?";
}

QuatSequence::QuatSequence(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "sequence period must be at least 1");
  }
  for (auto v : values_) {
    if (v > 3) throw Error(ErrorCode::InvalidArgument, "sequence value outside Z4");
  }
}

CyclotomicSystem CyclotomicSystem::build(std::uint64_t p, std::uint64_t q,
                                         std::optional<std::uint64_t> g) {
  CyclotomicSystem sys;
  sys.case_ = validate_params(p, q);
  sys.p_ = p;
  sys.q_ = q;
  const std::uint64_t n = p * q;

  if (g) {
    if (std::gcd(*g, n) != 1 || !is_primitive_root(*g % p, p) ||
        !is_primitive_root(*g % q, q)) {
      throw Error(ErrorCode::InvalidParameters,
                  std::to_string(*g) + " is not a common primitive root of " +
                      std::to_string(p) + " and " + std::to_string(q));
    }
    sys.g_ = *g % n;
  } else {
    sys.g_ = common_primitive_root(p, q);
  }
  sys.h_ = crt_pair(sys.g_ % p, 1, p, q);
  sys.e_ = (p - 1) * (q - 1) / 4;
  sys.ell_ = mul_order(2, n);
  sys.ell_p_ = mul_order(2, p);
  sys.ell_q_ = mul_order(2, q);

  sys.labels_.assign(n, kUnset);
  std::uint64_t h_pow = 1;
  for (int i = 0; i < 4; ++i) {
    auto& cls = sys.classes_[i];
    cls.reserve(sys.e_);
    std::uint64_t x = h_pow;
    for (std::uint64_t s = 0; s < sys.e_; ++s) {
      if (sys.labels_[x] != kUnset) {
        throw Error(ErrorCode::Internal, "generalized cyclotomic classes overlap");
      }
      sys.labels_[x] = static_cast<std::uint8_t>(i);
      cls.push_back(x);
      x = mul_mod(x, sys.g_, n);
    }
    std::sort(cls.begin(), cls.end());
    h_pow = mul_mod(h_pow, sys.h_, n);
  }

  for (std::uint64_t k = 1; k < q; ++k) {
    sys.set_p_.push_back(k * p);
    sys.labels_[k * p] = kLabelP;
  }
  for (std::uint64_t k = 1; k < p; ++k) {
    sys.set_q_.push_back(k * q);
    sys.labels_[k * q] = kLabelQ;
  }
  sys.labels_[0] = kLabelR;

  if (std::find(sys.labels_.begin(), sys.labels_.end(), kUnset) != sys.labels_.end()) {
    throw Error(ErrorCode::Internal, "classes do not cover the units of Z_pq");
  }
  return sys;
}

ClassLabel CyclotomicSystem::class_of(std::uint64_t u) const {
  std::uint8_t label = labels_[u % modulus()];
  switch (label) {
    case kLabelP: return ClassLabel::p();
    case kLabelQ: return ClassLabel::q();
    case kLabelR: return ClassLabel::r();
    default: return ClassLabel::d(label);
  }
}

int CyclotomicSystem::class_shift(std::uint64_t u) const {
  std::uint8_t label = labels_[u % modulus()];
  if (label > 3) {
    throw Error(ErrorCode::NotAUnit,
                std::to_string(u) + " is not a unit modulo " + std::to_string(modulus()));
  }
  return label;
}

QuatSequence build_sequence(const CyclotomicSystem& sys) {
  std::vector<std::uint8_t> values(sys.modulus());
  for (std::uint64_t u = 0; u < values.size(); ++u) {
    ClassLabel label = sys.class_of(u);
    switch (label.kind) {
      case ClassLabel::Kind::D: values[u] = static_cast<std::uint8_t>(label.index); break;
      case ClassLabel::Kind::P: values[u] = 0; break;
      case ClassLabel::Kind::Q:
      case ClassLabel::Kind::R: values[u] = 2; break;
    }
  }
  return QuatSequence(std::move(values));
}

}  // namespace quatseq
