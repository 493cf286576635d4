#include "quatseq/lemmas.hpp"

#include <algorithm>
#include <numeric>

#include "quatseq/numth.hpp"
#include "quatseq/spectra.hpp"

namespace quatseq {

namespace {

std::string prefix(const CyclotomicSystem& sys) {
  return "(" + std::to_string(sys.p()) + "," + std::to_string(sys.q()) + ") ";
}

CheckResult make(const CyclotomicSystem& sys, const std::string& name, bool ok,
                 std::string detail = {}) {
  return {prefix(sys) + name, ok, std::move(detail)};
}

std::string element_text(const GrElement& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.coeffs()[i]);
  }
  return out + "]";
}

}  // namespace

std::vector<CheckResult> check_class_identities(const CyclotomicSystem& sys) {
  std::vector<CheckResult> out;
  const std::uint64_t p = sys.p(), q = sys.q(), n = sys.modulus();

  {
    std::vector<int> hits(n, 0);
    for (int i = 0; i < 4; ++i) {
      for (auto u : sys.cls(i)) ++hits[u];
    }
    for (auto u : sys.set_p()) ++hits[u];
    for (auto u : sys.set_q()) ++hits[u];
    ++hits[0];
    bool ok = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    for (int i = 0; i < 4; ++i) ok = ok && sys.cls(i).size() == sys.e();
    out.push_back(make(sys, "classes partition Z_pq", ok));
  }
  out.push_back(make(sys, "h^4 in D0", sys.class_shift(pow_mod(sys.h(), 4, n)) == 0));
  out.push_back(make(sys, "ell = lcm(ell_p, ell_q)",
                     sys.ell() == std::lcm(sys.ell_p(), sys.ell_q())));
  out.push_back(make(sys, "ord_pq(g) = e", mul_order(sys.g(), n) == sys.e()));

  // |{w in D0 : h^a + w = 0 mod p}| = (q-1)/4, mod q: (p-1)/4, and a
  // simultaneous solution exists (uniquely) iff 4 | ((p-1)/2 + a - (q-1)/2).
  for (int a = 0; a < 4; ++a) {
    const std::uint64_t ha = pow_mod(sys.h(), static_cast<std::uint64_t>(a), n);
    std::uint64_t mod_p = 0, mod_q = 0, both = 0;
    for (auto w : sys.cls(0)) {
      bool zp = (ha + w) % p == 0, zq = (ha + w) % q == 0;
      mod_p += zp;
      mod_q += zq;
      both += zp && zq;
    }
    const long long shift = static_cast<long long>((p - 1) / 2) + a -
                            static_cast<long long>((q - 1) / 2);
    const bool expect_both = shift % 4 == 0;
    bool ok = mod_p == (q - 1) / 4 && mod_q == (p - 1) / 4 && both == (expect_both ? 1u : 0u);
    out.push_back(make(sys, "w-count a=" + std::to_string(a), ok,
                       "mod p " + std::to_string(mod_p) + ", mod q " + std::to_string(mod_q) +
                           ", both " + std::to_string(both)));
  }

  const int two = sys.two_class();
  const bool even = two % 2 == 0;
  out.push_back(make(sys, "class of 2 matches case",
                     even == (sys.case_tag() == CaseTag::Case55), "2 in D" + std::to_string(two)));
  bool ell_ok = true;
  if (two == 2) ell_ok = sys.ell() % 2 == 0;
  if (two % 2 == 1) ell_ok = sys.ell() % 4 == 0;
  out.push_back(make(sys, "ell divisibility from class of 2", ell_ok,
                     "ell = " + std::to_string(sys.ell())));
  return out;
}

std::vector<CheckResult> check_root_identities(const CyclotomicSystem& sys, const GrElement& beta) {
  std::vector<CheckResult> out;
  const std::uint64_t p = sys.p(), q = sys.q(), n = sys.modulus();
  const GaloisRing& ring = beta.ring();
  const auto powers = power_table(beta, n);

  auto scalar_eq = [&](const GrElement& a, std::uint64_t c) {
    return a == ring.scalar(static_cast<std::uint8_t>(c % 4));
  };

  {
    GrElement sp = ring.zero(), sq = ring.zero(), su = ring.zero();
    for (std::uint64_t j = 1; j < q; ++j) sp += powers[j * p];
    for (std::uint64_t j = 1; j < p; ++j) sq += powers[j * q];
    for (int i = 0; i < 4; ++i) {
      for (auto z : sys.cls(i)) su += powers[z];
    }
    out.push_back(make(sys, "sum beta^{jp} = 3", scalar_eq(sp, 3), element_text(sp)));
    out.push_back(make(sys, "sum beta^{jq} = 3", scalar_eq(sq, 3), element_text(sq)));
    out.push_back(make(sys, "sum over units beta^z = 1", scalar_eq(su, 1), element_text(su)));
  }

  std::vector<GrElement> d;
  for (int i = 0; i < 4; ++i) d.push_back(class_poly_eval(sys, i, beta));

  {
    bool at_one = true, at_kq = true, at_kp = true;
    for (int i = 0; i < 4; ++i) {
      at_one = at_one && class_poly_eval(sys, i, ring.one()).is_zero();
      for (std::uint64_t k = 1; k < p; ++k) {
        at_kq = at_kq && scalar_eq(class_poly_eval(sys, i, powers[k * q]), 3 * (q - 1) / 4);
      }
      for (std::uint64_t k = 1; k < q; ++k) {
        at_kp = at_kp && scalar_eq(class_poly_eval(sys, i, powers[k * p]), 3 * (p - 1) / 4);
      }
    }
    out.push_back(make(sys, "D_i(1) = 0", at_one));
    out.push_back(make(sys, "D_i(beta^{kq}) = 3(q-1)/4", at_kq));
    out.push_back(make(sys, "D_i(beta^{kp}) = 3(p-1)/4", at_kp));
  }

  {
    const std::uint64_t shift = (q - 1) / 4 + (p - 1) / 4;
    bool ok = true;
    std::string bad;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        GrElement v = tuple_inner_product(sys, beta, i, j);
        v.add_scalar(static_cast<std::uint8_t>(shift % 4));
        bool hit = sys.case_tag() == CaseTag::Case55 ? i == j
                                                     : CyclotomicSystem::index_mod4(i - j) == 2;
        if (!scalar_eq(v, hit ? 1 : 0)) {
          ok = false;
          bad += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    out.push_back(make(sys, "inner-product table", ok, bad));
  }

  {
    const GrElement rho = rho_parameter(sys, beta);
    GrElement r1 = 3 * d[0] + d[2] + 2 * d[3];
    GrElement r2 = 2 * d[0] + 3 * d[1] + d[3];
    GrElement r3 = d[0] + 2 * d[1] + 3 * d[2];
    GrElement e1 = rho, e2 = rho, e3 = rho;
    e1.add_scalar(3);
    e2.add_scalar(2);
    e3.add_scalar(1);
    out.push_back(make(sys, "rho rearrangements", r1 == e1 && r2 == e2 && r3 == e3));
  }
  return out;
}

}  // namespace quatseq
