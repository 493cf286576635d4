#include <doctest.h>

#include <random>
#include <set>

#include "quatseq/error.hpp"
#include "quatseq/galois.hpp"
#include "quatseq/lc_oracle.hpp"
#include "quatseq/spectra.hpp"

using namespace quatseq;

namespace {

Z4Matrix random_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  Z4Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng() % 4;
  // bias toward even entries so 2-torsion shows up
  if (rng() % 2)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) &= 2;
  return a;
}

std::vector<std::uint8_t> mat_vec(const Z4Matrix& a, const std::vector<std::uint8_t>& x) {
  std::vector<std::uint8_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = (y[i] + a(i, j) * x[j]) & 3;
  return y;
}

std::set<std::vector<std::uint8_t>> row_span(const Z4Matrix& a) {
  std::set<std::vector<std::uint8_t>> span;
  std::size_t total = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint8_t> v(a.cols(), 0);
    std::size_t c = code;
    for (std::size_t i = 0; i < a.rows(); ++i, c /= 4)
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] = (v[j] + (c % 4) * a(i, j)) & 3;
    span.insert(v);
  }
  return span;
}

// Smallest L admitting a connection polynomial of degree at most L.
std::size_t brute_force_lc(const QuatSequence& s) {
  const std::size_t T = s.period();
  for (std::size_t L = 0; L <= T; ++L) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < L; ++k) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::uint8_t> c{1};
      for (std::size_t k = 0, v = code; k < L; ++k, v /= 4) c.push_back(v % 4);
      if (check_connection(s, ConnectionPoly(c))) return L;
    }
  }
  return T + 1;
}

}  // namespace

TEST_CASE("solve_mod4 agrees with exhaustive search") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    auto a = random_matrix(m, n, rng);
    std::vector<std::uint8_t> b(m);
    for (auto& v : b) v = rng() % 4;
    bool exists = false;
    std::size_t total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= 4;
    for (std::size_t code = 0; code < total && !exists; ++code) {
      std::vector<std::uint8_t> x(n);
      for (std::size_t j = 0, c = code; j < n; ++j, c /= 4) x[j] = c % 4;
      exists = mat_vec(a, x) == b;
    }
    auto got = solve_mod4(a, b);
    REQUIRE(got.has_value() == exists);
    if (got) CHECK(mat_vec(a, *got) == b);
  }
  CHECK_THROWS_AS(solve_mod4(Z4Matrix(2, 2), std::vector<std::uint8_t>{1}), Error);
}

TEST_CASE("howell form preserves the row span") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(1 + rng() % 4, 1 + rng() % 4, rng);
    auto h = howell_form(a);
    CHECK(h.cols() == a.cols());
    CHECK(row_span(h) == row_span(a));
  }
}

TEST_CASE("connection polynomial basics") {
  CHECK_THROWS_AS(ConnectionPoly({2, 1}), Error);
  CHECK(ConnectionPoly({1, 3, 0, 0}).degree() == 1);
  QuatSequence zeros({0, 0, 0});
  auto mc = minimal_connection(zeros);
  CHECK(mc.length == 0);
  QuatSequence constant({2, 2, 2, 2, 2});
  CHECK(minimal_connection(constant).length == 1);
  QuatSequence impulse({1, 0, 0, 0, 0, 0, 0});
  CHECK(minimal_connection(impulse).length == 7);
}

TEST_CASE("recurrence oracle matches exhaustive search on period 7") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    std::vector<std::uint8_t> v(7);
    for (auto& x : v) x = rng() % 4;
    QuatSequence s(v);
    auto mc = minimal_connection(s);
    CHECK(check_connection(s, mc.poly));
    CHECK(mc.poly.degree() <= mc.length);
    CHECK(mc.length == brute_force_lc(s));
  }
}

TEST_CASE("recurrence oracle matches spectral count") {
  std::mt19937_64 rng(31);
  for (auto [r, n] : {std::pair<int, std::uint64_t>{3, 7}, {4, 15}, {4, 5}}) {
    auto beta = primitive_nth_root(*standard_ring(r), n);
    for (int t = 0; t < 60; ++t) {
      std::vector<std::uint8_t> v(n);
      for (auto& x : v) x = rng() % 4;
      QuatSequence s(v);
      CHECK(minimal_connection(s).length == linear_complexity_from_spectrum(dft(s, beta)));
    }
  }
}
