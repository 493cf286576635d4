#include <doctest.h>

#include <algorithm>
#include <set>

#include "quatseq/cyclotomy.hpp"
#include "quatseq/error.hpp"

using namespace quatseq;

namespace {
const std::pair<std::uint64_t, std::uint64_t> kPairs[] = {{5, 13}, {17, 5}, {5, 17}, {13, 5}, {5, 29}, {37, 5}};
}

TEST_CASE("classes partition the residues") {
  for (auto [p, q] : kPairs) {
    auto sys = build_system(p, q);
    const auto n = sys.modulus();
    std::vector<int> seen(n, 0);
    for (int i = 0; i < 4; ++i) {
      CHECK(sys.cls(i).size() == sys.e());
      for (auto u : sys.cls(i)) ++seen[u];
    }
    for (auto u : sys.set_p()) ++seen[u];
    for (auto u : sys.set_q()) ++seen[u];
    ++seen[0];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("multiplication by g and h moves between classes") {
  for (auto [p, q] : kPairs) {
    auto sys = build_system(p, q);
    const auto n = sys.modulus();
    for (int i = 0; i < 4; ++i) {
      for (auto u : sys.cls(i)) {
        CHECK(sys.class_of(u * sys.g() % n) == ClassLabel::d(i));
        CHECK(sys.class_of(u * sys.h() % n) == ClassLabel::d((i + 1) % 4));
        CHECK(sys.class_shift(u) == i);
      }
    }
    // class of a product of units adds indices
    for (auto a : sys.cls(1)) {
      for (auto b : sys.cls(2)) CHECK(sys.class_shift(a * b % n) == 3);
      break;
    }
  }
}

TEST_CASE("sequence values") {
  auto sys = build_system(5, 13);
  auto s = build_sequence(sys);
  REQUIRE(s.period() == 65);
  CHECK(s[0] == 2);
  CHECK(s[13] == 2);
  CHECK(s[5] == 0);
  for (int i = 0; i < 4; ++i)
    for (auto u : sys.cls(i)) CHECK(s[u] == i);
  CHECK(s[65 + 13] == s[13]);
  CHECK(sys.class_of(0) == ClassLabel::r());
  CHECK(sys.class_of(10) == ClassLabel::p());
  CHECK(sys.class_of(26) == ClassLabel::q());
  CHECK_THROWS_AS(sys.class_shift(5), Error);
}

TEST_CASE("explicit generator") {
  auto a = build_system(5, 13, 7);
  CHECK(a.g() == 7);
  CHECK(a.two_class() == 2);
  CHECK(build_system(5, 13).two_class() == 0);
  CHECK_THROWS_AS(build_system(5, 13, 3), Error);
  CHECK_THROWS_AS(build_system(3, 7), Error);
}

TEST_CASE("two_class agrees with the case") {
  for (auto [p, q] : kPairs) {
    auto sys = build_system(p, q);
    int c = sys.two_class();
    switch (sys.case_tag()) {
      case CaseTag::Case55: CHECK((c == 0 || c == 2)); break;
      case CaseTag::Case15:
      case CaseTag::Case51: CHECK((c == 1 || c == 3)); break;
    }
  }
}

TEST_CASE("QuatSequence validation") {
  CHECK_THROWS_AS(QuatSequence({}), Error);
  CHECK_THROWS_AS(QuatSequence({0, 4}), Error);
  QuatSequence s({1, 2, 3});
  CHECK(s[4] == 2);
}
