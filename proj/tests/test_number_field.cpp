#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "redscope/errors.hpp"
#include "redscope/ff_poly.hpp"
#include "redscope/number_field.hpp"
#include "redscope/primes.hpp"

using namespace redscope;

namespace {

const NumberField gaussian({1, 0, 1}, "Q(i)");
const NumberField zeta5({1, 1, 1, 1, 1}, "Q(zeta5)");
const NumberField d4_field({89, 0, 134, 0, 1}, "D4 quartic");
const NumberField d4_real({89, 134, 1}, "Q(sqrt 11)");  // minimal polynomial of x^2

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::Config;
}

}  // namespace

TEST_CASE("discriminants") {
  CHECK(gaussian.disc_poly() == -4);
  CHECK(zeta5.disc_poly() == 125);
  CHECK(NumberField({-2, 0, 0, 1}).disc_poly() == -108);
  // x^4 + a x^2 + b has discriminant 16 b (a^2 - 4b)^2
  CHECK(d4_field.disc_poly() == BigInt(16) * 89 * BigInt(134 * 134 - 4 * 89) * BigInt(134 * 134 - 4 * 89));
  CHECK(NumberField({5, 1}).disc_poly() == 1);
}

TEST_CASE("field construction errors") {
  CHECK(kind_of([] { NumberField({1, 0, 2}); }) == ErrorKind::Config);       // not monic
  CHECK(kind_of([] { NumberField({-1, 0, 1}); }) == ErrorKind::Config);      // rational root 1
  CHECK(kind_of([] { NumberField({1, 2, 1}); }) == ErrorKind::Config);       // zero discriminant
  CHECK(kind_of([] { NumberField({7}); }) == ErrorKind::Config);             // constant
}

TEST_CASE("splitting patterns") {
  CHECK(splitting_pattern(gaussian, 5).degrees == std::vector<int>{1, 1});
  CHECK(splitting_pattern(gaussian, 3).degrees == std::vector<int>{2});
  CHECK(splitting_pattern(zeta5, 7).degrees == std::vector<int>{4});
  CHECK(splitting_pattern(zeta5, 11).degrees == std::vector<int>{1, 1, 1, 1});
  CHECK(splitting_pattern(zeta5, 19).degrees == std::vector<int>{2, 2});
  auto ram = splitting_pattern(zeta5, 5);
  CHECK(ram.ramified);
  CHECK(ram.degrees.empty());
  CHECK(kind_of([] { splitting_pattern(gaussian, 15); }) == ErrorKind::Domain);
}

TEST_CASE("split classes") {
  auto pat = [](std::vector<int> d) { return SplittingPattern{7, std::move(d), false}; };
  CHECK(classify_split(pat({1, 1, 1, 1}), 4) == SplitClass::CompletelySplit);
  CHECK(classify_split(pat({1, 1, 2}), 4) == SplitClass::AlmostNotCompletely);
  CHECK(classify_split(pat({2, 2}), 4) == SplitClass::Other);
  CHECK(classify_split(pat({2}), 2) == SplitClass::Other);
  CHECK(classify_split(pat({1, 2}), 3) == SplitClass::AlmostNotCompletely);
  CHECK(classify_split(SplittingPattern{5, {}, true}, 4) == SplitClass::RamifiedOrBad);
  CHECK(kind_of([&] { classify_split(pat({1, 1}), 4); }) == ErrorKind::Consistency);
}

TEST_CASE("inert counts") {
  auto pat = [](std::vector<int> d) { return SplittingPattern{7, std::move(d), false}; };
  CHECK(inert_count_over_p(pat({1, 1, 1, 1}), pat({1, 1})) == 0);
  CHECK(inert_count_over_p(pat({1, 1, 2}), pat({1, 1})) == 1);
  CHECK(inert_count_over_p(pat({2, 2}), pat({1, 1})) == 2);
  CHECK(inert_count_over_p(pat({2, 2}), pat({2})) == 0);
  CHECK(kind_of([&] { inert_count_over_p(pat({1, 1, 2}), pat({2})); }) == ErrorKind::Consistency);
  CHECK(kind_of([&] { inert_count_over_p(pat({1, 1}), pat({1, 1})); }) == ErrorKind::Consistency);
}

TEST_CASE("two inert primes on the D4 field, checked by relative factorization") {
  // K = K0(sqrt(y)) where y is a root of y^2 + 134 y + 89. A prime of K0 is
  // inert in K exactly when the corresponding root y is a non-square mod p.
  bool found = false;
  for (u64 p : primes_up_to(2000)) {
    if (d4_field.is_excluded(p) || d4_real.is_excluded(p)) continue;
    auto pk = splitting_pattern(d4_field, p);
    auto pk0 = splitting_pattern(d4_real, p);
    if (pk.degrees != std::vector<int>{2, 2} || pk0.degrees != std::vector<int>{1, 1}) continue;
    std::vector<i64> roots;
    const i64 ip = static_cast<i64>(p);
    for (i64 y = 0; y < ip; ++y)
      if (oracle::eval({89, 134, 1}, y, ip) == 0) roots.push_back(y);
    REQUIRE(roots.size() == 2);
    int inert = 0;
    for (i64 y : roots) inert += oracle::is_square_mod(y, ip) ? 0 : 1;
    CHECK(inert == 2);
    CHECK(inert_count_over_p(pk, pk0) == 2);
    found = true;
  }
  CHECK(found);
}

TEST_CASE("degree conservation on random fields") {
  std::mt19937_64 rng(4242);
  const auto primes = primes_up_to(10'000);
  int fields = 0;
  while (fields < 40) {
    const int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<i64> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = static_cast<i64>(rng() % 41) - 20;
    c.back() = 1;
    std::optional<NumberField> k;
    try {
      k.emplace(c);
    } catch (const Error&) {
      continue;
    }
    ++fields;
    for (int i = 0; i < 25; ++i) {
      const u64 p = primes[rng() % primes.size()];
      auto pat = splitting_pattern(*k, p);
      if (pat.ramified) continue;
      CHECK(pat.degree_sum() == deg);
      CHECK(std::is_sorted(pat.degrees.begin(), pat.degrees.end()));
    }
  }
}

TEST_CASE("splitting facts for CM fields with their real subfields") {
  for (u64 p : primes_up_to(100'000)) {
    if (d4_field.is_excluded(p) || d4_real.is_excluded(p)) continue;
    auto pk = splitting_pattern(d4_field, p);
    auto pk0 = splitting_pattern(d4_real, p);
    auto sc = classify_split(pk, 4);
    if (sc == SplitClass::CompletelySplit) {
      CHECK(classify_split(pk0, 2) == SplitClass::CompletelySplit);
    }
    if (sc == SplitClass::AlmostNotCompletely) {
      CHECK(classify_split(pk0, 2) == SplitClass::CompletelySplit);
      CHECK(inert_count_over_p(pk, pk0) == 1);
    }
  }
  // Galois CM fields never split almost-but-not-completely
  const NumberField zeta8({1, 0, 0, 0, 1});
  for (u64 p : primes_up_to(100'000)) {
    for (const NumberField* k : {&zeta5, &zeta8}) {
      auto pat = splitting_pattern(*k, p);
      if (pat.ramified) continue;
      CHECK(classify_split(pat, 4) != SplitClass::AlmostNotCompletely);
    }
  }
}

TEST_CASE("quadratic reciprocity oracle") {
  std::mt19937_64 rng(2024);
  const auto primes = primes_up_to(5000);
  int pairs = 0;
  while (pairs < 100) {
    i64 d = static_cast<i64>(rng() % 400) - 200;
    if (d == 0 || d == 1) continue;
    bool squarefree = true;
    for (i64 q = 2; q * q <= (d < 0 ? -d : d); ++q)
      if (d % (q * q) == 0) squarefree = false;
    if (!squarefree) continue;
    const u64 p = primes[rng() % primes.size()];
    if (p == 2 || (2 * d) % static_cast<i64>(p) == 0) continue;
    NumberField k({-d, 0, 1});
    auto sc = classify_split(splitting_pattern(k, p), 2);
    CHECK((sc == SplitClass::CompletelySplit) == oracle::is_square_mod(d, static_cast<i64>(p)));
    ++pairs;
  }
}
