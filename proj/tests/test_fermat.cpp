#include <doctest.h>

#include <cmath>
#include <numeric>

#include "redscope/errors.hpp"
#include "redscope/fermat.hpp"
#include "redscope/primes.hpp"

using namespace redscope;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::Config;
}

// Any prime in the residue class r mod m (Dirichlet guarantees one exists).
u64 prime_in_class(u64 r, u64 m) {
  for (u64 p = r == 0 ? m : r;; p += m)
    if (is_prime(p)) return p;
}

}  // namespace

TEST_CASE("septic Fermat surface rows") {
  auto v29 = classify_fermat({2, 7}, 29);
  CHECK(v29.reduction == ReductionType::Ordinary);
  CHECK(v29.ordinary == std::optional<bool>(true));
  auto v11 = classify_fermat({2, 7}, 11);
  CHECK(v11.reduction == ReductionType::HodgeWitt);
  CHECK(v11.ordinary == std::optional<bool>(false));
  CHECK(classify_fermat({2, 7}, 3).reduction == ReductionType::NonHodgeWitt);
  CHECK(classify_fermat({2, 7}, 2).reduction == ReductionType::HodgeWitt);
  CHECK(classify_fermat({2, 7}, 13).reduction == ReductionType::NonHodgeWitt);
  CHECK(fermat_densities({2, 7}) == FermatDensities{Rational(1, 6), Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("exceptional rows") {
  auto v = classify_fermat({3, 3}, 5);
  CHECK(v.reduction == ReductionType::HodgeWitt);
  CHECK(v.ordinary == std::optional<bool>(false));
  CHECK(classify_fermat({3, 3}, 7).reduction == ReductionType::Ordinary);
  CHECK(classify_fermat({3, 4}, 7).reduction == ReductionType::HodgeWitt);
  CHECK(classify_fermat({3, 4}, 13).reduction == ReductionType::Ordinary);
  CHECK(classify_fermat({7, 1}, 5).reduction == ReductionType::Ordinary);
  CHECK(classify_fermat({4, 2}, 3).reduction == ReductionType::Ordinary);
  auto curve = classify_fermat({1, 5}, 3);
  CHECK(curve.reduction == ReductionType::HodgeWitt);
  CHECK_FALSE(curve.ordinary.has_value());
  CHECK(fermat_densities({1, 9}) == FermatDensities{std::nullopt, Rational(1), Rational(0)});
  CHECK(fermat_densities({1, 2}) == FermatDensities{Rational(1), Rational(1), Rational(0)});
  CHECK(fermat_densities({3, 4}) == FermatDensities{Rational(1, 2), Rational(1), Rational(0)});
}

TEST_CASE("generic rule") {
  CHECK(fermat_densities({4, 5}) == FermatDensities{Rational(1, 4), Rational(1, 4), Rational(3, 4)});
  CHECK(fermat_densities({2, 12}) == FermatDensities{Rational(1, 4), Rational(1, 4), Rational(3, 4)});
  CHECK(classify_fermat({4, 5}, 11).reduction == ReductionType::Ordinary);
  CHECK(classify_fermat({4, 5}, 7).reduction == ReductionType::NonHodgeWitt);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
}

TEST_CASE("errors") {
  CHECK(kind_of([] { classify_fermat({2, 7}, 7); }) == ErrorKind::ExcludedPrime);
  CHECK(kind_of([] { classify_fermat({2, 6}, 3); }) == ErrorKind::ExcludedPrime);
  CHECK(kind_of([] { classify_fermat({2, 7}, 9); }) == ErrorKind::Domain);
  CHECK(kind_of([] { classify_fermat({0, 7}, 5); }) == ErrorKind::Domain);
}

TEST_CASE("densities equal verdict frequencies over residue classes") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 13; ++m) {
      const FermatSpec spec{n, m};
      i64 classes = 0, ord = 0, hw = 0, unknown = 0;
      for (u64 r = 0; r < static_cast<u64>(m); ++r) {
        if (std::gcd(r, static_cast<u64>(m)) != 1) continue;
        const u64 p = prime_in_class(r, static_cast<u64>(m));
        if (static_cast<u64>(m) % p == 0) continue;
        auto v = classify_fermat(spec, p);
        CHECK(v.reduction != ReductionType::Undetermined);
        ++classes;
        if (!v.ordinary) ++unknown;
        if (v.ordinary.value_or(false)) ++ord;
        if (is_hodge_witt(v.reduction)) ++hw;
      }
      const auto d = fermat_densities(spec);
      CHECK(d.hw + d.nonhw == Rational(1));
      CHECK(d.hw == Rational(hw, classes));
      if (d.ord) {
        CHECK(*d.ord == Rational(ord, classes));
        CHECK(*d.ord <= d.hw);
      } else {
        CHECK(unknown == classes);
      }
    }
  }
}

TEST_CASE("empirical frequencies for primes below 1e5") {
  for (const FermatSpec spec : {FermatSpec{2, 7}, FermatSpec{4, 5}, FermatSpec{3, 3}, FermatSpec{2, 9}}) {
    i64 n = 0, ord = 0, hw = 0;
    for (u64 p : primes_up_to(100'000)) {
      if (static_cast<u64>(spec.m) % p == 0) continue;
      auto v = classify_fermat(spec, p);
      ++n;
      ord += v.ordinary.value_or(false) ? 1 : 0;
      hw += is_hodge_witt(v.reduction) ? 1 : 0;
    }
    const auto d = fermat_densities(spec);
    const double tol = 3.0 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(static_cast<double>(ord) / n - boost::rational_cast<double>(*d.ord)) < tol);
    CHECK(std::abs(static_cast<double>(hw) / n - boost::rational_cast<double>(d.hw)) < tol);
  }
}

TEST_CASE("table is versioned data with a generic fallback") {
  const auto& t = fermat_table();
  CHECK(t.version >= 1);
  REQUIRE_FALSE(t.rows.empty());
  CHECK(t.rows.back().n == 0);
  CHECK(t.rows.back().m == 0);
}
