#include <doctest.h>

#include <algorithm>

#include "redscope/cm_classify.hpp"
#include "redscope/errors.hpp"

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

Polygon slopes(std::vector<Rational> s) { return Polygon::from_slopes(std::move(s)); }

const Rational h(1, 2);

// Every multiset of slopes in [0,1] with denominators <= 3 that is
// symmetric under s -> 1-s and has integral break points, for width 2g.
std::vector<Polygon> symmetric_configurations(int g) {
  const std::vector<Rational> candidates = {0, Rational(1, 3), h, Rational(2, 3), 1};
  std::vector<Polygon> out;
  const int width = 2 * g;
  std::vector<int> counts(candidates.size(), 0);
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == candidates.size()) {
      if (remaining != 0) return;
      std::vector<Rational> s;
      for (std::size_t k = 0; k < candidates.size(); ++k) s.insert(s.end(), static_cast<std::size_t>(counts[k]), candidates[k]);
      try {
        Polygon poly = slopes(s);
        classify_abelian_from_slopes(poly, g);
        out.push_back(poly);
      } catch (const Error&) {
      }
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[i] = c;
      self(self, i + 1, remaining - c);
    }
    counts[i] = 0;
  };
  recurse(recurse, 0, width);
  return out;
}

}  // namespace

TEST_CASE("verdicts from split classes") {
  CHECK(classify_by_splitting(SplitClass::CompletelySplit) == ReductionType::Ordinary);
  CHECK(classify_by_splitting(SplitClass::AlmostNotCompletely) == ReductionType::AlmostOrdinary);
  CHECK(classify_by_splitting(SplitClass::Other) == ReductionType::Undetermined);
  CHECK(kind_of([] { classify_by_splitting(SplitClass::RamifiedOrBad); }) == ErrorKind::ExcludedPrime);
}

TEST_CASE("verdicts with inert counts") {
  CHECK(classify_with_inert_count(SplitClass::CompletelySplit, 0) == ReductionType::Ordinary);
  CHECK(classify_with_inert_count(SplitClass::AlmostNotCompletely, 1) == ReductionType::AlmostOrdinary);
  CHECK(classify_with_inert_count(SplitClass::Other, 2) == ReductionType::NonHodgeWitt);
  CHECK(classify_with_inert_count(SplitClass::Other, 3) == ReductionType::NonHodgeWitt);
  CHECK(kind_of([] { classify_with_inert_count(SplitClass::CompletelySplit, 1); }) == ErrorKind::Consistency);
  CHECK(kind_of([] { classify_with_inert_count(SplitClass::AlmostNotCompletely, 0); }) == ErrorKind::Consistency);
  // below two inert primes the inert count adds nothing
  const std::vector<std::pair<SplitClass, int>> consistent = {
      {SplitClass::CompletelySplit, 0}, {SplitClass::AlmostNotCompletely, 1}, {SplitClass::Other, 0}, {SplitClass::Other, 1}};
  for (auto [sc, inert] : consistent) {
    CHECK(classify_by_splitting(sc) != ReductionType::NonHodgeWitt);
    CHECK(classify_with_inert_count(sc, inert) == classify_by_splitting(sc));
  }
}

TEST_CASE("equal-degree rule for Galois fields") {
  SplittingPattern four{7, {4}, false};
  SplittingPattern two_two{19, {2, 2}, false};
  SplittingPattern split{11, {1, 1, 1, 1}, false};
  CHECK(refine_equal_degree_non_hodge_witt(ReductionType::Undetermined, four) == ReductionType::NonHodgeWitt);
  CHECK(refine_equal_degree_non_hodge_witt(ReductionType::Undetermined, two_two) == ReductionType::NonHodgeWitt);
  CHECK(refine_equal_degree_non_hodge_witt(ReductionType::Ordinary, split) == ReductionType::Ordinary);
  SplittingPattern mixed{13, {1, 1, 2}, false};
  CHECK(refine_equal_degree_non_hodge_witt(ReductionType::Undetermined, mixed) == ReductionType::Undetermined);
}

TEST_CASE("abelian verdicts from slopes") {
  CHECK(classify_abelian_from_slopes(slopes({0, 0, 1, 1}), 2) == ReductionType::Ordinary);
  CHECK(classify_abelian_from_slopes(slopes({0, h, h, 1}), 2) == ReductionType::AlmostOrdinary);
  CHECK(classify_abelian_from_slopes(slopes({h, h, h, h}), 2) == ReductionType::NonHodgeWitt);
  CHECK(classify_abelian_from_slopes(slopes({h, h}), 1) == ReductionType::AlmostOrdinary);
  CHECK(kind_of([] { classify_abelian_from_slopes(slopes({0, 0, 0, 1}), 2); }) == ErrorKind::InvalidPolygon);
  CHECK(kind_of([] { classify_abelian_from_slopes(slopes({0, 1}), 2); }) == ErrorKind::InvalidPolygon);
  CHECK(kind_of([] { classify_abelian_from_slopes(slopes({-1, 2}), 1); }) == ErrorKind::InvalidPolygon);
  CHECK(kind_of([] { classify_abelian_from_slopes(slopes({0, Rational(1, 3), Rational(2, 3), 1}), 2); }) ==
        ErrorKind::InvalidPolygon);
}

TEST_CASE("p-rank restatement over all symmetric configurations, g <= 3") {
  int configurations = 0;
  for (int g = 1; g <= 3; ++g) {
    for (const auto& poly : symmetric_configurations(g)) {
      ++configurations;
      auto verdict = classify_abelian_from_slopes(poly, g);
      const bool hodge_witt = verdict == ReductionType::Ordinary || verdict == ReductionType::AlmostOrdinary;
      CHECK(hodge_witt == (poly.multiplicity_of(0) >= g - 1));
    }
  }
  // g=1: {0,1},{1/2,1/2}; g=2: 3 configurations; g=3: 5 (incl. 1/3,2/3 triples)
  CHECK(configurations == 2 + 3 + 5);
}

TEST_CASE("product status") {
  const FactorStatus ord{true, true}, hw{false, true}, bad{false, false};
  auto status = [](std::vector<FactorStatus> v) { return product_status(v); };
  CHECK(status({ord, ord}) == FactorStatus{true, true});
  CHECK(status({ord, hw}) == FactorStatus{false, true});
  CHECK(status({hw, hw}) == FactorStatus{false, false});
  CHECK(status({ord, bad}) == FactorStatus{false, false});
  CHECK(status({ord, ord, hw}) == FactorStatus{false, true});
  CHECK(kind_of([&] { status({{true, false}}); }) == ErrorKind::Consistency);
  CHECK(kind_of([&] { status({}); }) == ErrorKind::Domain);

  // X x X is Hodge-Witt exactly when X is ordinary
  for (const auto& s : {ord, hw, bad}) CHECK(status({s, s}).is_hodge_witt == s.is_ordinary);

  // permutation invariance
  std::vector<FactorStatus> v = {ord, hw, ord, bad};
  std::sort(v.begin(), v.end(), [](auto a, auto b) { return std::pair(a.is_ordinary, a.is_hodge_witt) < std::pair(b.is_ordinary, b.is_hodge_witt); });
  const auto first = product_status(v);
  do {
    CHECK(product_status(v) == first);
  } while (std::next_permutation(v.begin(), v.end(), [](auto a, auto b) {
    return std::pair(a.is_ordinary, a.is_hodge_witt) < std::pair(b.is_ordinary, b.is_hodge_witt);
  }));
}
