#include "redscope/cm_classify.hpp"

#include <algorithm>

#include "redscope/errors.hpp"

namespace redscope {

std::string_view to_string(ReductionType t) noexcept {
  switch (t) {
    case ReductionType::Ordinary: return "Ordinary";
    case ReductionType::AlmostOrdinary: return "AlmostOrdinary";
    case ReductionType::HodgeWitt: return "HodgeWitt";
    case ReductionType::NonHodgeWitt: return "NonHodgeWitt";
    case ReductionType::Undetermined: return "Undetermined";
  }
  return "?";
}

ReductionType parse_reduction_type(std::string_view name) {
  for (auto t : {ReductionType::Ordinary, ReductionType::AlmostOrdinary, ReductionType::HodgeWitt,
                 ReductionType::NonHodgeWitt, ReductionType::Undetermined}) {
    if (to_string(t) == name) return t;
  }
  fail(ErrorKind::Config, "unknown reduction type '" + std::string(name) + "'");
}

ReductionType classify_by_splitting(SplitClass sc) {
  switch (sc) {
    case SplitClass::CompletelySplit: return ReductionType::Ordinary;
    case SplitClass::AlmostNotCompletely: return ReductionType::AlmostOrdinary;
    case SplitClass::Other: return ReductionType::Undetermined;
    case SplitClass::RamifiedOrBad: break;
  }
  fail(ErrorKind::ExcludedPrime, "ramified or bad prime has no reduction verdict");
}

ReductionType classify_with_inert_count(SplitClass sc, int inert) {
  if (inert < 0) fail(ErrorKind::Consistency, "negative inert count");
  if (sc == SplitClass::CompletelySplit && inert != 0) {
    fail(ErrorKind::Consistency, "completely split prime with inert count " + std::to_string(inert));
  }
  if (sc == SplitClass::AlmostNotCompletely && inert != 1) {
    fail(ErrorKind::Consistency, "almost completely split prime with inert count " + std::to_string(inert));
  }
  if (sc == SplitClass::RamifiedOrBad) classify_by_splitting(sc);
  if (inert >= 2) return ReductionType::NonHodgeWitt;
  return classify_by_splitting(sc);
}

ReductionType refine_equal_degree_non_hodge_witt(ReductionType verdict, const SplittingPattern& pattern) {
  if (verdict != ReductionType::Undetermined || pattern.ramified || pattern.degrees.empty()) return verdict;
  const int first = pattern.degrees.front();
  const bool all_equal = std::all_of(pattern.degrees.begin(), pattern.degrees.end(),
                                     [first](int d) { return d == first; });
  return (all_equal && first > 1) ? ReductionType::NonHodgeWitt : verdict;
}

ReductionType classify_abelian_from_slopes(const Polygon& newton, int g) {
  if (g < 1) fail(ErrorKind::InvalidPolygon, "dimension must be positive");
  if (newton.width() != 2 * static_cast<i64>(g)) {
    fail(ErrorKind::InvalidPolygon, "abelian Newton polygon must have width 2g");
  }
  const Rational zero(0);
  const Rational half(1, 2);
  const Rational one(1);
  bool only_ordinary_slopes = true;
  bool only_hodge_witt_slopes = true;
  for (const auto& s : newton.segments()) {
    if (s.slope < zero || s.slope > one) fail(ErrorKind::InvalidPolygon, "abelian slopes must lie in [0,1]");
    if (newton.multiplicity_of(one - s.slope) != s.multiplicity) {
      fail(ErrorKind::InvalidPolygon, "abelian slopes must be symmetric under s -> 1 - s");
    }
    if (s.multiplicity % s.slope.denominator() != 0) {
      fail(ErrorKind::InvalidPolygon, "break points of an abelian Newton polygon must be integral");
    }
    if (s.slope != zero && s.slope != one) only_ordinary_slopes = false;
    if (s.slope != zero && s.slope != one && s.slope != half) only_hodge_witt_slopes = false;
  }
  if (only_ordinary_slopes) return ReductionType::Ordinary;
  if (only_hodge_witt_slopes && newton.multiplicity_of(half) == 2) return ReductionType::AlmostOrdinary;
  return ReductionType::NonHodgeWitt;
}

FactorStatus product_status(std::span<const FactorStatus> factors) {
  if (factors.empty()) fail(ErrorKind::Domain, "product of no factors");
  int non_ordinary = 0;
  bool non_ordinary_all_hodge_witt = true;
  for (const auto& f : factors) {
    if (f.is_ordinary && !f.is_hodge_witt) {
      fail(ErrorKind::Consistency, "an ordinary factor is always Hodge-Witt");
    }
    if (!f.is_ordinary) {
      ++non_ordinary;
      non_ordinary_all_hodge_witt = non_ordinary_all_hodge_witt && f.is_hodge_witt;
    }
  }
  return {non_ordinary == 0, non_ordinary == 0 || (non_ordinary == 1 && non_ordinary_all_hodge_witt)};
}

ReductionType to_reduction_type(FactorStatus s) noexcept {
  if (s.is_ordinary) return ReductionType::Ordinary;
  if (s.is_hodge_witt) return ReductionType::AlmostOrdinary;
  return ReductionType::NonHodgeWitt;
}

}  // namespace redscope
