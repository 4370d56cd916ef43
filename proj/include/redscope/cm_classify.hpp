#pragma once

#include <span>
#include <string_view>

#include "redscope/number_field.hpp"
#include "redscope/polygon.hpp"

namespace redscope {

/// Reduction verdict at a prime.
///
/// AlmostOrdinary is Hodge-Witt but not ordinary; HodgeWitt is Hodge-Witt
/// with ordinarity not decided. Undetermined is reported as-is and never
/// folded into another verdict.
enum class ReductionType { Ordinary, AlmostOrdinary, HodgeWitt, NonHodgeWitt, Undetermined };

std::string_view to_string(ReductionType t) noexcept;
ReductionType parse_reduction_type(std::string_view name);

inline bool is_hodge_witt(ReductionType t) noexcept {
  return t == ReductionType::Ordinary || t == ReductionType::AlmostOrdinary || t == ReductionType::HodgeWitt;
}

/// Sufficient conditions only: completely split gives Ordinary, almost
/// completely split gives AlmostOrdinary, anything else Undetermined.
/// Throws ErrorKind::ExcludedPrime for RamifiedOrBad.
ReductionType classify_by_splitting(SplitClass sc);

/// Two or more primes of K0 inert in K force NonHodgeWitt; otherwise the
/// same as classify_by_splitting. Throws ErrorKind::Consistency when the
/// inert count contradicts the split class.
ReductionType classify_with_inert_count(SplitClass sc, int inert);

/// Opt-in refinement for Galois CM fields with a proven rule: an
/// Undetermined verdict whose residue degrees are all equal (and > 1)
/// becomes NonHodgeWitt.
ReductionType refine_equal_degree_non_hodge_witt(ReductionType verdict, const SplittingPattern& pattern);

/// Verdict for an abelian variety of dimension g from the Newton slopes of
/// its H^1. Throws ErrorKind::InvalidPolygon when the polygon is not a
/// plausible abelian one (width 2g, slopes in [0,1], symmetric, integral
/// break points).
ReductionType classify_abelian_from_slopes(const Polygon& newton, int g);

struct FactorStatus {
  bool is_ordinary = false;
  bool is_hodge_witt = false;

  friend bool operator==(const FactorStatus&, const FactorStatus&) = default;
};

/// Status of a product: ordinary iff every factor is; Hodge-Witt iff all
/// but at most one factor are ordinary and the remaining one is Hodge-Witt.
FactorStatus product_status(std::span<const FactorStatus> factors);

/// Abelian-variety reading of a product status.
ReductionType to_reduction_type(FactorStatus s) noexcept;

}  // namespace redscope
