#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redscope/cm_classify.hpp"
#include "redscope/number_field.hpp"
#include "redscope/primes.hpp"

namespace redscope {

struct ConjugacyClass {
  i64 size = 0;
  std::vector<int> cycle_type;  // partition of the permutation degree, descending
};

/// Conjugacy classes of a Galois group G acting on the cosets G/H, each
/// with its cycle type as a permutation of [G:H] points.
class GroupClassTable {
 public:
  /// Throws ErrorKind::Consistency when the class sizes do not sum to the
  /// order, a cycle type does not partition the degree, or the identity
  /// class (1^n, size 1) is missing.
  GroupClassTable(std::string name, int degree_n, i64 order, std::vector<ConjugacyClass> classes);

  const std::string& name() const noexcept { return name_; }
  int degree_n() const noexcept { return degree_; }
  i64 order() const noexcept { return order_; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }

 private:
  std::string name_;
  int degree_;
  i64 order_;
  std::vector<ConjugacyClass> classes_;
};

/// C2, C4, V4, D4, S3, S4 in their natural (transitive) permutation
/// representations. Throws ErrorKind::Config for an unknown name.
GroupClassTable builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

/// |G_tr| / |G|: classes of cycle type 1^n or 2 1^(n-2); for n = 2 only
/// the identity counts.
Rational gtr_density(const GroupClassTable& table);

/// 1 / |G|: the identity class alone.
Rational ordinary_density(const GroupClassTable& table);

/// A CM field prepared for prime-by-prime classification.
struct CmField {
  NumberField field;
  std::optional<NumberField> k0;
  bool galois = false;
  /// Galois-only rule: equal residue degrees > 1 mean non-Hodge-Witt.
  bool equal_degree_rule = false;
};

struct ScanRow {
  u64 p = 0;
  std::vector<int> degrees;
  SplitClass split_class = SplitClass::RamifiedOrBad;
  std::optional<int> inert_count;
  std::optional<ReductionType> reduction;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Primes dividing the discriminant of K (or of K0 when supplied).
bool is_excluded(const CmField& cm, u64 p);

/// Full per-prime pipeline: splitting pattern, split class, inert count
/// (with K0), reduction verdict and the opt-in Galois rule. Excluded primes
/// come back as RamifiedOrBad rows without a verdict.
ScanRow classify_prime(const CmField& cm, u64 p);

/// Tallies over the unexcluded primes of a scan.
struct DensityReport {
  u64 bound = 0;
  u64 total = 0;
  std::array<u64, 3> split_counts{};      // CompletelySplit, AlmostNotCompletely, Other
  std::array<u64, 5> reduction_counts{};  // indexed by ReductionType
  std::vector<u64> excluded;

  u64 count(SplitClass c) const;
  u64 count(ReductionType t) const;
  /// count / total as an exact rational (0 when nothing was scanned).
  Rational fraction(SplitClass c) const;
  Rational fraction(ReductionType t) const;

  friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

DensityReport summarize(const std::vector<ScanRow>& rows, u64 bound);

/// Rows for the primes in [lo, hi], ascending, split over `workers`
/// threads. The rows do not depend on the worker count.
std::vector<ScanRow> scan_rows(const CmField& cm, u64 lo, u64 hi, unsigned workers = 1);

struct ScanResult {
  std::vector<ScanRow> rows;
  DensityReport report;
};

ScanResult empirical_scan(const CmField& cm, u64 bound, unsigned workers = 1);

}  // namespace redscope
