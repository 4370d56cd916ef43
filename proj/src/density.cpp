#include "redscope/density.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "redscope/errors.hpp"

namespace redscope {

GroupClassTable::GroupClassTable(std::string name, int degree_n, i64 order, std::vector<ConjugacyClass> classes)
    : name_(std::move(name)), degree_(degree_n), order_(order), classes_(std::move(classes)) {
  if (degree_ < 1) fail(ErrorKind::Consistency, "group table '" + name_ + "': degree must be positive");
  if (order_ < 1) fail(ErrorKind::Consistency, "group table '" + name_ + "': order must be positive");
  i64 total = 0;
  bool has_identity = false;
  for (auto& c : classes_) {
    if (c.size < 1) fail(ErrorKind::Consistency, "group table '" + name_ + "': class sizes must be positive");
    std::sort(c.cycle_type.begin(), c.cycle_type.end(), std::greater<>());
    if (c.cycle_type.empty() || c.cycle_type.back() < 1 ||
        std::accumulate(c.cycle_type.begin(), c.cycle_type.end(), 0) != degree_) {
      fail(ErrorKind::Consistency, "group table '" + name_ + "': cycle type does not partition the degree");
    }
    if (c.cycle_type.front() == 1) {
      if (c.size != 1 || has_identity) {
        fail(ErrorKind::Consistency, "group table '" + name_ + "': identity class must appear once with size 1");
      }
      has_identity = true;
    }
    total += c.size;
  }
  if (!has_identity) fail(ErrorKind::Consistency, "group table '" + name_ + "': missing identity class");
  if (total != order_) {
    fail(ErrorKind::Consistency, "group table '" + name_ + "': class sizes sum to " + std::to_string(total) +
                                     ", order is " + std::to_string(order_));
  }
}

GroupClassTable builtin_group(std::string_view name) {
  using CT = std::vector<int>;
  if (name == "C2") return {"C2", 2, 2, {{1, CT{1, 1}}, {1, CT{2}}}};
  if (name == "C4") return {"C4", 4, 4, {{1, CT{1, 1, 1, 1}}, {1, CT{2, 2}}, {2, CT{4}}}};
  if (name == "V4") return {"V4", 4, 4, {{1, CT{1, 1, 1, 1}}, {3, CT{2, 2}}}};
  if (name == "D4") {
    return {"D4", 4, 8,
            {{1, CT{1, 1, 1, 1}}, {1, CT{2, 2}}, {2, CT{4}}, {2, CT{2, 1, 1}}, {2, CT{2, 2}}}};
  }
  if (name == "S3") return {"S3", 3, 6, {{1, CT{1, 1, 1}}, {3, CT{2, 1}}, {2, CT{3}}}};
  if (name == "S4") {
    return {"S4", 4, 24,
            {{1, CT{1, 1, 1, 1}}, {6, CT{2, 1, 1}}, {3, CT{2, 2}}, {8, CT{3, 1}}, {6, CT{4}}}};
  }
  fail(ErrorKind::Config, "unknown built-in group '" + std::string(name) + "'");
}

std::vector<std::string> builtin_group_names() { return {"C2", "C4", "V4", "D4", "S3", "S4"}; }

namespace {

bool is_identity_type(const std::vector<int>& t) { return t.front() == 1; }

bool is_single_transposition(const std::vector<int>& t) {
  return t.front() == 2 && (t.size() == 1 || t[1] == 1);
}

}  // namespace

Rational gtr_density(const GroupClassTable& table) {
  if (table.degree_n() < 2) fail(ErrorKind::Consistency, "G_tr needs a permutation degree of at least 2");
  i64 count = 0;
  for (const auto& c : table.classes()) {
    if (is_identity_type(c.cycle_type) || (table.degree_n() > 2 && is_single_transposition(c.cycle_type))) {
      count += c.size;
    }
  }
  return Rational(count, table.order());
}

Rational ordinary_density(const GroupClassTable& table) {
  if (table.degree_n() < 2) fail(ErrorKind::Consistency, "density needs a permutation degree of at least 2");
  return Rational(1, table.order());
}

bool is_excluded(const CmField& cm, u64 p) {
  return cm.field.is_excluded(p) || (cm.k0 && cm.k0->is_excluded(p));
}

ScanRow classify_prime(const CmField& cm, u64 p) {
  ScanRow row;
  row.p = p;
  SplittingPattern pattern = splitting_pattern(cm.field, p);
  if (pattern.ramified || is_excluded(cm, p)) return row;

  row.split_class = classify_split(pattern, cm.field.degree());
  if (cm.galois && row.split_class == SplitClass::AlmostNotCompletely) {
    fail(ErrorKind::Consistency, "field flagged galois splits almost but not completely at " + std::to_string(p));
  }
  ReductionType verdict;
  if (cm.k0) {
    SplittingPattern pattern_k0 = splitting_pattern(*cm.k0, p);
    row.inert_count = inert_count_over_p(pattern, pattern_k0);
    verdict = classify_with_inert_count(row.split_class, *row.inert_count);
  } else {
    verdict = classify_by_splitting(row.split_class);
  }
  if (cm.galois && cm.equal_degree_rule) verdict = refine_equal_degree_non_hodge_witt(verdict, pattern);
  row.degrees = std::move(pattern.degrees);
  row.reduction = verdict;
  return row;
}

u64 DensityReport::count(SplitClass c) const {
  if (c == SplitClass::RamifiedOrBad) return excluded.size();
  return split_counts[static_cast<std::size_t>(c)];
}

u64 DensityReport::count(ReductionType t) const { return reduction_counts[static_cast<std::size_t>(t)]; }

Rational DensityReport::fraction(SplitClass c) const {
  return total == 0 ? Rational(0) : Rational(static_cast<i64>(count(c)), static_cast<i64>(total));
}

Rational DensityReport::fraction(ReductionType t) const {
  return total == 0 ? Rational(0) : Rational(static_cast<i64>(count(t)), static_cast<i64>(total));
}

DensityReport summarize(const std::vector<ScanRow>& rows, u64 bound) {
  DensityReport report;
  report.bound = bound;
  for (const auto& row : rows) {
    if (row.p > bound) continue;
    if (row.split_class == SplitClass::RamifiedOrBad) {
      report.excluded.push_back(row.p);
      continue;
    }
    ++report.total;
    ++report.split_counts[static_cast<std::size_t>(row.split_class)];
    if (row.reduction) ++report.reduction_counts[static_cast<std::size_t>(*row.reduction)];
  }
  return report;
}

std::vector<ScanRow> scan_rows(const CmField& cm, u64 lo, u64 hi, unsigned workers) {
  const std::vector<u64> primes = primes_in_range(lo, hi);
  return parallel_ordered<u64>(primes, workers, [&cm](std::span<const u64> range) {
    std::vector<ScanRow> rows;
    rows.reserve(range.size());
    for (u64 p : range) rows.push_back(classify_prime(cm, p));
    return rows;
  });
}

ScanResult empirical_scan(const CmField& cm, u64 bound, unsigned workers) {
  if (bound < 2) fail(ErrorKind::Domain, "scan bound must be at least 2");
  ScanResult out;
  out.rows = scan_rows(cm, 2, bound, workers);
  out.report = summarize(out.rows, bound);
  return out;
}

}  // namespace redscope
