#include "redscope/fermat.hpp"

#include <algorithm>

#include "redscope/errors.hpp"

namespace redscope {

namespace {

using Ord = FermatRow::OrdinaryRule;
using Hw = FermatRow::HodgeWittRule;

FermatDensities tabulated(std::optional<Rational> ord, Rational hw) { return {ord, hw, Rational(1) - hw}; }

FermatTable build_table() {
  const Rational half(1, 2);
  const Rational one(1);
  FermatTable t;
  t.version = 1;
  t.rows = {
      {0, 1, Ord::Always, {}, Hw::Always, {}, tabulated(one, one)},
      {0, 2, Ord::Always, {}, Hw::Always, {}, tabulated(one, one)},
      {1, 0, Ord::Unknown, {}, Hw::Always, {}, tabulated(std::nullopt, one)},
      {2, 3, Ord::Residues, {1}, Hw::Always, {}, tabulated(half, one)},
      {3, 3, Ord::Residues, {1}, Hw::Always, {}, tabulated(half, one)},
      {3, 4, Ord::Residues, {1}, Hw::Always, {}, tabulated(half, one)},
      {5, 3, Ord::Residues, {1}, Hw::Always, {}, tabulated(half, one)},
      // Hodge-Witt residues are the squares mod 7; the printed table says "mod 3"
      {2, 7, Ord::Residues, {1}, Hw::Residues, {1, 2, 4}, tabulated(Rational(1, 6), half)},
      {0, 0, Ord::Residues, {1}, Hw::Residues, {1}, std::nullopt},
  };
  return t;
}

const FermatRow& row_for(const FermatSpec& spec) {
  for (const auto& row : fermat_table().rows) {
    if ((row.n == 0 || row.n == spec.n) && (row.m == 0 || row.m == spec.m)) return row;
  }
  fail(ErrorKind::Consistency, "Fermat table has no generic row");
}

void require_valid(const FermatSpec& spec) {
  if (spec.n < 1 || spec.m < 1) fail(ErrorKind::Domain, "Fermat hypersurface needs n >= 1 and m >= 1");
}

bool contains(const std::vector<int>& residues, u64 r) {
  return std::find(residues.begin(), residues.end(), static_cast<int>(r)) != residues.end();
}

}  // namespace

const FermatTable& fermat_table() {
  static const FermatTable table = build_table();
  return table;
}

i64 euler_phi(i64 m) {
  if (m < 1) fail(ErrorKind::Domain, "phi needs a positive argument");
  i64 result = m;
  for (i64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

FermatVerdict classify_fermat(const FermatSpec& spec, u64 p) {
  require_valid(spec);
  if (!is_prime(p)) fail(ErrorKind::Domain, std::to_string(p) + " is not prime");
  const u64 m = static_cast<u64>(spec.m);
  if (m % p == 0) {
    fail(ErrorKind::ExcludedPrime, "p = " + std::to_string(p) + " divides m = " + std::to_string(m));
  }
  const FermatRow& row = row_for(spec);
  const u64 r = p % m;

  FermatVerdict out;
  switch (row.ordinary_rule) {
    case Ord::Always: out.ordinary = true; break;
    case Ord::Unknown: out.ordinary = std::nullopt; break;
    case Ord::Residues: out.ordinary = contains(row.ordinary_residues, r); break;
  }
  const bool hodge_witt = row.hodge_witt_rule == Hw::Always || contains(row.hodge_witt_residues, r);
  if (out.ordinary.value_or(false)) {
    out.reduction = ReductionType::Ordinary;
  } else if (hodge_witt) {
    out.reduction = ReductionType::HodgeWitt;
  } else {
    out.reduction = ReductionType::NonHodgeWitt;
  }
  return out;
}

FermatDensities fermat_densities(const FermatSpec& spec) {
  require_valid(spec);
  const FermatRow& row = row_for(spec);
  if (row.densities) return *row.densities;
  const Rational generic(1, euler_phi(spec.m));
  return {generic, generic, Rational(1) - generic};
}

}  // namespace redscope
