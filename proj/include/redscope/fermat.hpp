#pragma once

#include <optional>
#include <vector>

#include "redscope/cm_classify.hpp"

namespace redscope {

/// The Fermat hypersurface X_0^m + ... + X_{n+1}^m = 0 of dimension n.
struct FermatSpec {
  int n = 1;
  int m = 1;
};

/// Ordinarity is a tri-state: nullopt when not known.
struct FermatVerdict {
  std::optional<bool> ordinary;
  ReductionType reduction = ReductionType::Undetermined;

  friend bool operator==(const FermatVerdict&, const FermatVerdict&) = default;
};

struct FermatDensities {
  std::optional<Rational> ord;
  Rational hw;
  Rational nonhw;

  friend bool operator==(const FermatDensities&, const FermatDensities&) = default;
};

/// One row of the reduction table. A row matches (n, m) when each of its
/// `n`/`m` fields is zero (wildcard) or equal. Residue rules are stated
/// modulo m.
struct FermatRow {
  enum class OrdinaryRule { Always, Unknown, Residues };
  enum class HodgeWittRule { Always, Residues };

  int n = 0;
  int m = 0;
  OrdinaryRule ordinary_rule = OrdinaryRule::Residues;
  std::vector<int> ordinary_residues;
  HodgeWittRule hodge_witt_rule = HodgeWittRule::Residues;
  std::vector<int> hodge_witt_residues;
  /// Tabulated densities; nullopt means the generic 1/phi(m) formulas.
  std::optional<FermatDensities> densities;
};

struct FermatTable {
  int version = 0;
  std::vector<FermatRow> rows;  // first match wins; the last row is generic
};

const FermatTable& fermat_table();

/// Throws ErrorKind::ExcludedPrime when p | m, ErrorKind::Domain when p is
/// not prime or n, m < 1.
FermatVerdict classify_fermat(const FermatSpec& spec, u64 p);

FermatDensities fermat_densities(const FermatSpec& spec);

/// Euler's totient.
i64 euler_phi(i64 m);

}  // namespace redscope
