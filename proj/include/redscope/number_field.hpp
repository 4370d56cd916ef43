#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "redscope/arith.hpp"

namespace redscope {

using BigInt = boost::multiprecision::cpp_int;

/// A number field Q[x]/(f) given by a monic integral defining polynomial
/// (constant term first). Irreducibility over Q is trusted; only a
/// rational-root check is performed on construction.
class NumberField {
 public:
  explicit NumberField(std::vector<i64> defining_poly, std::string label = {});

  const std::vector<i64>& defining_poly() const noexcept { return poly_; }
  int degree() const noexcept { return static_cast<int>(poly_.size()) - 1; }
  const BigInt& disc_poly() const noexcept { return disc_; }
  const std::string& label() const noexcept { return label_; }

  /// True when p divides the polynomial discriminant.
  bool is_excluded(u64 p) const;

 private:
  std::vector<i64> poly_;
  BigInt disc_;
  std::string label_;
};

/// Discriminant of a monic integer polynomial, via the Sylvester resultant.
BigInt polynomial_discriminant(const std::vector<i64>& monic_poly);

struct SplittingPattern {
  u64 prime_p = 0;
  std::vector<int> degrees;  // residue degrees f_i, ascending
  bool ramified = false;

  int prime_count() const noexcept { return static_cast<int>(degrees.size()); }
  int degree_sum() const noexcept;

  friend bool operator==(const SplittingPattern&, const SplittingPattern&) = default;
};

enum class SplitClass { CompletelySplit, AlmostNotCompletely, Other, RamifiedOrBad };

std::string_view to_string(SplitClass c) noexcept;
SplitClass parse_split_class(std::string_view name);

/// Residue degrees of p in K via factorization of the defining polynomial
/// mod p. Primes dividing the polynomial discriminant come back flagged
/// ramified with no degrees. Throws ErrorKind::Domain for composite p.
SplittingPattern splitting_pattern(const NumberField& field, u64 p);

/// Throws ErrorKind::Consistency when an unramified pattern's degrees do
/// not sum to field_degree.
SplitClass classify_split(const SplittingPattern& pattern, int field_degree);

/// Number of primes of K0 above p that stay inert in the quadratic
/// extension K/K0, from the prime counts alone: with l primes in K0 and n
/// in K, l - m are inert where n = 2m + (l - m), i.e. 2l - n.
int inert_count_over_p(const SplittingPattern& pattern_k, const SplittingPattern& pattern_k0);

}  // namespace redscope
