#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "redscope/arith.hpp"

namespace redscope {

/// Univariate polynomial over F_p, constant term first.
///
/// Coefficients are kept in [0, p) with no trailing zeros; the zero
/// polynomial has an empty coefficient list. The modulus is checked for
/// primality on construction and must be below 2^62.
class PolyModP {
 public:
  /// Reduces every coefficient mod p. Throws ErrorKind::Modulus when p is
  /// not a prime below 2^62.
  PolyModP(u64 p, std::vector<u64> coeffs);

  static PolyModP from_integers(u64 p, std::span<const i64> coeffs);
  static PolyModP monomial(u64 p, std::size_t degree);

  u64 modulus() const noexcept { return p_; }
  const std::vector<u64>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  u64 leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return leading() == 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  PolyModP monic() const;
  PolyModP derivative() const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator/(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator%(const PolyModP& a, const PolyModP& b);

  friend bool operator==(const PolyModP& a, const PolyModP& b) = default;

  std::string to_string() const;

 private:
  struct Unchecked {};
  PolyModP(Unchecked, u64 p, std::vector<u64> coeffs);

  void trim();

  u64 p_;
  std::vector<u64> c_;

  friend struct PolyOps;
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);

/// Monic gcd (zero when both inputs are zero).
PolyModP gcd(const PolyModP& a, const PolyModP& b);

/// base^exp reduced modulo `mod`.
PolyModP pow_mod(const PolyModP& base, u64 exp, const PolyModP& mod);

struct Factor {
  PolyModP poly;
  int multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization into monic irreducibles with multiplicities.
///
/// Square-free decomposition, then distinct-degree, then randomized
/// equal-degree splitting seeded from (p, coefficients). The output is
/// sorted by (degree, coefficient list) so it does not depend on the
/// random stream. Throws ErrorKind::Domain for the zero polynomial or a
/// constant.
std::vector<Factor> factor_mod_p(const PolyModP& f);

/// Throws ErrorKind::Domain unless f is monic of degree >= 1.
bool is_irreducible(const PolyModP& f);

/// Degrees of the irreducible factors of a square-free f, ascending, via
/// distinct-degree factorization only. `squarefree` is cleared (and the
/// degree list left empty) when f has a repeated factor.
struct DegreePattern {
  bool squarefree = true;
  std::vector<int> degrees;
};
DegreePattern factor_degree_pattern(const PolyModP& f);

}  // namespace redscope
