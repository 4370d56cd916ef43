#pragma once

#include <array>
#include <string>
#include <vector>

#include "redscope/cm_classify.hpp"
#include "redscope/number_field.hpp"

namespace redscope {

/// Elliptic curve over Q in long Weierstrass form
/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
class EllipticCurveQ {
 public:
  /// Throws ErrorKind::Config on a singular model (zero discriminant).
  EllipticCurveQ(std::array<i64, 5> a, std::string label = {});

  const std::array<i64, 5>& coefficients() const noexcept { return a_; }
  const std::string& label() const noexcept { return label_; }
  const BigInt& c4() const noexcept { return c4_; }
  const BigInt& c6() const noexcept { return c6_; }
  const BigInt& discriminant() const noexcept { return disc_; }

  /// p <= 3, or p divides the discriminant of this model.
  bool is_excluded(u64 p) const;

 private:
  std::array<i64, 5> a_;
  std::string label_;
  BigInt c4_;
  BigInt c6_;
  BigInt disc_;
};

/// Computes a_p = p + 1 - #E(F_p) from the short model y^2 = x^3 - 27c4 x -
/// 54c6, summing the quadratic character of the right-hand side over F_p.
/// The character comes from a table of squares mod p that the counter keeps
/// between calls, so one counter per thread amortizes the allocation.
class FrobeniusTraceCounter {
 public:
  /// Throws ErrorKind::ExcludedPrime for p <= 3 or bad reduction,
  /// ErrorKind::Domain for composite p, ErrorKind::Consistency if the
  /// result breaks the Hasse bound.
  i64 ap(const EllipticCurveQ& e, u64 p);

 private:
  std::vector<std::uint8_t> squares_;
  u64 table_prime_ = 0;
};

i64 ap(const EllipticCurveQ& e, u64 p);

/// a_p = 0 (valid as a supersingularity test for p >= 5).
bool is_supersingular(const EllipticCurveQ& e, u64 p);
bool is_ordinary(const EllipticCurveQ& e, u64 p);

struct PrimeSearchResult {
  std::vector<u64> primes;      // ascending
  std::vector<u64> bad_primes;  // skipped primes >= 5 of bad reduction, ascending
};

/// All good primes 5 <= p <= bound with a_p = 0.
PrimeSearchResult supersingular_search(const EllipticCurveQ& e, u64 bound, unsigned workers = 1);

/// Primes 5 <= p <= bound, good for both curves, where both a_p vanish.
/// The second curve is only counted at primes where the first is
/// supersingular.
PrimeSearchResult common_supersingular(const EllipticCurveQ& e1, const EllipticCurveQ& e2, u64 bound,
                                       unsigned workers = 1);

/// Reduction type of the abelian surface E1 x E2 at p.
ReductionType classify_product_surface(const EllipticCurveQ& e1, const EllipticCurveQ& e2, u64 p);
ReductionType classify_product_surface(const EllipticCurveQ& e1, const EllipticCurveQ& e2, u64 p,
                                       FrobeniusTraceCounter& counter);

/// Parses "a1,a2,a3,a4,a6". Throws ErrorKind::Config.
std::array<i64, 5> parse_weierstrass(const std::string& text);

}  // namespace redscope
