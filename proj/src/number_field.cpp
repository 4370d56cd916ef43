#include "redscope/number_field.hpp"

#include <algorithm>
#include <numeric>

#include "redscope/errors.hpp"
#include "redscope/ff_poly.hpp"

namespace redscope {

namespace {

// Fraction-free Gaussian elimination; exact for integer matrices.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

constexpr i64 kRationalRootCheckLimit = 1'000'000'000'000;

BigInt evaluate(const std::vector<i64>& poly, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Monic integer polynomials only have integer rational roots, and those
// divide the constant term.
bool has_rational_root(const std::vector<i64>& poly) {
  if (poly.front() == 0) return true;
  if (poly.front() == INT64_MIN) return false;
  const i64 c = poly.front() < 0 ? -poly.front() : poly.front();
  if (c > kRationalRootCheckLimit) return false;  // too costly to enumerate; trusted
  for (i64 d = 1; d * d <= c; ++d) {
    if (c % d != 0) continue;
    for (i64 candidate : {d, -d, c / d, -(c / d)}) {
      if (evaluate(poly, candidate) == 0) return true;
    }
  }
  return false;
}

}  // namespace

BigInt polynomial_discriminant(const std::vector<i64>& poly) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 1 || poly.back() != 1) fail(ErrorKind::Domain, "discriminant expects a monic polynomial of degree >= 1");
  if (n == 1) return 1;

  std::vector<BigInt> deriv(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) deriv[static_cast<std::size_t>(i - 1)] = BigInt(poly[static_cast<std::size_t>(i)]) * i;

  // Sylvester matrix of f (degree n) and f' (degree n - 1), highest coefficient first.
  const std::size_t size = static_cast<std::size_t>(2 * n - 1);
  std::vector<std::vector<BigInt>> sylvester(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < n - 1; ++r) {
    for (int j = 0; j <= n; ++j) {
      sylvester[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = poly[static_cast<std::size_t>(n - j)];
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= n - 1; ++j) {
      sylvester[static_cast<std::size_t>(n - 1 + r)][static_cast<std::size_t>(r + j)] =
          deriv[static_cast<std::size_t>(n - 1 - j)];
    }
  }
  BigInt res = bareiss_determinant(std::move(sylvester));
  const bool negate = ((n * (n - 1) / 2) % 2) == 1;
  return negate ? BigInt(-res) : res;
}

NumberField::NumberField(std::vector<i64> defining_poly, std::string label)
    : poly_(std::move(defining_poly)), label_(std::move(label)) {
  while (poly_.size() > 1 && poly_.back() == 0) poly_.pop_back();
  if (poly_.size() < 2) fail(ErrorKind::Config, "defining polynomial must have degree >= 1");
  if (poly_.back() != 1) fail(ErrorKind::Config, "defining polynomial must be monic");
  disc_ = polynomial_discriminant(poly_);
  if (disc_ == 0) fail(ErrorKind::Config, "defining polynomial has zero discriminant");
  if (degree() > 1 && has_rational_root(poly_)) {
    fail(ErrorKind::Config, "defining polynomial has a rational root, so it is reducible over Q");
  }
}

bool NumberField::is_excluded(u64 p) const {
  return BigInt(disc_ % p) == 0;
}

int SplittingPattern::degree_sum() const noexcept {
  return std::accumulate(degrees.begin(), degrees.end(), 0);
}

std::string_view to_string(SplitClass c) noexcept {
  switch (c) {
    case SplitClass::CompletelySplit: return "CompletelySplit";
    case SplitClass::AlmostNotCompletely: return "AlmostNotCompletely";
    case SplitClass::Other: return "Other";
    case SplitClass::RamifiedOrBad: return "RamifiedOrBad";
  }
  return "?";
}

SplitClass parse_split_class(std::string_view name) {
  for (auto c : {SplitClass::CompletelySplit, SplitClass::AlmostNotCompletely, SplitClass::Other,
                 SplitClass::RamifiedOrBad}) {
    if (to_string(c) == name) return c;
  }
  fail(ErrorKind::Config, "unknown split class '" + std::string(name) + "'");
}

SplittingPattern splitting_pattern(const NumberField& field, u64 p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    fail(ErrorKind::Domain, std::to_string(p) + " is not a prime below 2^62");
  }
  SplittingPattern out;
  out.prime_p = p;
  if (field.is_excluded(p)) {
    out.ramified = true;
    return out;
  }
  DegreePattern dp = factor_degree_pattern(PolyModP::from_integers(p, field.defining_poly()));
  if (!dp.squarefree) {
    fail(ErrorKind::Consistency, "defining polynomial has a repeated factor mod " + std::to_string(p) +
                                     " although p does not divide its discriminant");
  }
  out.degrees = std::move(dp.degrees);
  return out;
}

SplitClass classify_split(const SplittingPattern& pattern, int field_degree) {
  if (pattern.ramified) return SplitClass::RamifiedOrBad;
  if (pattern.degree_sum() != field_degree) {
    fail(ErrorKind::Consistency, "residue degrees sum to " + std::to_string(pattern.degree_sum()) +
                                     ", field degree is " + std::to_string(field_degree));
  }
  const auto& d = pattern.degrees;
  const auto ones = std::count(d.begin(), d.end(), 1);
  if (ones == static_cast<long>(d.size())) return SplitClass::CompletelySplit;
  // degrees are sorted, so a single 2 sits at the end
  if (field_degree > 2 && ones + 1 == static_cast<long>(d.size()) && d.back() == 2) {
    return SplitClass::AlmostNotCompletely;
  }
  return SplitClass::Other;
}

int inert_count_over_p(const SplittingPattern& pattern_k, const SplittingPattern& pattern_k0) {
  if (pattern_k.ramified || pattern_k0.ramified) {
    fail(ErrorKind::Consistency, "inert count needs unramified patterns");
  }
  if (pattern_k.prime_p != pattern_k0.prime_p) {
    fail(ErrorKind::Consistency, "patterns are for different primes");
  }
  if (pattern_k.degree_sum() != 2 * pattern_k0.degree_sum()) {
    fail(ErrorKind::Consistency, "K must be a quadratic extension of K0");
  }
  const int l = pattern_k0.prime_count();
  const int n = pattern_k.prime_count();
  const int inert = 2 * l - n;
  if (inert < 0 || inert > l) {
    fail(ErrorKind::Consistency, "inconsistent patterns at p=" + std::to_string(pattern_k.prime_p) +
                                     ": 2l - n = " + std::to_string(inert) + " with l = " + std::to_string(l));
  }
  return inert;
}

}  // namespace redscope
