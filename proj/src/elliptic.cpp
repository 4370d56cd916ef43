#include "redscope/elliptic.hpp"

#include <sstream>

#include "redscope/errors.hpp"
#include "redscope/primes.hpp"

namespace redscope {

namespace {

u64 reduce_big(const BigInt& v, u64 p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<u64>(r);
}

}  // namespace

EllipticCurveQ::EllipticCurveQ(std::array<i64, 5> a, std::string label) : a_(a), label_(std::move(label)) {
  const BigInt a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  const BigInt b2 = a1 * a1 + 4 * a2;
  const BigInt b4 = 2 * a4 + a1 * a3;
  const BigInt b6 = a3 * a3 + 4 * a6;
  const BigInt b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  c4_ = b2 * b2 - 24 * b4;
  c6_ = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  disc_ = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (disc_ == 0) fail(ErrorKind::Config, "singular Weierstrass model (zero discriminant)");
}

bool EllipticCurveQ::is_excluded(u64 p) const {
  return p <= 3 || BigInt(disc_ % p) == 0;
}

i64 FrobeniusTraceCounter::ap(const EllipticCurveQ& e, u64 p) {
  if (p <= 3) fail(ErrorKind::ExcludedPrime, "primes 2 and 3 are excluded from elliptic computations");
  if (p >= kMaxModulus || !is_prime(p)) fail(ErrorKind::Domain, std::to_string(p) + " is not a prime below 2^62");
  if (e.is_excluded(p)) {
    fail(ErrorKind::ExcludedPrime, "curve " + e.label() + " has bad reduction at " + std::to_string(p));
  }
  const u64 a = reduce_big(BigInt(-27) * e.c4(), p);
  const u64 b = reduce_big(BigInt(-54) * e.c6(), p);

  if (table_prime_ != p) {
    squares_.assign(p, 0);
    u64 s = 0;
    for (u64 x = 1; x <= (p - 1) / 2; ++x) {
      s = add_mod(s, (2 * x - 1) % p, p);  // x^2 = (x-1)^2 + 2x - 1
      squares_[s] = 1;
    }
    table_prime_ = p;
  }

  // f(x) = x^3 + a x + b stepped by forward differences:
  // f(x+1) - f(x) = 3x^2 + 3x + 1 + a, second difference 6x + 6, third 6.
  u64 value = b;
  u64 d1 = add_mod(1, a, p);
  u64 d2 = 6 % p;
  const u64 d3 = 6 % p;
  u64 zeros = 0;
  u64 residues = 0;
  for (u64 x = 0; x < p; ++x) {
    if (value == 0) {
      ++zeros;
    } else {
      residues += squares_[value];
    }
    value = add_mod(value, d1, p);
    d1 = add_mod(d1, d2, p);
    d2 = add_mod(d2, d3, p);
  }
  // sum of characters = residues - nonresidues = 2*residues + zeros - p
  const i64 char_sum = 2 * static_cast<i64>(residues) + static_cast<i64>(zeros) - static_cast<i64>(p);
  const i64 trace = -char_sum;
  if (static_cast<i128>(trace) * trace > 4 * static_cast<i128>(p)) {
    fail(ErrorKind::Consistency, "Hasse bound violated: a_" + std::to_string(p) + " = " + std::to_string(trace));
  }
  return trace;
}

i64 ap(const EllipticCurveQ& e, u64 p) {
  FrobeniusTraceCounter counter;
  return counter.ap(e, p);
}

bool is_supersingular(const EllipticCurveQ& e, u64 p) { return ap(e, p) == 0; }
bool is_ordinary(const EllipticCurveQ& e, u64 p) { return !is_supersingular(e, p); }

namespace {

struct Hit {
  u64 p;
  bool bad;
};

PrimeSearchResult collect(const std::vector<Hit>& hits) {
  PrimeSearchResult out;
  for (const auto& h : hits) (h.bad ? out.bad_primes : out.primes).push_back(h.p);
  return out;
}

}  // namespace

PrimeSearchResult supersingular_search(const EllipticCurveQ& e, u64 bound, unsigned workers) {
  const std::vector<u64> primes = primes_in_range(5, bound);
  auto hits = parallel_ordered<u64>(primes, workers, [&e](std::span<const u64> range) {
    FrobeniusTraceCounter counter;
    std::vector<Hit> local;
    for (u64 p : range) {
      if (e.is_excluded(p)) {
        local.push_back({p, true});
      } else if (counter.ap(e, p) == 0) {
        local.push_back({p, false});
      }
    }
    return local;
  });
  return collect(hits);
}

PrimeSearchResult common_supersingular(const EllipticCurveQ& e1, const EllipticCurveQ& e2, u64 bound,
                                       unsigned workers) {
  const std::vector<u64> primes = primes_in_range(5, bound);
  auto hits = parallel_ordered<u64>(primes, workers, [&](std::span<const u64> range) {
    FrobeniusTraceCounter counter;
    std::vector<Hit> local;
    for (u64 p : range) {
      if (e1.is_excluded(p) || e2.is_excluded(p)) {
        local.push_back({p, true});
      } else if (counter.ap(e1, p) == 0 && counter.ap(e2, p) == 0) {
        local.push_back({p, false});
      }
    }
    return local;
  });
  return collect(hits);
}

ReductionType classify_product_surface(const EllipticCurveQ& e1, const EllipticCurveQ& e2, u64 p) {
  FrobeniusTraceCounter counter;
  return classify_product_surface(e1, e2, p, counter);
}

ReductionType classify_product_surface(const EllipticCurveQ& e1, const EllipticCurveQ& e2, u64 p,
                                       FrobeniusTraceCounter& counter) {
  // curves are always Hodge-Witt
  const FactorStatus factors[] = {{counter.ap(e1, p) != 0, true}, {counter.ap(e2, p) != 0, true}};
  return to_reduction_type(product_status(factors));
}

std::array<i64, 5> parse_weierstrass(const std::string& text) {
  std::array<i64, 5> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 5) fail(ErrorKind::Config, "expected 5 Weierstrass coefficients in '" + text + "'");
    Rational r = parse_rational(item);
    if (r.denominator() != 1) fail(ErrorKind::Config, "Weierstrass coefficients must be integers");
    out[i++] = r.numerator();
  }
  if (i != 5) fail(ErrorKind::Config, "expected 5 Weierstrass coefficients in '" + text + "'");
  return out;
}

}  // namespace redscope
