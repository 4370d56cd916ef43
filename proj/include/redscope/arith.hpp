#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace redscope {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Exact rational with canonical lowest terms and positive denominator.
using Rational = boost::rational<i64>;

/// Moduli must stay below this so every product fits in 128 bits.
inline constexpr u64 kMaxModulus = u64{1} << 62;

inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow_mod(u64 base, u64 exp, u64 p);

/// Inverse of a nonzero residue modulo a prime.
u64 inv_mod(u64 a, u64 p);

/// Reduces a signed integer into [0, p).
inline u64 reduce_signed(i64 v, u64 p) {
  if (v >= 0) return static_cast<u64>(v) % p;
  // -(v+1) avoids overflow on INT64_MIN
  u64 r = (static_cast<u64>(-(v + 1)) % p + 1) % p;
  return r == 0 ? 0 : p - r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

}  // namespace redscope
