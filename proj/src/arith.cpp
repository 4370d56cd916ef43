#include "redscope/arith.hpp"

#include <charconv>

#include "redscope/errors.hpp"

namespace redscope {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Modulus: return "modulus";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::ExcludedPrime: return "excluded-prime";
    case ErrorKind::InvalidPolygon: return "invalid-polygon";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) fail(ErrorKind::Domain, "inverse of zero residue");
  return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

i64 parse_int(std::string_view s, const std::string& full) {
  i64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorKind::Config, "not an integer or rational: '" + full + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  i64 num = parse_int(s.substr(0, slash), text);
  i64 den = parse_int(s.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::Config, "zero denominator: '" + text + "'");
  return Rational(num, den);
}

}  // namespace redscope
