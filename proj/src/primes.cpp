#include "redscope/primes.hpp"

#include <cmath>

namespace redscope {

namespace {

std::vector<u64> small_primes(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);
  const std::vector<u64> base = small_primes(isqrt(hi));
  constexpr u64 kSegment = 1 << 18;
  std::vector<char> composite;
  for (u64 start = lo; start <= hi; start += kSegment) {
    const u64 end = std::min(hi, start + kSegment - 1);
    composite.assign(end - start + 1, 0);
    for (u64 q : base) {
      if (q * q > end) break;
      u64 first = std::max(q * q, (start + q - 1) / q * q);
      for (u64 j = first; j <= end; j += q) composite[j - start] = 1;
    }
    for (u64 v = start; v <= end; ++v) {
      if (!composite[v - start]) out.push_back(v);
    }
    if (end == hi) break;
  }
  return out;
}

std::vector<u64> primes_up_to(u64 bound) { return primes_in_range(2, bound); }

}  // namespace redscope
