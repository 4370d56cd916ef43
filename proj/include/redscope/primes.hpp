#pragma once

#include <algorithm>
#include <span>
#include <thread>
#include <vector>

#include "redscope/arith.hpp"

namespace redscope {

/// Primes <= bound, ascending (segmented sieve of Eratosthenes).
std::vector<u64> primes_up_to(u64 bound);

/// Primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Splits `items` into `workers` contiguous ranges, runs `work(range)` on
/// each in its own thread and concatenates the per-range outputs in range
/// order, so the result never depends on the worker count. `work` must
/// return a std::vector.
template <typename T, typename Work>
auto parallel_ordered(std::span<const T> items, unsigned workers, Work work) {
  using Result = decltype(work(items));
  workers = std::max(1u, workers);
  const std::size_t n = items.size();
  if (workers == 1 || n < 2) return work(items);
  const std::size_t chunks = std::min<std::size_t>(workers, n);
  std::vector<Result> partial(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t lo = n * c / chunks;
      const std::size_t hi = n * (c + 1) / chunks;
      threads.emplace_back([&, c, lo, hi] { partial[c] = work(items.subspan(lo, hi - lo)); });
    }
  }
  Result out;
  for (auto& part : partial) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

}  // namespace redscope
