#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "fdisc/core.hpp"

namespace fdisc {

/// Worker cap for the embarrassingly parallel sweeps: FDISC_THREADS when set
/// to a positive integer, otherwise the hardware concurrency.
inline unsigned max_threads() {
  if (const char* env = std::getenv("FDISC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count). fn must write only to the slot it owns, so
/// the merged result is identical no matter how many workers run.
template <typename Fn>
void parallel_for(Index count, const Fn& fn) {
  const long long cap = std::min<long long>(max_threads(), count);
  if (cap <= 1) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(cap));
  for (long long t = 0; t < cap; ++t) {
    pool.emplace_back([&] {
      for (Index i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& worker : pool) worker.join();
}

}  // namespace fdisc
