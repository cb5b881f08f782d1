#pragma once

// Minimal fork-join reduction over an index range.  All reductions in this
// library are associative and exact, so results do not depend on the worker
// count or the chunking.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace tiered {

inline int hardware_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Folds body(i) for i in [0, count) with `combine`, splitting the range into
// contiguous chunks across `threads` workers.
template <class R, class Body, class Combine>
R parallel_reduce(std::size_t count, Body body, Combine combine, int threads) {
  if (threads < 1) threads = 1;
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  if (threads == 1) {
    R acc{};
    for (std::size_t i = 0; i < count; ++i) acc = combine(std::move(acc), body(i));
    return acc;
  }

  std::vector<R> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  std::size_t chunk = (count + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    workers.emplace_back([&, lo, hi, w]() {
      R acc{};
      for (std::size_t i = lo; i < hi; ++i) acc = combine(std::move(acc), body(i));
      partial[w] = std::move(acc);
    });
  }
  for (auto& t : workers) t.join();

  R acc{};
  for (auto& p : partial) acc = combine(std::move(acc), p);
  return acc;
}

}  // namespace tiered
