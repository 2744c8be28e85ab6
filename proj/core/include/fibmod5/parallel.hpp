#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "fibmod5/bigint_seq.hpp"

namespace fibmod5 {

/// Inclusive integer interval [lo, hi].
struct IntRange {
  Index lo = 0;
  Index hi = 0;

  bool empty() const { return hi < lo; }
  Index size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(Index v) const { return v >= lo && v <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Runs fn(0), ..., fn(count - 1) on up to `workers` threads. Work is handed
/// out one index at a time; the first exception thrown is rethrown here.
inline void parallel_for(Index count, unsigned workers, const std::function<void(Index)>& fn) {
  if (count <= 0) return;
  const auto threads = static_cast<Index>(std::max(1u, workers));
  if (threads == 1 || count == 1) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (Index i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (Index t = 0; t < std::min(threads, count); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fibmod5
