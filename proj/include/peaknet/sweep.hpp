#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace peaknet {

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and returns
/// the results in index order, so the output never depends on scheduling.
/// The first exception thrown by any task is rethrown.
template <typename Fn>
auto parallel_map(std::size_t count, std::size_t threads, Fn&& fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> results(count);
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) results[i] = fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

inline std::size_t default_threads() {
  return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

}  // namespace peaknet
