#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace curvelab {

/// Worker cap: CURVELAB_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("CURVELAB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Calls body(i) for i in [0, n). Each index is handled by exactly one worker;
/// callers write results into pre-sized slots, so output is independent of
/// the thread count. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, int workers = worker_count()) {
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (std::size_t k = 0; k < w; ++k) {
      pool.emplace_back([&, k] {
        try {
          for (std::size_t i = k; i < n; i += w) body(i);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace curvelab
