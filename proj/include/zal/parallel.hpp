#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace zal {

/// Worker count: ZAL_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n) across thread_count() workers. Each index is
/// visited exactly once; the first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Ordered map: out[i] = fn(i). The result does not depend on scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace zal
