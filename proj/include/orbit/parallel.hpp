#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace orbit {

/// Worker count: ORBIT_VERDICT_THREADS when set (an integer >= 1, otherwise
/// std::invalid_argument), else the hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Work is
/// handed out by index; callers write into slot i, so output order never
/// depends on scheduling. The exception of the lowest failing index is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// parallel_for that collects body(i) into a vector in index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, F&& body) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

}  // namespace orbit
