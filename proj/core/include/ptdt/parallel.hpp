#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ptdt {

// Worker count: PTDT_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Exceptions are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Ordered map over [0, n); result i is body(i).
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& body) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

}  // namespace ptdt
