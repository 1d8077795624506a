#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace bcube {

// Worker count: hardware concurrency, capped by BIASEDCUBE_THREADS when set.
std::size_t worker_count();

// Calls body(i) for i in [0, count) across workers. Each index is visited exactly once;
// callers write into slot i of a preallocated vector so the merge order never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& f) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace bcube
