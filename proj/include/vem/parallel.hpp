#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace vem {

/// Worker cap for per-cell loops: VEM_THREADS env var if set, otherwise
/// the hardware concurrency. Results must be written to per-index slots
/// and reduced in index order so thread count never changes the output.
inline int worker_count() {
  if (const char* env = std::getenv("VEM_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

template <typename F>
void parallel_for(std::size_t count, F&& body) {
  const int threads = worker_count();
  if (threads <= 1 || count < 256) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace vem
