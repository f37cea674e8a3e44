#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace obstructor {

namespace detail {
inline std::atomic<unsigned>& worker_override() {
  static std::atomic<unsigned> value{0};
  return value;
}
}  // namespace detail

// Worker cap. OBSTRUCTOR_THREADS wins over the hardware count; an explicit
// set_worker_count() wins over both.
inline unsigned worker_count() {
  if (unsigned forced = detail::worker_override().load(); forced != 0) return forced;
  if (const char* env = std::getenv("OBSTRUCTOR_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// 0 restores the default lookup.
inline void set_worker_count(unsigned n) { detail::worker_override().store(n); }

// Runs body(begin, end) over contiguous chunks of [0, n). Chunk boundaries
// depend on the worker count, so callers must write results by index and
// reduce afterwards if they want worker-count independent output.
template <class Body>
void parallel_for_chunks(std::size_t n, Body&& body) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  parallel_for_chunks(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i);
  });
}

}  // namespace obstructor
