#ifndef IRRBOOL_PARALLEL_HPP
#define IRRBOOL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace irrbool {

// IRRBOOL_WORKERS if set to a positive integer, else the hardware count.
inline int worker_count() {
  if (const char* env = std::getenv("IRRBOOL_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(shard) for shard in [0, shards) across worker_count() threads.
// Shards are handed out dynamically; callers keep per-shard results and
// merge them in shard order, so output does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t shards, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()), shards);
  if (workers <= 1) {
    for (std::size_t s = 0; s < shards; ++s) body(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t s = next.fetch_add(1);
        if (s >= shards) return;
        try {
          body(s);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(shards);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace irrbool

#endif  // IRRBOOL_PARALLEL_HPP
