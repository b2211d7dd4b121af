#ifndef RAMSEARCH_WORKER_POOL_HPP
#define RAMSEARCH_WORKER_POOL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ramsearch {

/// requested > 0 wins; otherwise the RAMSEARCH_WORKERS environment
/// variable; otherwise hardware concurrency.
inline int resolve_worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RAMSEARCH_WORKERS")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs task(0..count-1), pulled from a shared counter by `workers`
/// threads.  task must be safe to call concurrently for distinct indices.
inline void run_tasks(int workers, int count, const std::function<void(int)>& task) {
  if (count <= 0) return;
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  auto drain = [&] {
    for (;;) {
      int index = next.fetch_add(1);
      if (index >= count) break;
      task(index);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) threads.emplace_back(drain);
  for (auto& t : threads) t.join();
}

}  // namespace ramsearch

#endif
