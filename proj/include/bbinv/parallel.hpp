#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bbinv {

/// Thread count from BBINV_THREADS, 1 when unset or malformed.
inline int default_threads() {
  const char* env = std::getenv("BBINV_THREADS");
  if (env == nullptr) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (...) {
    return 1;
  }
}

/// Calls fn(task) for task in [0, tasks) on up to `threads` workers. Tasks
/// are assigned round-robin; callers write results into per-task slots and
/// merge them in task order afterwards, so the outcome never depends on
/// scheduling.
template <typename Fn>
void parallel_tasks(int tasks, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(1, tasks));
  if (threads == 1) {
    for (int t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int worker = 0; worker < threads; ++worker) {
    pool.emplace_back([&, worker] {
      for (int t = worker; t < tasks; t += threads) fn(t);
    });
  }
}

}  // namespace bbinv
