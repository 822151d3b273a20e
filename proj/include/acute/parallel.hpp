#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace acute {

/// Worker cap: ACUTE_SPHERE_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("ACUTE_SPHERE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs job(i) for i in [0, n) on up to thread_budget() threads and joins them
/// all before returning. The first exception thrown by a job is rethrown.
template <class Job>
void parallel_for(int n, Job job) {
  const unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(std::max(n, 1)));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = next++; i < n && !failed; i = next++) {
        try {
          job(i);
        } catch (...) {
          errors[w] = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// splitmix64 step, used to derive independent per-shard seeds.
inline unsigned long long mix_seed(unsigned long long x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace acute
