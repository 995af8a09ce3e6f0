#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace xxc {

/// Worker-pool width: hardware concurrency, capped by the FERMI_SEAS_THREADS
/// environment variable when set to a positive integer.
int worker_count();

/// Evaluates fn(0..n-1) on a worker pool; results land at their input index,
/// so output order is fixed by input order, not completion order. Each task
/// runs single-threaded, which keeps results bitwise reproducible.
template <class R>
std::vector<R> parallel_map(int n, const std::function<R(int)>& fn) {
  std::vector<R> out(static_cast<std::size_t>(n));
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          out[static_cast<std::size_t>(i)] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// --- run-configuration parsing -------------------------------------------

/// "0.5" | "0,1.1,1.3" | "lo:hi:count" (uniform grid, count >= 2).
std::vector<double> parse_value_list(const std::string& text);

/// "100" | "8,16,32" | "1:50" (inclusive integer range).
std::vector<int> parse_block_list(const std::string& text);

/// "MIN:COUNT:MAX" geometric grid of COUNT integers from MIN to MAX.
std::vector<int> parse_geometric_spec(const std::string& text);

}  // namespace xxc
