#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "izeta/error.hpp"

namespace izeta {

// Welford accumulator. Feed it in a fixed order to get bit-identical results.
class RunningStats {
 public:
  void push(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
  double stderr_of_mean() const noexcept {
    return count_ > 1 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
  }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(r) for r in [0, count) on up to `threads` workers (0 = hardware
// concurrency) and returns the results indexed by r. Failures are rethrown as
// ReplicaError for the lowest failing replica, so the error is also
// independent of scheduling.
template <class Body>
auto run_replicas(std::size_t count, unsigned threads, Body&& body) {
  using Result = decltype(body(std::size_t{0}));
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= count || failed.load()) return;
      try {
        results[r] = body(r);
      } catch (...) {
        errors[r] = std::current_exception();
        failed.store(true);
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t r = 0; r < count; ++r) {
    if (!errors[r]) continue;
    try {
      std::rethrow_exception(errors[r]);
    } catch (const std::exception& e) {
      throw ReplicaError("replica " + std::to_string(r) + ": " + e.what(), r);
    }
  }
  return results;
}

}  // namespace izeta
