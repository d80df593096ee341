#ifndef KHR_PARALLEL_HPP_
#define KHR_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace khr {

  // Evaluates f(0), ..., f(n - 1) on up to `threads` workers and returns the
  // results in index order. The first exception thrown by any task is
  // rethrown after all workers stop.
  template <typename F>
  auto parallel_map(std::size_t n, std::size_t threads, F&& f) {
    using T = decltype(f(std::size_t{}));
    std::vector<T> out(n);
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = f(i);
      }
      return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (auto i = next++; i < n; i = next++) {
          try {
            out[i] = f(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            next = n;
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
    return out;
  }

  inline std::size_t default_threads() {
    return std::max(1U, std::thread::hardware_concurrency());
  }

}  // namespace khr

#endif  // KHR_PARALLEL_HPP_
