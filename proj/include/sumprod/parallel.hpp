#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace sumprod {

/// Applies `f` to every item on up to `threads` workers and returns the
/// results in input order, so the output never depends on scheduling. The
/// first exception thrown by any call is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned threads, F&& f) {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<R> out(items.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, items.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= items.size()) return;
      try {
        out[i] = f(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace sumprod
