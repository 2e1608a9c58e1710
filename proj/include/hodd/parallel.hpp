#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace hodd {

// Worker count: set_thread_count() if called with n > 0, else HODD_THREADS,
// else the hardware concurrency.
int thread_count();
void set_thread_count(int n);

namespace detail {
// Runs body(i) for i in [0, n). Nested calls run sequentially on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);
}  // namespace detail

// Element i of the result is fn(i), independent of the worker count. If
// several calls throw, the exception from the lowest index is rethrown.
template <class F>
auto parallel_map(std::size_t n, F&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  detail::parallel_for(n, [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Evaluates fn(i) in consecutive chunks of `chunk` indices and stops after
// the first chunk containing an element with stop(result) true. The chunk
// size is fixed, so the evaluated prefix does not depend on the worker count.
template <class F, class Stop>
auto chunked_scan(std::size_t n, std::size_t chunk, F&& fn, Stop&& stop)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t len = std::min(chunk, n - begin);
    auto part = parallel_map(len, [&](std::size_t i) { return fn(begin + i); });
    bool hit = false;
    for (auto& r : part) {
      hit = hit || stop(r);
      out.push_back(std::move(r));
    }
    if (hit) break;
  }
  return out;
}

}  // namespace hodd
