#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace slowspin::cli {

/// Evaluates fn(i) for i in [0, n) on a few threads; results keep index order.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(n);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace slowspin::cli
