#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace dt4 {

// Order-preserving parallel map over an index range. Work is sharded into
// fixed blocks; results and exceptions surface in shard order, so the output
// does not depend on the worker count.
template <class Out>
std::vector<Out> parallel_map_indexed(std::size_t count, int workers,
                                      const std::function<Out(std::size_t)>& fn) {
  std::vector<Out> out(count);
  if (count == 0) return out;
  workers = std::max(1, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errs(count);
  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < count; ++i)
    if (errs[i]) std::rethrow_exception(errs[i]);
  return out;
}

}  // namespace dt4
