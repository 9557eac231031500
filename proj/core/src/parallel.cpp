#include "vnet/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace vnet {

void parallel_for(std::size_t tasks, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (tasks == 0) return;
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, tasks);
  std::vector<std::exception_ptr> errors(tasks);
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks; ++t) {
      try {
        fn(t);
      } catch (...) {
        errors[t] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks && !failed; t = next++) {
          try {
            fn(t);
          } catch (...) {
            errors[t] = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace vnet
