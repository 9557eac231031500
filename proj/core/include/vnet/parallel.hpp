#pragma once

#include <cstddef>
#include <functional>

namespace vnet {

/// Runs fn(0), ..., fn(tasks - 1) on up to `threads` workers. Tasks must
/// write only to their own slots; callers reduce the slots in index order,
/// which keeps results independent of the thread count. The first exception
/// (by task index) is rethrown after all workers join.
void parallel_for(std::size_t tasks, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Neumaier-compensated accumulator in extended precision.
class CompensatedSum {
 public:
  void add(long double x) noexcept {
    const long double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const noexcept { return sum_ + comp_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

}  // namespace vnet
