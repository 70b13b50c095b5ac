#pragma once

#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <span>

namespace qwalk {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_total(std::span<const double> values);

// Worker count: hardware concurrency, capped by the QWALK_THREADS
// environment variable when it holds a positive integer.
unsigned thread_count();

// Calls body(i) for every i in [0, count). Indices are dealt round-robin to
// workers; callers write per-index results so the outcome does not depend on
// the schedule. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Sum of term(i) over [0, count): each index is reduced independently and the
// partials are combined in index order, so the result is identical for any
// thread count.
double parallel_sum(std::size_t count, const std::function<double(std::size_t)>& term);

}  // namespace qwalk
