// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace qms {

// Monotone tally of element comparisons. Every algorithm in this library
// routes its comparisons through a CountingComparator that shares one of
// these, so counts compose across pivot selection, partitioning and merging.
class ComparisonCounter {
 public:
  void add(std::uint64_t k = 1) noexcept { count_ += k; }
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  void reset() noexcept { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

// Strict-weak-order wrapper that bumps the shared counter once per call.
template <class Compare>
class CountingComparator {
 public:
  CountingComparator(Compare less, ComparisonCounter& counter)
      : less_(less), counter_(&counter) {}

  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    counter_->add();
    return less_(a, b);
  }

  [[nodiscard]] ComparisonCounter& counter() const noexcept { return *counter_; }

 private:
  Compare less_;
  ComparisonCounter* counter_;
};

template <class Compare>
CountingComparator<Compare> counted(Compare less, ComparisonCounter& counter) {
  return CountingComparator<Compare>(less, counter);
}

}  // namespace qms
