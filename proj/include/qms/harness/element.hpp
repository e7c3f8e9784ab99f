// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

namespace qms::harness {

// Benchmark element: a 64-bit key whose moves are tallied per thread. A swap
// through std::iter_swap costs three moves. Comparisons are counted by the
// comparator wrapper, not here.
struct CountingElement {
  std::uint64_t key = 0;

  static thread_local std::uint64_t moves;

  CountingElement() = default;
  explicit CountingElement(std::uint64_t k) : key(k) {}
  CountingElement(const CountingElement& other) : key(other.key) { ++moves; }
  CountingElement(CountingElement&& other) noexcept : key(other.key) { ++moves; }
  CountingElement& operator=(const CountingElement& other) {
    key = other.key;
    ++moves;
    return *this;
  }
  CountingElement& operator=(CountingElement&& other) noexcept {
    key = other.key;
    ++moves;
    return *this;
  }
};

struct CountingElementLess {
  bool operator()(const CountingElement& a, const CountingElement& b) const {
    return a.key < b.key;
  }
};

}  // namespace qms::harness
