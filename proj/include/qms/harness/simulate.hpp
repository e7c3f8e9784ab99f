// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

#include "qms/sorter.hpp"

namespace qms::harness {

// Adversarial worst-case driver. Every pivot the library proposes is replaced
// by the worst rank still feasible under its sample guarantee; the
// replacement is positioned by an uncounted selection oracle and the
// partition runs fully counted. Comparison mode additionally shuffles each
// mergesort input (uncounted) to strip any leftover presortedness; timing
// mode only perturbs ceil(sqrt(s)) element pairs before every merge, which
// models a branch-miss-heavy run without dominating the wall clock.
enum class SimMode { Comparisons, Timing };

struct WorstCaseOutcome {
  std::size_t n = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t uncounted_oracle_comparisons = 0;
  bool output_sorted = false;
  double coefficient = 0.0;  // (comparisons - n lg n) / n
};

// Supported for the sampled variants (Bmqms, Mqms, Umqms); throws
// std::invalid_argument otherwise.
WorstCaseOutcome simulate_worst_case(Algorithm algo, std::size_t n,
                                     std::uint64_t seed, SimMode mode,
                                     const SortConfig& cfg);

struct MomSimOutcome {
  std::size_t n = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t uncounted_oracle_comparisons = 0;
  bool correct = false;
};

// Adversarial median-of-medians selection of rank k (default: median).
MomSimOutcome simulate_mom_worst_case(std::size_t n, std::uint64_t seed,
                                      std::size_t k = 0);

}  // namespace qms::harness
