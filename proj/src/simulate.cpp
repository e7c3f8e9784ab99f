// SPDX-License-Identifier: Apache-2.0
#include "qms/harness/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qms/counter.hpp"
#include "qms/harness/input.hpp"
#include "qms/harness/prng.hpp"

namespace qms::harness {

namespace {

enum class DriverRankPolicy { ExactMedian, LowEdge };

struct WorstCaseHooks {
  ComparisonCounter oracle;
  Xoshiro256ss rng;
  SimMode mode;
  DriverRankPolicy driver_policy;

  WorstCaseHooks(std::uint64_t seed, SimMode m, DriverRankPolicy p)
      : rng(seed), mode(m), driver_policy(p) {}

  template <class It>
  std::optional<It> pivot_override(It first, It last, const PivotQuery& q) {
    std::size_t rank;
    if (q.kind == PivotQuery::Kind::MomStep) {
      // Feed the selection the larger continue side: at pivot rank p the
      // remaining window is p - 1 cells (target below) or n - p (above).
      const auto side = [&](std::size_t p) -> std::size_t {
        if (q.target_k == p) return 0;
        return q.target_k < p ? p - 1 : q.n - p;
      };
      rank = side(q.rank_lo) > side(q.rank_hi) ? q.rank_lo : q.rank_hi;
    } else if (driver_policy == DriverRankPolicy::ExactMedian) {
      rank = std::clamp((q.n + 1) / 2, q.rank_lo, q.rank_hi);
    } else {
      rank = q.rank_lo;
    }
    It target = first + static_cast<std::ptrdiff_t>(rank - 1);
    auto oracle_less = [this](std::uint64_t a, std::uint64_t b) {
      oracle.add();
      return a < b;
    };
    std::nth_element(first, target, last, oracle_less);
    return target;
  }

  template <class It>
  void before_merge_sort(It first, It last) {
    if (mode == SimMode::Comparisons) {
      shuffle_range(first, last, rng);
    }
  }

  template <class It>
  void before_merge(It first, It last) {
    if (mode != SimMode::Timing) return;
    const auto s = static_cast<std::uint64_t>(std::distance(first, last));
    if (s < 2) return;
    const auto pairs =
        static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(s))));
    for (std::uint64_t p = 0; p < pairs; ++p) {
      std::iter_swap(first + rng.below(s), first + rng.below(s));
    }
  }
};

}  // namespace

WorstCaseOutcome simulate_worst_case(Algorithm algo, std::size_t n,
                                     std::uint64_t seed, SimMode mode,
                                     const SortConfig& cfg) {
  DriverRankPolicy policy;
  switch (algo) {
    case Algorithm::Bmqms:
    case Algorithm::Mqms:
      policy = DriverRankPolicy::ExactMedian;
      break;
    case Algorithm::Umqms:
      policy = DriverRankPolicy::LowEdge;
      break;
    default:
      throw std::invalid_argument(
          "simulate_worst_case: only bmqms, mqms and umqms have a pivot-rank "
          "adversary");
  }

  auto v = gen_input(Distribution::RandomPerm, n, seed);
  WorstCaseHooks hooks(seed ^ 0xabcdef12345678ull, mode, policy);
  ComparisonCounter main_ctr;
  SortDiagnostics diag;
  qms::sort(v.begin(), v.end(), algo,
            qms::counted(std::less<std::uint64_t>{}, main_ctr), cfg, diag, hooks);

  WorstCaseOutcome out;
  out.n = n;
  out.comparisons = main_ctr.count();
  out.uncounted_oracle_comparisons = hooks.oracle.count();
  out.output_sorted = std::is_sorted(v.begin(), v.end());
  const double dn = static_cast<double>(n);
  out.coefficient =
      (static_cast<double>(out.comparisons) - dn * std::log2(dn)) / dn;
  return out;
}

MomSimOutcome simulate_mom_worst_case(std::size_t n, std::uint64_t seed,
                                      std::size_t k) {
  if (k == 0) k = (n + 1) / 2;
  auto v = gen_input(Distribution::RandomPerm, n, seed);
  const std::uint64_t expect = k - 1;  // a permutation of 0..n-1

  WorstCaseHooks hooks(seed ^ 0x5eed5eed5eedull, SimMode::Comparisons,
                       DriverRankPolicy::ExactMedian);
  ComparisonCounter main_ctr;
  auto pos = qms::mom_select(
      v.begin(), v.end(), k, qms::counted(std::less<std::uint64_t>{}, main_ctr),
      hooks);

  MomSimOutcome out;
  out.n = n;
  out.comparisons = main_ctr.count();
  out.uncounted_oracle_comparisons = hooks.oracle.count();
  out.correct = pos == v.begin() + (k - 1) && *pos == expect;
  return out;
}

}  // namespace qms::harness
