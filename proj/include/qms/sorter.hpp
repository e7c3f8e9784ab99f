// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <iterator>

#include "qms/hooks.hpp"
#include "qms/merge.hpp"
#include "qms/primitives.hpp"
#include "qms/selection.hpp"

// QuickMergesort drivers. Each partition step sorts the larger side with
// mergesort, using the smaller side's cells as dummy buffer, and continues
// on the smaller side; the pivot is parked at the far edge so the buffer
// stays adjacent to the mergesort side. A duplicate guard re-partitions the
// right zone by pivot value whenever the left side falls below the sample
// guarantee, which can only happen through pivot-equal elements.

namespace qms {

enum class Algorithm { Bmqms, Mqms, Umqms, Hqms, Introsort };

struct Rational {
  std::size_t num = 1;
  std::size_t den = 1;
  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct SortConfig {
  Rational theta{11, 5};   // undersampling factor for uMQMS and escalations
  Rational delta{1, 16};   // pivot quality window for the hybrid
  std::size_t base_case_cutoff = 42;  // insertion sort below; 1 in counting mode
};

struct SortDiagnostics {
  std::size_t max_depth = 0;
  std::size_t guard_repartitions = 0;
  std::size_t mo3_steps = 0;
  std::size_t escalations = 0;
  std::size_t stopper_calls = 0;
};

namespace detail {

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

template <class It, class Comp, class Hooks>
void sort_sampled_driver(It first, It last, Comp comp, const SortConfig& cfg,
                         SortDiagnostics& diag, Hooks& hooks, bool mo3_sample,
                         std::size_t depth) {
  const std::size_t min_n = mo3_sample ? 9 : std::max<std::size_t>(ceil_div(15 * cfg.theta.num, cfg.theta.den), 15);
  const std::size_t base_limit = std::max(cfg.base_case_cutoff, min_n - 1);
  while (true) {
    diag.max_depth = std::max(diag.max_depth, depth);
    const auto n = static_cast<std::size_t>(std::distance(first, last));
    if (n <= base_limit) {
      insertion_sort(first, last, comp);
      return;
    }

    const SampledPivotInfo sp =
        mo3_sample ? choose_pivot_mo3_sample(first, last, comp, hooks)
                   : choose_pivot_sampled(first, last, cfg.theta.num, cfg.theta.den,
                                          comp, hooks);
    It piv = first + (sp.sample_rank - 1);
    PivotQuery query;
    query.kind = PivotQuery::Kind::DriverPivot;
    query.n = n;
    query.sample_size = sp.sample_size;
    query.sample_rank = sp.sample_rank;
    query.rank_lo = sp.carry * sp.sample_rank;
    query.rank_hi = std::max(query.rank_lo,
                             n - sp.carry * (sp.sample_size - sp.sample_rank + 1) + 1);
    bool overridden = false;
    if (auto o = hooks.pivot_override(first, last, query)) {
      piv = *o;
      overridden = true;
    }

    const PartitionResult pr =
        overridden
            ? partition_around(first, last, piv, comp, EqualSide::Right)
            : partition_classified_prefix(first, last, sp.sample_size, sp.sample_rank, comp);
    It piv_pos = first + pr.pivot_index;
    const std::size_t left = pr.left_size;
    const std::size_t right = pr.right_size;

    const std::size_t guard_min = sp.carry * sp.sample_rank - 1;
    if (!overridden && left < guard_min) {
      ++diag.guard_repartitions;
      It eq_end = partition_value_left(std::next(piv_pos), last, piv_pos, comp);
      const auto gt = static_cast<std::size_t>(std::distance(eq_end, last));
      if (left <= gt) {
        sort_sampled_driver(first, piv_pos, comp, cfg, diag, hooks, mo3_sample, depth + 1);
        first = eq_end;
      } else {
        sort_sampled_driver(eq_end, last, comp, cfg, diag, hooks, mo3_sample, depth + 1);
        last = piv_pos;
      }
      ++depth;
      continue;
    }

    if (left >= right) {
      // Mergesort the left side; the right zone's cells are the buffer and
      // the pivot parks at the far right edge.
      std::iter_swap(piv_pos, std::prev(last));
      hooks.before_merge_sort(first, first + left);
      imbalanced_mergesort(first, first + left, right, BufferSide::Back,
                           cfg.base_case_cutoff, comp, hooks);
      std::iter_swap(first + left, std::prev(last));
      first += left + 1;
    } else {
      // Mergesort the right side; the left zone's cells are the buffer and
      // the pivot parks at the front edge.
      std::iter_swap(piv_pos, first);
      hooks.before_merge_sort(std::next(piv_pos), last);
      imbalanced_mergesort(std::next(piv_pos), last, left, BufferSide::Front,
                           cfg.base_case_cutoff, comp, hooks);
      std::iter_swap(first, piv_pos);
      last = piv_pos;
    }
    ++depth;
  }
}

template <class It, class Comp, class Hooks>
void sort_hqms_impl(It first, It last, Comp comp, const SortConfig& cfg,
                    SortDiagnostics& diag, Hooks& hooks, std::size_t depth,
                    bool escalate_next) {
  const std::size_t sample_min =
      std::max<std::size_t>(ceil_div(15 * cfg.theta.num, cfg.theta.den), 15);
  const std::size_t base_limit = std::max<std::size_t>(cfg.base_case_cutoff, 2);
  while (true) {
    diag.max_depth = std::max(diag.max_depth, depth);
    const auto n = static_cast<std::size_t>(std::distance(first, last));
    if (n <= base_limit) {
      insertion_sort(first, last, comp);
      return;
    }

    PartitionResult pr{};
    std::size_t guard_min = 0;
    bool escalated = false;
    if (escalate_next && n > sample_min) {
      escalated = true;
      ++diag.escalations;
      const SampledPivotInfo sp =
          choose_pivot_sampled(first, last, cfg.theta.num, cfg.theta.den, comp, hooks);
      guard_min = sp.carry * sp.sample_rank - 1;
      pr = partition_classified_prefix(first, last, sp.sample_size, sp.sample_rank, comp);
    } else {
      ++diag.mo3_steps;
      It mid = first + n / 2;
      It piv = median_of_3(first, mid, std::prev(last), comp);
      pr = partition_around(first, last, piv, comp, EqualSide::Right);
    }
    It piv_pos = first + pr.pivot_index;
    const std::size_t left = pr.left_size;
    const std::size_t right = pr.right_size;

    if (escalated && left < guard_min) {
      ++diag.guard_repartitions;
      It eq_end = partition_value_left(std::next(piv_pos), last, piv_pos, comp);
      const auto gt = static_cast<std::size_t>(std::distance(eq_end, last));
      if (left <= gt) {
        sort_hqms_impl(first, piv_pos, comp, cfg, diag, hooks, depth + 1, false);
        first = eq_end;
      } else {
        sort_hqms_impl(eq_end, last, comp, cfg, diag, hooks, depth + 1, false);
        last = piv_pos;
      }
      escalate_next = false;
      ++depth;
      continue;
    }

    // Pivot quality decides whether the next step escalates to the sampled
    // pivot; after an escalated step we always revert to median-of-3.
    const std::size_t pos = pr.pivot_index;
    escalate_next =
        !escalated && (pos * cfg.delta.den < n * cfg.delta.num ||
                       (n - 1 - pos) * cfg.delta.den < n * cfg.delta.num);

    const std::size_t small = std::min(left, right);
    const std::size_t large = std::max(left, right);
    if (small == 0) {
      // Nothing to buffer with; just continue on the nonempty side.
      if (left == 0) {
        first = std::next(piv_pos);
      } else {
        last = piv_pos;
      }
      ++depth;
      continue;
    }
    if (large <= 4 * small) {
      // Balanced enough: mergesort the larger side with the smaller side's
      // cells as adjacent buffer, then continue on the smaller side.
      if (left >= right) {
        std::iter_swap(piv_pos, std::prev(last));
        hooks.before_merge_sort(first, first + left);
        imbalanced_mergesort(first, first + left, right, BufferSide::Back,
                             cfg.base_case_cutoff, comp, hooks);
        std::iter_swap(first + left, std::prev(last));
        first += left + 1;
      } else {
        std::iter_swap(piv_pos, first);
        hooks.before_merge_sort(std::next(piv_pos), last);
        imbalanced_mergesort(std::next(piv_pos), last, left, BufferSide::Front,
                             cfg.base_case_cutoff, comp, hooks);
        std::iter_swap(first, piv_pos);
        last = piv_pos;
      }
    } else {
      // Lopsided split: mergesort the smaller side using spare cells inside
      // the larger side as buffer, then continue on the larger side.
      if (left < right) {
        hooks.before_merge_sort(first, piv_pos);
        mergesort_with_buffer(first, piv_pos, std::next(piv_pos),
                              cfg.base_case_cutoff, comp, hooks);
        first = std::next(piv_pos);
      } else {
        hooks.before_merge_sort(std::next(piv_pos), last);
        mergesort_with_buffer(std::next(piv_pos), last, first, cfg.base_case_cutoff,
                              comp, hooks);
        last = piv_pos;
      }
    }
    ++depth;
  }
}

template <class It, class Comp, class Hooks>
void introsort_impl(It first, It last, Comp comp, const SortConfig& cfg,
                    SortDiagnostics& diag, Hooks& hooks, std::size_t depth_budget,
                    unsigned bad_streak, std::size_t depth) {
  const std::size_t base_limit = std::max<std::size_t>(cfg.base_case_cutoff, 2);
  while (true) {
    diag.max_depth = std::max(diag.max_depth, depth);
    const auto n = static_cast<std::size_t>(std::distance(first, last));
    if (n <= base_limit) {
      insertion_sort(first, last, comp);
      return;
    }
    if (depth_budget == 0 || bad_streak >= 4) {
      ++diag.stopper_calls;
      sort_sampled_driver(first, last, comp, cfg, diag, hooks, false, depth);
      return;
    }

    It mid = first + n / 2;
    It piv = median_of_3(first, mid, std::prev(last), comp);
    const PartitionResult pr = partition_around(first, last, piv, comp, EqualSide::Right);
    It piv_pos = first + pr.pivot_index;
    const std::size_t left = pr.left_size;
    const std::size_t right = pr.right_size;
    --depth_budget;
    ++depth;

    if (left == 0) {
      // Pivot was a minimum: carve out its equal block and continue right.
      ++diag.guard_repartitions;
      It eq_end = partition_value_left(std::next(piv_pos), last, piv_pos, comp);
      first = eq_end;
      ++bad_streak;
      continue;
    }

    bad_streak = std::min(left, right) * 64 < n ? bad_streak + 1 : 0;
    if (left <= right) {
      introsort_impl(first, piv_pos, comp, cfg, diag, hooks, depth_budget, bad_streak,
                     depth);
      first = std::next(piv_pos);
    } else {
      introsort_impl(std::next(piv_pos), last, comp, cfg, diag, hooks, depth_budget,
                     bad_streak, depth);
      last = piv_pos;
    }
  }
}

inline std::size_t floor_log2(std::size_t n) {
  std::size_t r = 0;
  while (n > 1) {
    n >>= 1;
    ++r;
  }
  return r;
}

}  // namespace detail

template <class It, class Comp, class Hooks>
void sort_bmqms(It first, It last, Comp comp, const SortConfig& cfg,
                SortDiagnostics& diag, Hooks& hooks) {
  detail::sort_sampled_driver(first, last, comp, cfg, diag, hooks, true, 0);
}

template <class It, class Comp, class Hooks>
void sort_mqms(It first, It last, Comp comp, const SortConfig& cfg,
               SortDiagnostics& diag, Hooks& hooks) {
  SortConfig unit = cfg;
  unit.theta = Rational{1, 1};
  detail::sort_sampled_driver(first, last, comp, unit, diag, hooks, false, 0);
}

template <class It, class Comp, class Hooks>
void sort_umqms(It first, It last, Comp comp, const SortConfig& cfg,
                SortDiagnostics& diag, Hooks& hooks) {
  assert(cfg.theta.num >= cfg.theta.den);  // theta >= 1
  detail::sort_sampled_driver(first, last, comp, cfg, diag, hooks, false, 0);
}

template <class It, class Comp, class Hooks>
void sort_hqms(It first, It last, Comp comp, const SortConfig& cfg,
               SortDiagnostics& diag, Hooks& hooks) {
  detail::sort_hqms_impl(first, last, comp, cfg, diag, hooks, 0, false);
}

template <class It, class Comp, class Hooks>
void introsort_with_mqms(It first, It last, Comp comp, const SortConfig& cfg,
                         SortDiagnostics& diag, Hooks& hooks) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  if (n <= 1) return;
  detail::introsort_impl(first, last, comp, cfg, diag, hooks,
                         2 * detail::floor_log2(n), 0, 0);
}

template <class It, class Comp, class Hooks>
void sort(It first, It last, Algorithm algo, Comp comp, const SortConfig& cfg,
          SortDiagnostics& diag, Hooks& hooks) {
  switch (algo) {
    case Algorithm::Bmqms:
      sort_bmqms(first, last, comp, cfg, diag, hooks);
      break;
    case Algorithm::Mqms:
      sort_mqms(first, last, comp, cfg, diag, hooks);
      break;
    case Algorithm::Umqms:
      sort_umqms(first, last, comp, cfg, diag, hooks);
      break;
    case Algorithm::Hqms:
      sort_hqms(first, last, comp, cfg, diag, hooks);
      break;
    case Algorithm::Introsort:
      introsort_with_mqms(first, last, comp, cfg, diag, hooks);
      break;
  }
}

// Convenience overloads without hook or diagnostics plumbing.
template <class It, class Comp = std::less<>>
void sort(It first, It last, Algorithm algo, Comp comp = {}, SortConfig cfg = {},
          SortDiagnostics* diag = nullptr) {
  NoHooks hooks;
  SortDiagnostics local{};
  sort(first, last, algo, comp, cfg, diag ? *diag : local, hooks);
}

template <class It, class Comp = std::less<>>
void sort_bmqms(It first, It last, Comp comp = {}, SortConfig cfg = {},
                SortDiagnostics* diag = nullptr) {
  sort(first, last, Algorithm::Bmqms, comp, cfg, diag);
}

template <class It, class Comp = std::less<>>
void sort_mqms(It first, It last, Comp comp = {}, SortConfig cfg = {},
               SortDiagnostics* diag = nullptr) {
  sort(first, last, Algorithm::Mqms, comp, cfg, diag);
}

template <class It, class Comp = std::less<>>
void sort_umqms(It first, It last, Comp comp = {}, SortConfig cfg = {},
                SortDiagnostics* diag = nullptr) {
  sort(first, last, Algorithm::Umqms, comp, cfg, diag);
}

template <class It, class Comp = std::less<>>
void sort_hqms(It first, It last, Comp comp = {}, SortConfig cfg = {},
               SortDiagnostics* diag = nullptr) {
  sort(first, last, Algorithm::Hqms, comp, cfg, diag);
}

template <class It, class Comp = std::less<>>
void introsort_with_mqms(It first, It last, Comp comp = {}, SortConfig cfg = {},
                         SortDiagnostics* diag = nullptr) {
  sort(first, last, Algorithm::Introsort, comp, cfg, diag);
}

}  // namespace qms
