// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <iterator>

#include "qms/hooks.hpp"
#include "qms/primitives.hpp"

namespace qms {

enum class EqualSide { Left, Right };

struct PartitionResult {
  std::size_t pivot_index;  // final pivot offset from the window start
  std::size_t left_size;
  std::size_t right_size;
  EqualSide equal_side;
};

// Partition [first, last) around *piv, comparing every other element once
// (n - 1 comparisons). equal_side picks where pivot-equal elements land.
template <class It, class Comp>
PartitionResult partition_around(It first, It last, It piv, Comp comp, EqualSide side) {
  std::iter_swap(first, piv);  // park the pivot at the front
  It lt = std::next(first);
  for (It i = lt; i != last; ++i) {
    const bool goes_left =
        side == EqualSide::Right ? comp(*i, *first) : !comp(*first, *i);
    if (goes_left) {
      std::iter_swap(i, lt);
      ++lt;
    }
  }
  std::iter_swap(first, std::prev(lt));
  const auto left = static_cast<std::size_t>(std::distance(first, std::prev(lt)));
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  return {left, left, n - left - 1, side};
}

// Partition [first, last) when the prefix [first, first + s) is already
// arranged as [<= pivot | pivot at rank rho | >= pivot] by a selection call.
// Only the n - s suffix elements are compared; the pivot plus the classified
// right part of the prefix are rotated past the suffix's left part with no
// comparisons. Pivot-equal suffix elements land right.
template <class It, class Comp>
PartitionResult partition_classified_prefix(It first, It last, std::size_t s,
                                            std::size_t rho, Comp comp) {
  It piv = first + (rho - 1);
  It suffix = first + s;
  It lt = suffix;  // [suffix, lt) collects suffix elements below the pivot
  for (It i = suffix; i != last; ++i) {
    if (comp(*i, *piv)) {
      std::iter_swap(i, lt);
      ++lt;
    }
  }
  It new_piv = std::rotate(piv, suffix, lt);
  const auto left = static_cast<std::size_t>(std::distance(first, new_piv));
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  return {left, left, n - left - 1, EqualSide::Right};
}

// Duplicate guard: split a zone known to be entirely >= *piv into
// [== pivot | > pivot], one comparison per zone element. Returns the end of
// the equal block. piv must sit outside the zone.
template <class It, class Comp>
It partition_value_left(It zone_first, It zone_last, It piv, Comp comp) {
  It lt = zone_first;
  for (It i = zone_first; i != zone_last; ++i) {
    if (!comp(*piv, *i)) {
      std::iter_swap(i, lt);
      ++lt;
    }
  }
  return lt;
}

// Rank to select within a sample of s medians when hunting global rank k in a
// window of n: steer toward the near edge when k is extreme, else take the
// sample median. Result is clamped to [1, s].
inline std::size_t adaptive_sample_rank(std::size_t n, std::size_t k, std::size_t s) {
  std::size_t r;
  if (9 * k <= 2 * n) {
    r = (k + 3) / 4;
  } else if (9 * (n - k + 1) <= 2 * n) {
    const std::size_t from_top = (n - k + 4) / 4;
    r = from_top >= s ? 1 : s + 1 - from_top;
  } else {
    r = (s + 1) / 2;
  }
  return std::clamp<std::size_t>(r, 1, s);
}

// Median-of-medians selection with ninther samples and adaptive sample
// ranks. Places the element of rank k (1-indexed) at first + k - 1 with an
// nth_element-style arrangement around it and returns that position. Worst
// case 20n + O(n^0.78) comparisons; windows of <= 30 are insertion-sorted.
template <class It, class Comp, class Hooks>
It mom_select(It first, It last, std::size_t k, Comp comp, Hooks& hooks) {
  while (true) {
    const auto n = static_cast<std::size_t>(std::distance(first, last));
    assert(k >= 1 && k <= n);
    if (n <= 30) {
      insertion_sort(first, last, comp);
      return first + (k - 1);
    }
    const std::size_t b = n / 9;
    for (std::size_t i = 0; i < b; ++i) {
      It nin = pseudomedian_of_9(first + 9 * i, 1, comp);
      std::iter_swap(first + i, nin);
    }
    const std::size_t r = adaptive_sample_rank(n, k, b);
    mom_select(first, first + b, r, comp, hooks);
    It piv = first + (r - 1);

    // Every ninther at or below the pivot ninther dominates 4 elements of its
    // block, so the pivot's window rank is confined to this interval.
    PivotQuery query;
    query.kind = PivotQuery::Kind::MomStep;
    query.n = n;
    query.sample_size = b;
    query.sample_rank = r;
    query.target_k = k;
    query.rank_lo = 4 * r;
    query.rank_hi = std::max(query.rank_lo, n - 4 * (b - r + 1) + 1);
    bool overridden = false;
    if (auto o = hooks.pivot_override(first, last, query)) {
      piv = *o;
      overridden = true;
    }

    const PartitionResult pr =
        overridden ? partition_around(first, last, piv, comp, EqualSide::Right)
                   : partition_classified_prefix(first, last, b, r, comp);
    const std::size_t left = pr.left_size;
    It piv_pos = first + pr.pivot_index;

    const std::size_t guard_min = 4 * r - 1;
    if (!overridden && left < guard_min) {
      // Duplicates deflated the left side below the sample guarantee: carve
      // the pivot-equal block out of the right zone and skip past it.
      It eq_end = partition_value_left(std::next(piv_pos), last, piv_pos, comp);
      const auto eq = static_cast<std::size_t>(std::distance(piv_pos, eq_end));
      if (k <= left) {
        last = piv_pos;
      } else if (k <= left + eq) {
        return first + (k - 1);  // inside the pivot-equal block
      } else {
        k -= left + eq;
        first = eq_end;
      }
      continue;
    }

    if (k == left + 1) return piv_pos;
    if (k <= left) {
      last = piv_pos;
    } else {
      k -= left + 1;
      first = std::next(piv_pos);
    }
  }
}

template <class It, class Comp>
It mom_select(It first, It last, std::size_t k, Comp comp) {
  NoHooks hooks;
  return mom_select(first, last, k, comp, hooks);
}

struct SampledPivotInfo {
  std::size_t sample_size;  // medians swapped to the window prefix
  std::size_t sample_rank;  // rank selected among them (its cell holds the pivot)
  std::size_t carry;        // elements each sample median dominates per side
};

// Pivot sampling for the fifteen-element pseudomedian variants: groups of 15
// consecutive elements, pseudomedian of each swapped to the prefix, then
// median-of-medians over the prefix. theta = num/den >= 1 scales the sample
// down to ~n/theta elements. Requires n >= 15 * num / den.
template <class It, class Comp, class Hooks>
SampledPivotInfo choose_pivot_sampled(It first, It last, std::size_t num,
                                      std::size_t den, Comp comp, Hooks& hooks) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  const std::size_t groups = n * den / (15 * num);
  assert(groups >= 1);
  for (std::size_t i = 0; i < groups; ++i) {
    It pm = pseudomedian_of_15(first + 15 * i, 1, comp);
    std::iter_swap(first + i, pm);
  }
  const std::size_t rho = (groups + 1) / 2;
  mom_select(first, first + groups, rho, comp, hooks);
  return {groups, rho, 6};
}

// Pivot sampling for the basic variant: medians of floor(n/3) consecutive
// triples swapped to the prefix, then median-of-medians over the prefix.
template <class It, class Comp, class Hooks>
SampledPivotInfo choose_pivot_mo3_sample(It first, It last, Comp comp, Hooks& hooks) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  const std::size_t s3 = n / 3;
  assert(s3 >= 1);
  for (std::size_t i = 0; i < s3; ++i) {
    It blk = first + 3 * i;
    It med = median_of_3(blk, blk + 1, blk + 2, comp);
    std::iter_swap(first + i, med);
  }
  const std::size_t rho = (s3 + 1) / 2;
  mom_select(first, first + s3, rho, comp, hooks);
  return {s3, rho, 2};
}

}  // namespace qms
