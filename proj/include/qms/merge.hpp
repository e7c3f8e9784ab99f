// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <iterator>

#include "qms/hooks.hpp"
#include "qms/primitives.hpp"

// Buffer-based merging and mergesort. Every transport into or out of buffer
// cells is a swap, so the buffer's multiset is conserved mechanically; the
// buffer contents end up permuted ("dummy" elements). Ties always resolve in
// favor of the left run. A merge of total length s costs at most s - 1
// comparisons.

namespace qms {

enum class BufferSide { Front, Back };

struct MergeLayout {
  std::size_t buffer_size;  // t
  std::size_t left_size;    // l
  std::size_t right_size;   // r
  BufferSide side = BufferSide::Front;
};

namespace detail {

template <class It>
void swap_blocks(It first, It last, It dest) {
  for (; first != last; ++first, ++dest) std::iter_swap(first, dest);
}

// Merge two sorted runs into cells starting at out, one swap per element.
// The caller guarantees writes never land on unconsumed input cells (the run
// layouts used below all satisfy this).
template <class It, class Comp>
It forward_swap_merge(It lf, It ll, It rf, It rl, It out, Comp comp) {
  while (lf != ll && rf != rl) {
    if (comp(*rf, *lf)) {
      std::iter_swap(out, rf);
      ++rf;
    } else {
      std::iter_swap(out, lf);
      ++lf;
    }
    ++out;
  }
  for (; lf != ll; ++lf, ++out) std::iter_swap(out, lf);
  for (; rf != rl; ++rf, ++out) {
    if (out != rf) std::iter_swap(out, rf);
  }
  return out;
}

// Mirror of the above writing downward from out_last; ties take the right
// run so that equal elements keep left-run-first order.
template <class It, class Comp>
void backward_swap_merge(It lf, It ll, It rf, It rl, It out_last, Comp comp) {
  while (lf != ll && rf != rl) {
    --out_last;
    if (comp(*std::prev(rl), *std::prev(ll))) {
      --ll;
      std::iter_swap(out_last, ll);
    } else {
      --rl;
      std::iter_swap(out_last, rl);
    }
  }
  while (ll != lf) {
    --out_last;
    --ll;
    if (out_last != ll) std::iter_swap(out_last, ll);
  }
  while (rl != rf) {
    --out_last;
    --rl;
    if (out_last != rl) std::iter_swap(out_last, rl);
  }
}

template <class It, class Comp, class Hooks>
void msort_in_place(It first, It last, It buf, std::size_t cutoff, Comp comp,
                    Hooks& hooks);

// Sort [first, last) while transporting the result into the cells at dest
// (disjoint from the source); the displaced dest contents end up in the
// source cells.
template <class It, class Comp, class Hooks>
void msort_move(It first, It last, It dest, std::size_t cutoff, Comp comp,
                Hooks& hooks) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  if (n == 0) return;
  if (n == 1) {
    std::iter_swap(dest, first);
    return;
  }
  if (n <= cutoff) {
    insertion_sort(first, last, comp);
    swap_blocks(first, last, dest);
    return;
  }
  It mid = first + (n + 1) / 2;
  msort_in_place(first, mid, dest, cutoff, comp, hooks);
  msort_in_place(mid, last, dest, cutoff, comp, hooks);
  hooks.before_merge(first, last);
  forward_swap_merge(first, mid, mid, last, dest, comp);
}

// Classic half-buffer mergesort: sorts [first, last) in place using
// ceil(n/2) swap cells at [buf, ...), disjoint from the range but otherwise
// anywhere. Exactly the balanced worst case n ceil(lg n) - 2^ceil(lg n) + 1
// comparisons when cutoff <= 1.
template <class It, class Comp, class Hooks>
void msort_in_place(It first, It last, It buf, std::size_t cutoff, Comp comp,
                    Hooks& hooks) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  if (n <= 1) return;
  if (n <= cutoff) {
    insertion_sort(first, last, comp);
    return;
  }
  It mid = first + (n + 1) / 2;  // left half one longer for odd n
  msort_move(mid, last, buf, cutoff, comp, hooks);
  It moved_last = buf + static_cast<std::ptrdiff_t>(n / 2);
  msort_in_place(first, mid, mid, cutoff, comp, hooks);
  hooks.before_merge(first, last);
  backward_swap_merge(first, mid, buf, moved_last, last, comp);
}

// Two-phase gap merge, front form: layout [gap t | L | R] with both runs
// sorted and r <= 2t. Phase 1 fills the gap from the left until the write
// head meets the left run (exactly t elements taken from R on that path);
// phase 2 merges the leftovers backward into the freed middle. The merged
// run lands at [first, first + l + r), i.e. shifted left by t, and the
// buffer elements land in the last t cells.
template <class It, class Comp>
void gap_merge_front(It first, It lf, It rf, It last, Comp comp) {
  It out = first, i = lf, j = rf;
  while (out != i && (i != rf || j != last)) {
    const bool from_right = (i == rf) || (j != last && comp(*j, *i));
    if (from_right) {
      std::iter_swap(out, j);
      ++j;
    } else {
      std::iter_swap(out, i);
      ++i;
    }
    ++out;
  }
  if (i == rf && j == last) return;
  // Leftovers: L' = [i, rf), R' = [j, last). If R' is empty the L' cells are
  // already final; otherwise merge backward from the last output cell.
  It w = first + (std::distance(lf, rf) + std::distance(rf, last));
  It il = rf, jr = last;
  while (jr != j) {
    --w;
    if (il != i && comp(*std::prev(jr), *std::prev(il))) {
      --il;
      std::iter_swap(w, il);
    } else {
      --jr;
      std::iter_swap(w, jr);
    }
  }
}

// Back form: layout [L | R | gap t] with l <= 2t; merged run lands at
// [first + t, ...) and the buffer elements land in the first t cells.
// Realized as the front form on reversed iterators with a flipped
// comparator, which keeps ties left-run-first.
template <class It, class Comp>
void gap_merge_back(It first, It rf, It gf, It last, Comp comp) {
  auto flipped = [&comp](const auto& a, const auto& b) { return comp(b, a); };
  gap_merge_front(std::make_reverse_iterator(last), std::make_reverse_iterator(gf),
                  std::make_reverse_iterator(rf), std::make_reverse_iterator(first),
                  flipped);
}

}  // namespace detail

// Partial-buffer merge of two adjacent sorted runs. Front layout
// [buffer t | left l | right r] requires r <= 2t and shifts the merged run
// onto the buffer's cells, leaving the buffer in the last t cells; Back
// layout [left | right | buffer] mirrors it (l <= 2t, buffer ends up in the
// first t cells). At most l + r - 1 comparisons.
template <class It, class Comp>
void reinhardt_merge(It first, const MergeLayout& lay, Comp comp) {
  const auto t = static_cast<std::ptrdiff_t>(lay.buffer_size);
  const auto l = static_cast<std::ptrdiff_t>(lay.left_size);
  const auto r = static_cast<std::ptrdiff_t>(lay.right_size);
  if (lay.side == BufferSide::Front) {
    assert(lay.right_size <= 2 * lay.buffer_size);
    detail::gap_merge_front(first, first + t, first + t + l, first + t + l + r, comp);
  } else {
    assert(lay.left_size <= 2 * lay.buffer_size);
    detail::gap_merge_back(first, first + l, first + l + r, first + l + r + t, comp);
  }
}

// Full-buffer merge: the shorter run is swapped into the buffer and merged
// back, so the merged result occupies the runs' original cells and the
// buffer region keeps (a permutation of) its own elements. Requires
// t >= min(l, r). At most l + r - 1 comparisons.
template <class It, class Comp>
void simple_buffered_merge(It first, const MergeLayout& lay, Comp comp) {
  const auto t = static_cast<std::ptrdiff_t>(lay.buffer_size);
  const auto l = static_cast<std::ptrdiff_t>(lay.left_size);
  const auto r = static_cast<std::ptrdiff_t>(lay.right_size);
  assert(lay.buffer_size >= std::min(lay.left_size, lay.right_size));
  It bf, lf;
  if (lay.side == BufferSide::Front) {
    bf = first;
    lf = first + t;
  } else {
    lf = first;
    bf = first + l + r;
  }
  It rf = lf + l, rl = rf + r;
  if (l <= r) {
    detail::swap_blocks(lf, rf, bf);
    detail::forward_swap_merge(bf, bf + l, rf, rl, lf, comp);
  } else {
    detail::swap_blocks(rf, rl, bf);
    detail::backward_swap_merge(lf, rf, bf, bf + r, rl, comp);
  }
}

// Balanced mergesort of [first, last) using ceil(n/2) buffer cells at
// [buf, ...), disjoint from the range. The range is sorted in place and the
// buffer keeps its multiset.
template <class It, class Comp, class Hooks>
void mergesort_with_buffer(It first, It last, It buf, std::size_t cutoff, Comp comp,
                           Hooks& hooks) {
  detail::msort_in_place(first, last, buf, cutoff, comp, hooks);
}

template <class It, class Comp>
void mergesort_with_buffer(It first, It last, It buf, std::size_t cutoff, Comp comp) {
  NoHooks hooks;
  detail::msort_in_place(first, last, buf, cutoff, comp, hooks);
}

namespace detail {

// Balanced step for 2m < n <= 4m: sort the halves with the buffer, gap-merge
// them onto the buffer cells, then rotate the buffer back in front (no
// comparisons). Layout [buffer m | data n], both restored in place.
template <class It, class Comp, class Hooks>
void msort_gap_balanced(It bf, It first, It last, std::size_t cutoff, Comp comp,
                        Hooks& hooks) {
  const auto n = std::distance(first, last);
  It mid = first + (n + 1) / 2;
  msort_in_place(first, mid, bf, cutoff, comp, hooks);
  msort_in_place(mid, last, bf, cutoff, comp, hooks);
  hooks.before_merge(first, last);
  gap_merge_front(bf, first, mid, last, comp);
  std::rotate(bf, bf + n, last);
}

// Front-buffer imbalanced mergesort: layout [buffer m | data n], any m >= 1.
// n <= 2m sorts directly with the half-buffer scheme; 2m < n <= 4m uses one
// gap merge; larger n sorts a leading remainder in (2m, 4m] and then folds
// in 2m-chunks left to right, each chunk merged with one gap merge and the
// buffer rotated back (rotations cost moves, never comparisons).
template <class It, class Comp, class Hooks>
void imbalanced_msort_front(It bf, It first, It last, std::size_t cutoff, Comp comp,
                            Hooks& hooks) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  const auto m = static_cast<std::size_t>(std::distance(bf, first));
  if (n <= 1) return;
  if (n <= cutoff) {
    insertion_sort(first, last, comp);
    return;
  }
  if (n <= 2 * m) {
    msort_in_place(first, last, bf, cutoff, comp, hooks);
    return;
  }
  if (n <= 4 * m) {
    msort_gap_balanced(bf, first, last, cutoff, comp, hooks);
    return;
  }
  const std::size_t k = (n + 2 * m - 1) / (2 * m) - 2;
  const std::size_t q = n - 2 * m * k;
  msort_gap_balanced(bf, first, first + q, cutoff, comp, hooks);
  for (It chunk = first + q; chunk != last; chunk += 2 * m) {
    It chunk_end = chunk + 2 * m;
    msort_in_place(chunk, chunk_end, bf, cutoff, comp, hooks);
    hooks.before_merge(first, chunk_end);
    gap_merge_front(bf, first, chunk, chunk_end, comp);
    std::rotate(bf, bf + std::distance(first, chunk_end), chunk_end);
  }
}

}  // namespace detail

// Mergesort of [first, last) with an adjacent buffer of m dummy cells:
// side == Front means the buffer occupies [first - m, first), Back means
// [last, last + m). Works for any m >= 1 (the balanced scheme applies while
// n <= 4m); comparisons stay within analysis::ms_buffered_bound(n, m) when
// cutoff <= 1. The range is sorted in place and the buffer keeps its
// multiset.
template <class It, class Comp, class Hooks>
void imbalanced_mergesort(It first, It last, std::size_t m, BufferSide side,
                          std::size_t cutoff, Comp comp, Hooks& hooks) {
  assert(m >= 1 || first == last);
  const auto md = static_cast<std::ptrdiff_t>(m);
  if (side == BufferSide::Front) {
    detail::imbalanced_msort_front(first - md, first, last, cutoff, comp, hooks);
  } else {
    auto flipped = [&comp](const auto& a, const auto& b) { return comp(b, a); };
    detail::imbalanced_msort_front(std::make_reverse_iterator(last + md),
                                   std::make_reverse_iterator(last),
                                   std::make_reverse_iterator(first), cutoff, flipped,
                                   hooks);
  }
}

template <class It, class Comp>
void imbalanced_mergesort(It first, It last, std::size_t m, BufferSide side,
                          std::size_t cutoff, Comp comp) {
  NoHooks hooks;
  imbalanced_mergesort(first, last, m, side, cutoff, comp, hooks);
}

}  // namespace qms
