// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iterator>
#include <utility>

namespace qms {

// Median selectors with pinned comparison ceilings. None of them moves
// elements; each returns an iterator to the selected element. The worst-case
// costs (3/7/12/22) feed the comparison accounting of the sorters, so they
// are asserted in the tests.

// Median of three, at most 3 comparisons (2 when the middle argument is the
// median).
template <class It, class Comp>
It median_of_3(It a, It b, It c, Comp comp) {
  const bool ba = comp(*b, *a);
  const bool cb = comp(*c, *b);
  if (ba == cb) return b;
  const bool ca = comp(*c, *a);
  if (ba) return ca ? c : a;  // b is the smallest: median = min(a, c)
  return ca ? a : c;          // b is the largest: median = max(a, c)
}

namespace detail {

// One comparator exchange of a 2-element index window.
template <class It, class Comp>
inline void exchange_if_less(It& lo, It& hi, Comp comp) {
  if (comp(*hi, *lo)) std::swap(lo, hi);
}

}  // namespace detail

// Median of five, exactly 7 comparisons: sort {a,b,c,d} with the optimal
// 5-exchange network, then locate e against the two middle ranks.
template <class It, class Comp>
It median_of_5(It a, It b, It c, It d, It e, Comp comp) {
  detail::exchange_if_less(a, b, comp);
  detail::exchange_if_less(c, d, comp);
  detail::exchange_if_less(a, c, comp);
  detail::exchange_if_less(b, d, comp);
  detail::exchange_if_less(b, c, comp);
  // Now *a <= *b <= *c <= *d. The median of all five is e clamped to [b, c].
  const bool below = comp(*e, *b);
  const bool above = comp(*c, *e);
  if (below) return b;
  if (above) return c;
  return e;
}

// Pseudomedian of nine ("ninther"), at most 12 comparisons. Elements are
// taken at first, first+stride, ..., first+8*stride. The result has at least
// 4 elements <= it and at least 4 elements >= it among the nine.
template <class It, class Comp>
It pseudomedian_of_9(It first, typename std::iterator_traits<It>::difference_type stride,
                     Comp comp) {
  const auto at = [&](int i) { return first + i * stride; };
  It m0 = median_of_3(at(0), at(1), at(2), comp);
  It m1 = median_of_3(at(3), at(4), at(5), comp);
  It m2 = median_of_3(at(6), at(7), at(8), comp);
  return median_of_3(m0, m1, m2, comp);
}

// Pseudomedian of fifteen, at most 22 comparisons: medians of five triples,
// then the median of those five. The result has at least 5 elements <= it
// and at least 5 elements >= it among the fifteen (rank between 6 and 10).
template <class It, class Comp>
It pseudomedian_of_15(It first, typename std::iterator_traits<It>::difference_type stride,
                      Comp comp) {
  const auto at = [&](int i) { return first + i * stride; };
  It m0 = median_of_3(at(0), at(1), at(2), comp);
  It m1 = median_of_3(at(3), at(4), at(5), comp);
  It m2 = median_of_3(at(6), at(7), at(8), comp);
  It m3 = median_of_3(at(9), at(10), at(11), comp);
  It m4 = median_of_3(at(12), at(13), at(14), comp);
  return median_of_5(m0, m1, m2, m3, m4, comp);
}

// Insertion sort used for the small base cases of every sorter.
template <class It, class Comp>
void insertion_sort(It first, It last, Comp comp) {
  if (first == last) return;
  for (It cur = std::next(first); cur != last; ++cur) {
    auto value = std::move(*cur);
    It hole = cur;
    while (hole != first && comp(value, *std::prev(hole))) {
      *hole = std::move(*std::prev(hole));
      --hole;
    }
    *hole = std::move(value);
  }
}

}  // namespace qms
