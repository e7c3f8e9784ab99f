// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

namespace qms {

// Description of a pivot decision the library is about to make, handed to an
// instrumentation hook which may veto the algorithm's own choice. rank_lo and
// rank_hi delimit (1-indexed, inclusive) the ranks the selected pivot could
// legally have within the current window given its sample guarantee.
struct PivotQuery {
  enum class Kind { MomStep, DriverPivot };
  Kind kind = Kind::DriverPivot;
  std::size_t n = 0;            // current window size
  std::size_t sample_size = 0;  // number of sample medians feeding the pivot
  std::size_t sample_rank = 0;  // rank selected within the sample
  std::size_t target_k = 0;     // selection target (MomStep only), 1-indexed
  std::size_t rank_lo = 0;
  std::size_t rank_hi = 0;
};

// Default no-op hook set. An alternative hook type must provide the same
// three members; pivot_override returns an iterator to an already positioned
// replacement pivot, or nullopt to keep the algorithm's choice.
struct NoHooks {
  template <class It>
  std::optional<It> pivot_override(It, It, const PivotQuery&) {
    return std::nullopt;
  }
  template <class It>
  void before_merge_sort(It, It) {}
  template <class It>
  void before_merge(It, It) {}
};

}  // namespace qms
