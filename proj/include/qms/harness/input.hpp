// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qms::harness {

enum class Distribution { RandomPerm, MergeRuns, Mo3Killer, AllEqual, FewDistinct };

// Deterministic input generator: the same (dist, n, seed, few_distinct)
// always yields the same keys. few_distinct only matters for FewDistinct.
std::vector<std::uint64_t> gen_input(Distribution dist, std::size_t n,
                                     std::uint64_t seed, std::size_t few_distinct = 2);

std::string to_string(Distribution dist);
std::optional<Distribution> distribution_from_string(std::string_view name);

// Unguarded median-of-3 quicksort (pivot parked at the last cell, Lomuto
// scan, both sides processed, no duplicate guard, no depth limit). Counts
// key comparisons and aborts once the count exceeds budget, leaving the data
// partially sorted; used to certify adversarial blowups without paying the
// full quadratic run.
std::uint64_t unguarded_mo3_quicksort(std::vector<std::uint64_t>& v,
                                      std::uint64_t budget);

}  // namespace qms::harness
