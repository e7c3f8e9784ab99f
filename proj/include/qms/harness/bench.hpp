// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qms/harness/input.hpp"
#include "qms/sorter.hpp"

namespace qms::harness {

enum class Mode { Time, Comparisons };

struct BenchRequest {
  std::vector<Algorithm> algorithms;
  std::vector<Distribution> distributions;
  std::vector<std::size_t> sizes;
  std::size_t seeds = 1;           // runs seeds 1..seeds
  Mode mode = Mode::Comparisons;
  bool worst_case = false;         // adversarial simulation instead of inputs
  bool serial = false;             // disable the comparison-cell worker pool
  std::size_t min_bytes = 0;       // timing: repeat until this much data sorted
  std::size_t few_distinct = 2;
  SortConfig config;
};

struct BenchRow {
  std::string algorithm;
  std::string distribution;
  std::size_t n = 0;
  std::string seed;  // decimal seed, or "aggregate" for the summary row
  std::string mode;
  std::uint64_t comparisons = 0;
  std::uint64_t moves = 0;
  std::uint64_t time_ns = 0;
  double coefficient = 0.0;  // (comparisons - n lg n) / n
  double comparisons_stddev = 0.0;
  double coefficient_stddev = 0.0;
  double time_ns_stddev = 0.0;
};

// One row per (algorithm, distribution, n, seed) plus an aggregate row per
// cell group: mean over seeds, except worst-case mode where the aggregate
// keeps the maximum comparison count. Comparison cells run on an OpenMP
// worker pool unless serial is set; timing cells always run serially.
std::vector<BenchRow> run_benchmark(const BenchRequest& req);

// UTF-8, comma separated, one header row, stable column order.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

std::string to_string(Algorithm algo);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

}  // namespace qms::harness
