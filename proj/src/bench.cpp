// SPDX-License-Identifier: Apache-2.0
#include "qms/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "qms/counter.hpp"
#include "qms/harness/element.hpp"
#include "qms/harness/simulate.hpp"

namespace qms::harness {

thread_local std::uint64_t CountingElement::moves = 0;

namespace {

struct CellResult {
  std::uint64_t comparisons = 0;
  std::uint64_t moves = 0;
  std::uint64_t time_ns = 0;
  double coefficient = 0.0;
};

double coefficient_of(std::uint64_t comparisons, std::size_t n) {
  const double dn = static_cast<double>(n);
  return (static_cast<double>(comparisons) - dn * std::log2(dn)) / dn;
}

CellResult run_cell(Algorithm algo, Distribution dist, std::size_t n,
                    std::uint64_t seed, const BenchRequest& req) {
  CellResult res;
  if (req.worst_case) {
    const auto sim =
        simulate_worst_case(algo, n, seed,
                            req.mode == Mode::Comparisons ? SimMode::Comparisons
                                                          : SimMode::Timing,
                            req.config);
    res.comparisons = sim.comparisons;
    res.coefficient = sim.coefficient;
    return res;
  }

  const auto keys = gen_input(dist, n, seed, req.few_distinct);
  std::vector<CountingElement> data(n);

  std::size_t repeats = 1;
  if (req.mode == Mode::Time && req.min_bytes > 0) {
    const std::size_t bytes_per_run = n * sizeof(CountingElement);
    repeats = std::max<std::size_t>(1, (req.min_bytes + bytes_per_run - 1) /
                                           std::max<std::size_t>(1, bytes_per_run));
  }

  std::uint64_t total_ns = 0;
  for (std::size_t rep = 0; rep < repeats; ++rep) {
    for (std::size_t i = 0; i < n; ++i) data[i].key = keys[i];
    ComparisonCounter ctr;
    SortDiagnostics diag;
    NoHooks hooks;
    CountingElement::moves = 0;
    const auto t0 = std::chrono::steady_clock::now();
    qms::sort(data.begin(), data.end(), algo,
              qms::counted(CountingElementLess{}, ctr), req.config, diag, hooks);
    const auto t1 = std::chrono::steady_clock::now();
    total_ns += static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    res.comparisons = ctr.count();
    res.moves = CountingElement::moves;
  }
  res.time_ns = total_ns / repeats;
  res.coefficient = coefficient_of(res.comparisons, n);
  return res;
}

double stddev_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchRequest& req) {
  struct Cell {
    Algorithm algo;
    Distribution dist;
    std::size_t n;
    std::uint64_t seed;
    CellResult result;
  };
  std::vector<Cell> cells;
  for (auto algo : req.algorithms) {
    for (auto dist : req.distributions) {
      for (auto n : req.sizes) {
        for (std::uint64_t seed = 1; seed <= req.seeds; ++seed) {
          cells.push_back({algo, dist, n, seed, {}});
        }
      }
    }
  }

  const bool parallel = req.mode == Mode::Comparisons && !req.serial;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
      auto& c = cells[static_cast<std::size_t>(i)];
      c.result = run_cell(c.algo, c.dist, c.n, c.seed, req);
    }
  } else {
    for (auto& c : cells) {
      c.result = run_cell(c.algo, c.dist, c.n, c.seed, req);
    }
  }

  const std::string mode_name = req.mode == Mode::Comparisons ? "comparisons" : "time";
  std::vector<BenchRow> rows;
  std::size_t at = 0;
  for (auto algo : req.algorithms) {
    for (auto dist : req.distributions) {
      for (auto n : req.sizes) {
        std::vector<double> comps, coeffs, times, moved;
        for (std::uint64_t seed = 1; seed <= req.seeds; ++seed) {
          const auto& c = cells[at++];
          BenchRow row;
          row.algorithm = to_string(algo);
          row.distribution = req.worst_case ? "adversarial" : to_string(dist);
          row.n = n;
          row.seed = std::to_string(seed);
          row.mode = mode_name;
          row.comparisons = c.result.comparisons;
          row.moves = c.result.moves;
          row.time_ns = c.result.time_ns;
          row.coefficient = c.result.coefficient;
          rows.push_back(row);
          comps.push_back(static_cast<double>(c.result.comparisons));
          coeffs.push_back(c.result.coefficient);
          times.push_back(static_cast<double>(c.result.time_ns));
          moved.push_back(static_cast<double>(c.result.moves));
        }
        BenchRow agg;
        agg.algorithm = to_string(algo);
        agg.distribution = req.worst_case ? "adversarial" : to_string(dist);
        agg.n = n;
        agg.seed = "aggregate";
        agg.mode = mode_name;
        if (req.worst_case) {
          // Worst case: the aggregate is the observed maximum.
          double worst = 0.0, worst_coeff = 0.0;
          for (std::size_t i = 0; i < comps.size(); ++i) {
            if (comps[i] > worst) {
              worst = comps[i];
              worst_coeff = coeffs[i];
            }
          }
          agg.comparisons = static_cast<std::uint64_t>(worst);
          agg.coefficient = worst_coeff;
        } else {
          double mc = 0.0, mcoef = 0.0, mt = 0.0, mm = 0.0;
          for (std::size_t i = 0; i < comps.size(); ++i) {
            mc += comps[i];
            mcoef += coeffs[i];
            mt += times[i];
            mm += moved[i];
          }
          const auto s = static_cast<double>(comps.size());
          agg.comparisons = static_cast<std::uint64_t>(mc / s);
          agg.coefficient = mcoef / s;
          agg.time_ns = static_cast<std::uint64_t>(mt / s);
          agg.moves = static_cast<std::uint64_t>(mm / s);
        }
        agg.comparisons_stddev = stddev_of(comps);
        agg.coefficient_stddev = stddev_of(coeffs);
        agg.time_ns_stddev = stddev_of(times);
        rows.push_back(agg);
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "algorithm,distribution,n,seed,mode,comparisons,moves,time_ns,"
        "coefficient,comparisons_stddev,coefficient_stddev,time_ns_stddev\n";
  char buf[64];
  const auto fmt = [&buf](double x) {
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return std::string(buf);
  };
  for (const auto& r : rows) {
    os << r.algorithm << ',' << r.distribution << ',' << r.n << ',' << r.seed << ','
       << r.mode << ',' << r.comparisons << ',' << r.moves << ',' << r.time_ns << ','
       << fmt(r.coefficient) << ',' << fmt(r.comparisons_stddev) << ','
       << fmt(r.coefficient_stddev) << ',' << fmt(r.time_ns_stddev) << '\n';
  }
}

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::Bmqms:
      return "bmqms";
    case Algorithm::Mqms:
      return "mqms";
    case Algorithm::Umqms:
      return "umqms";
    case Algorithm::Hqms:
      return "hqms";
    case Algorithm::Introsort:
      return "introsort";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  if (name == "bmqms") return Algorithm::Bmqms;
  if (name == "mqms") return Algorithm::Mqms;
  if (name == "umqms") return Algorithm::Umqms;
  if (name == "hqms") return Algorithm::Hqms;
  if (name == "introsort") return Algorithm::Introsort;
  return std::nullopt;
}

}  // namespace qms::harness
