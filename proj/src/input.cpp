// SPDX-License-Identifier: Apache-2.0
#include "qms/harness/input.hpp"

#include <algorithm>

#include "qms/harness/prng.hpp"
#include "qms/primitives.hpp"

namespace qms::harness {

namespace {

std::vector<std::uint64_t> random_perm(std::size_t n, Xoshiro256ss& rng) {
  std::vector<std::uint64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  shuffle_range(v.begin(), v.end(), rng);
  return v;
}

// Two maximal ascending runs of lengths ceil(n/2) + 1 and floor(n/2) - 1. If
// the random split happens to produce one big ascending run, the runs' maxima
// are exchanged and re-sorted, which forces a descent at the boundary.
std::vector<std::uint64_t> merge_runs(std::size_t n, Xoshiro256ss& rng) {
  if (n < 4) return random_perm(n, rng);
  auto v = random_perm(n, rng);
  const std::size_t l1 = (n + 1) / 2 + 1;
  std::sort(v.begin(), v.begin() + l1);
  std::sort(v.begin() + l1, v.end());
  if (v[l1 - 1] < v[l1]) {
    std::swap(v[l1 - 1], v.back());
    std::sort(v.begin() + l1, v.end());
  }
  return v;
}

// Median-of-3 adversary: the largest 2*floor(n/4) values are interleaved
// between a middle zone (cells floor(n/2), floor(n/2)+1, ...) and a back
// zone (cells n-1, n-2, ...), descending as they alternate, so a
// first/middle/last pivot sample keeps hitting near-extreme values level
// after level. Remaining cells get the small values, shuffled.
std::vector<std::uint64_t> mo3_killer(std::size_t n, Xoshiro256ss& rng) {
  if (n < 8) return random_perm(n, rng);
  const std::uint64_t kHole = ~0ull;
  std::vector<std::uint64_t> v(n, kHole);
  const std::size_t zone = n / 4;
  std::uint64_t next_val = n - 1;
  for (std::size_t i = 0; i < zone; ++i) {
    v[n / 2 + i] = next_val--;
    v[n - 1 - i] = next_val--;
  }
  std::vector<std::uint64_t> rest(n - 2 * zone);
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i;
  shuffle_range(rest.begin(), rest.end(), rng);
  std::size_t r = 0;
  for (auto& cell : v) {
    if (cell == kHole) cell = rest[r++];
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> gen_input(Distribution dist, std::size_t n,
                                     std::uint64_t seed, std::size_t few_distinct) {
  Xoshiro256ss rng(seed);
  switch (dist) {
    case Distribution::RandomPerm:
      return random_perm(n, rng);
    case Distribution::MergeRuns:
      return merge_runs(n, rng);
    case Distribution::Mo3Killer:
      return mo3_killer(n, rng);
    case Distribution::AllEqual:
      return std::vector<std::uint64_t>(n, 42);
    case Distribution::FewDistinct: {
      std::vector<std::uint64_t> v(n);
      const std::uint64_t d = few_distinct == 0 ? 1 : few_distinct;
      for (auto& e : v) e = rng.below(d);
      return v;
    }
  }
  return {};
}

std::string to_string(Distribution dist) {
  switch (dist) {
    case Distribution::RandomPerm:
      return "random";
    case Distribution::MergeRuns:
      return "mergeruns";
    case Distribution::Mo3Killer:
      return "mo3killer";
    case Distribution::AllEqual:
      return "allequal";
    case Distribution::FewDistinct:
      return "fewdistinct";
  }
  return "unknown";
}

std::optional<Distribution> distribution_from_string(std::string_view name) {
  if (name == "random") return Distribution::RandomPerm;
  if (name == "mergeruns") return Distribution::MergeRuns;
  if (name == "mo3killer") return Distribution::Mo3Killer;
  if (name == "allequal") return Distribution::AllEqual;
  if (name == "fewdistinct") return Distribution::FewDistinct;
  return std::nullopt;
}

std::uint64_t unguarded_mo3_quicksort(std::vector<std::uint64_t>& v,
                                      std::uint64_t budget) {
  struct Ctx {
    std::uint64_t comps = 0;
    std::uint64_t budget = 0;
    bool stopped = false;

    bool less(std::uint64_t a, std::uint64_t b) {
      ++comps;
      return a < b;
    }

    using It = std::vector<std::uint64_t>::iterator;

    void run(It first, It last) {
      while (true) {
        const auto n = last - first;
        if (n <= 16) {
          auto counting = [this](std::uint64_t a, std::uint64_t b) { return less(a, b); };
          qms::insertion_sort(first, last, counting);
          return;
        }
        if (stopped || comps > budget) {
          stopped = true;
          return;
        }
        auto counting = [this](std::uint64_t a, std::uint64_t b) { return less(a, b); };
        It piv = qms::median_of_3(first, first + n / 2, last - 1, counting);
        std::iter_swap(piv, last - 1);
        It store = first;
        for (It i = first; i != last - 1; ++i) {
          if (less(*i, *(last - 1))) {
            std::iter_swap(i, store);
            ++store;
          }
        }
        std::iter_swap(store, last - 1);
        if (store - first < last - store - 1) {
          run(first, store);
          first = store + 1;
        } else {
          run(store + 1, last);
          last = store;
        }
      }
    }
  };

  Ctx ctx;
  ctx.budget = budget;
  ctx.run(v.begin(), v.end());
  return ctx.comps;
}

}  // namespace qms::harness
