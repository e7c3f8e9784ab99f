// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "qms/counter.hpp"
#include "qms/hooks.hpp"
#include "qms/selection.hpp"

namespace {

using Vec = std::vector<int>;

Vec sorted_copy(Vec v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool same_multiset(Vec a, Vec b) { return sorted_copy(std::move(a)) == sorted_copy(std::move(b)); }

// Records every pivot query the algorithms raise, never overrides.
struct RecordingHooks {
  std::vector<qms::PivotQuery> queries;
  template <class It>
  std::optional<It> pivot_override(It, It, const qms::PivotQuery& q) {
    queries.push_back(q);
    return std::nullopt;
  }
  template <class It>
  void before_merge_sort(It, It) {}
  template <class It>
  void before_merge(It, It) {}
};

}  // namespace

TEST_CASE("partition_around: worked example, n - 1 comparisons") {
  Vec v{7, 11, 4, 5, 6, 10, 9, 2, 3, 1, 0, 8};
  qms::ComparisonCounter ctr;
  auto pr = qms::partition_around(v.begin(), v.end(), v.begin(),
                                  qms::counted(std::less<int>{}, ctr),
                                  qms::EqualSide::Right);
  CHECK(pr.pivot_index == 7);
  CHECK(pr.left_size == 7);
  CHECK(pr.right_size == 4);
  CHECK(v[7] == 7);
  CHECK(ctr.count() == 11);
  for (std::size_t i = 0; i < 7; ++i) CHECK(v[i] < 7);
  for (std::size_t i = 8; i < v.size(); ++i) CHECK(v[i] > 7);
}

TEST_CASE("partition_around: equal-side routing and zone invariants") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 60);
    std::uniform_int_distribution<int> val(0, std::max(1, n / 3));
    Vec v(n);
    for (auto& e : v) e = val(rng);
    const std::size_t pidx = rng() % n;
    const int pval = v[pidx];
    const auto side = trial % 2 ? qms::EqualSide::Left : qms::EqualSide::Right;
    Vec before = v;
    qms::ComparisonCounter ctr;
    auto pr = qms::partition_around(v.begin(), v.end(), v.begin() + pidx,
                                    qms::counted(std::less<int>{}, ctr), side);
    CHECK(ctr.count() == static_cast<std::uint64_t>(n - 1));
    CHECK(same_multiset(before, v));
    CHECK(pr.left_size + pr.right_size + 1 == static_cast<std::size_t>(n));
    CHECK(v[pr.pivot_index] == pval);
    for (std::size_t i = 0; i < pr.pivot_index; ++i) {
      if (side == qms::EqualSide::Right) {
        CHECK(v[i] < pval);
      } else {
        CHECK(v[i] <= pval);
      }
    }
    for (std::size_t i = pr.pivot_index + 1; i < v.size(); ++i) {
      if (side == qms::EqualSide::Right) {
        CHECK(v[i] >= pval);
      } else {
        CHECK(v[i] > pval);
      }
    }
  }
}

TEST_CASE("partition_classified_prefix compares only the suffix") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 80);
    std::uniform_int_distribution<int> val(0, n);
    Vec v(n);
    for (auto& e : v) e = val(rng);
    const std::size_t s = 2 + rng() % (n / 2);
    const std::size_t rho = 1 + rng() % s;
    // A sorted prefix satisfies the classified-prefix precondition.
    std::sort(v.begin(), v.begin() + s);
    const int pval = v[rho - 1];
    Vec before = v;
    qms::ComparisonCounter ctr;
    auto pr = qms::partition_classified_prefix(v.begin(), v.end(), s, rho,
                                               qms::counted(std::less<int>{}, ctr));
    CHECK(ctr.count() == static_cast<std::uint64_t>(n - s));
    CHECK(same_multiset(before, v));
    CHECK(v[pr.pivot_index] == pval);
    for (std::size_t i = 0; i < pr.pivot_index; ++i) CHECK(v[i] <= pval);
    for (std::size_t i = pr.pivot_index + 1; i < v.size(); ++i) CHECK(v[i] >= pval);
  }
}

TEST_CASE("partition_value_left splits a >=-zone into equal and greater blocks") {
  std::mt19937_64 rng(616);
  for (int trial = 0; trial < 2000; ++trial) {
    const int zone = 1 + static_cast<int>(rng() % 50);
    const int pval = 10;
    Vec v(zone + 1);
    v[0] = pval;  // pivot cell sits outside the zone
    std::uniform_int_distribution<int> val(10, 14);
    for (int i = 1; i <= zone; ++i) v[i] = val(rng);
    Vec before = v;
    qms::ComparisonCounter ctr;
    auto eq_end = qms::partition_value_left(v.begin() + 1, v.end(), v.begin(),
                                            qms::counted(std::less<int>{}, ctr));
    CHECK(ctr.count() == static_cast<std::uint64_t>(zone));
    CHECK(same_multiset(before, v));
    for (auto it = v.begin() + 1; it != eq_end; ++it) CHECK(*it == pval);
    for (auto it = eq_end; it != v.end(); ++it) CHECK(*it > pval);
  }
}

TEST_CASE("adaptive_sample_rank steers toward the near edge") {
  CHECK(qms::adaptive_sample_rank(900, 200, 100) == 50);
  CHECK(qms::adaptive_sample_rank(900, 800, 100) == 75);
  CHECK(qms::adaptive_sample_rank(900, 450, 100) == 50);
  CHECK(qms::adaptive_sample_rank(900, 1, 100) == 1);
  CHECK(qms::adaptive_sample_rank(900, 900, 100) == 100);
  CHECK(qms::adaptive_sample_rank(100, 1, 11) == 1);
  CHECK(qms::adaptive_sample_rank(100, 100, 11) == 11);
  // Always lands in [1, s].
  for (std::size_t n = 31; n < 400; n += 7) {
    const std::size_t s = n / 9;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t r = qms::adaptive_sample_rank(n, k, s);
      CHECK(r >= 1);
      CHECK(r <= s);
    }
  }
}

TEST_CASE("mom_select: oracle correctness, placement, and linear cost") {
  std::mt19937_64 rng(2024);
  std::uint64_t trials = 0;
  while (trials < 10000) {
    const int n = 1 + static_cast<int>(rng() % 500);
    Vec v(n);
    const bool dup = trials % 3 == 0;
    std::uniform_int_distribution<int> val(0, dup ? std::max(1, n / 8) : 1000000);
    for (auto& e : v) e = val(rng);
    const std::size_t k = 1 + rng() % n;
    Vec expect = sorted_copy(v);
    qms::ComparisonCounter ctr;
    auto pos = qms::mom_select(v.begin(), v.end(), k,
                               qms::counted(std::less<int>{}, ctr));
    CHECK(pos == v.begin() + (k - 1));
    CHECK(*pos == expect[k - 1]);
    CHECK(same_multiset(expect, v));
    for (auto it = v.begin(); it != pos; ++it) CHECK(*it <= *pos);
    for (auto it = std::next(pos); it != v.end(); ++it) CHECK(*it >= *pos);
    // Loose linearity ceiling; the tight average and simulated worst-case
    // bounds are enforced by the acceptance suite.
    CHECK(ctr.count() <= 25 * static_cast<std::uint64_t>(n) + 512);
    ++trials;
  }
}

TEST_CASE("mom_select: all-equal input stays linear via the duplicate guard") {
  for (int n : {31, 100, 1000, 5000}) {
    Vec v(n, 7);
    qms::ComparisonCounter ctr;
    auto pos = qms::mom_select(v.begin(), v.end(), (n + 1) / 2,
                               qms::counted(std::less<int>{}, ctr));
    CHECK(*pos == 7);
    CHECK(ctr.count() <= 5 * static_cast<std::uint64_t>(n) + 512);
  }
}

TEST_CASE("mom_select raises MomStep queries with the feasible rank window") {
  std::mt19937_64 rng(31337);
  Vec v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  std::shuffle(v.begin(), v.end(), rng);
  RecordingHooks hooks;
  qms::mom_select(v.begin(), v.end(), 500, std::less<int>{}, hooks);
  REQUIRE(!hooks.queries.empty());
  for (const auto& q : hooks.queries) {
    CHECK(q.kind == qms::PivotQuery::Kind::MomStep);
    CHECK(q.sample_size == q.n / 9);
    CHECK(q.sample_rank >= 1);
    CHECK(q.sample_rank <= q.sample_size);
    CHECK(q.rank_lo == 4 * q.sample_rank);
    CHECK(q.rank_hi >= q.rank_lo);
    CHECK(q.rank_hi <= q.n);
    CHECK(q.target_k >= 1);
    CHECK(q.target_k <= q.n);
  }
}

TEST_CASE("sampled pivots respect their rank guarantees on distinct input") {
  std::mt19937_64 rng(987);
  qms::NoHooks nh;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 33 + static_cast<int>(rng() % 2000);
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::shuffle(v.begin(), v.end(), rng);

    {
      Vec w = v;
      auto sp = qms::choose_pivot_mo3_sample(w.begin(), w.end(), std::less<int>{}, nh);
      CHECK(sp.sample_size == static_cast<std::size_t>(n) / 3);
      CHECK(sp.carry == 2);
      auto pr = qms::partition_classified_prefix(w.begin(), w.end(), sp.sample_size,
                                                 sp.sample_rank, std::less<int>{});
      CHECK(pr.left_size >= 2 * sp.sample_rank - 1);
      CHECK(pr.right_size >= 2 * (sp.sample_size - sp.sample_rank + 1) - 1);
      CHECK(w[pr.pivot_index] == static_cast<int>(pr.pivot_index));  // exact rank
    }
    {
      Vec w = v;
      auto sp = qms::choose_pivot_sampled(w.begin(), w.end(), 11, 5, std::less<int>{}, nh);
      CHECK(sp.sample_size == static_cast<std::size_t>(n) * 5 / 165);
      CHECK(sp.carry == 6);
      auto pr = qms::partition_classified_prefix(w.begin(), w.end(), sp.sample_size,
                                                 sp.sample_rank, std::less<int>{});
      CHECK(pr.left_size >= 6 * sp.sample_rank - 1);
      CHECK(pr.right_size >= 6 * (sp.sample_size - sp.sample_rank + 1) - 1);
      CHECK(w[pr.pivot_index] == static_cast<int>(pr.pivot_index));
    }
  }
}
