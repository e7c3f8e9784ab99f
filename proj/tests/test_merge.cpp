// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qms/analysis.hpp"
#include "qms/counter.hpp"
#include "qms/merge.hpp"

namespace {

// Key plus provenance tag; comparisons see only the key, so the tag exposes
// both multiset conservation and tie direction (left run first).
struct KV {
  int key;
  int tag;
  bool operator==(const KV&) const = default;
};

struct KeyLess {
  bool operator()(const KV& a, const KV& b) const { return a.key < b.key; }
};

using Vec = std::vector<KV>;

Vec make_run(std::mt19937_64& rng, int len, int key_range, int tag_base) {
  Vec run(len);
  std::uniform_int_distribution<int> val(0, key_range);
  for (int i = 0; i < len; ++i) run[i] = {val(rng), tag_base + i};
  std::sort(run.begin(), run.end(),
            [](const KV& a, const KV& b) { return a.key < b.key; });
  // Re-tag in run order so equal keys carry increasing tags.
  for (int i = 0; i < len; ++i) run[i].tag = tag_base + i;
  return run;
}

Vec merged_oracle(const Vec& l, const Vec& r) {
  Vec out;
  std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out),
             KeyLess{});
  return out;
}

std::vector<int> sorted_tags(const Vec& v, std::size_t from, std::size_t to) {
  std::vector<int> tags;
  for (std::size_t i = from; i < to; ++i) tags.push_back(v[i].tag);
  std::sort(tags.begin(), tags.end());
  return tags;
}

std::vector<int> iota_tags(int base, int len) {
  std::vector<int> tags(len);
  for (int i = 0; i < len; ++i) tags[i] = base + i;
  return tags;
}

}  // namespace

TEST_CASE("reinhardt_merge front: minimal example") {
  Vec v{{100, 0}, {5, 1}, {3, 2}, {7, 3}};  // [buffer | 5 | 3 7]
  qms::ComparisonCounter ctr;
  qms::reinhardt_merge(v.begin(), {1, 1, 2, qms::BufferSide::Front},
                       qms::counted(KeyLess{}, ctr));
  CHECK(v[0].key == 3);
  CHECK(v[1].key == 5);
  CHECK(v[2].key == 7);
  CHECK(v[3].key == 100);  // buffer element pushed to the far side
  CHECK(ctr.count() <= 2);
}

TEST_CASE("reinhardt_merge randomized: both sides, ties, counts, buffer multiset") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 10000; ++trial) {
    const bool front = trial % 2 == 0;
    const int t = 1 + static_cast<int>(rng() % 128);
    // Front requires r <= 2t, Back requires l <= 2t.
    const int bounded = 1 + static_cast<int>(rng() % (2 * t));
    const int free_len = 1 + static_cast<int>(rng() % 256);
    const int l = front ? free_len : bounded;
    const int r = front ? bounded : free_len;
    const int key_range = trial % 3 == 0 ? 4 : 1000;  // every third trial tie-heavy

    Vec left = make_run(rng, l, key_range, 100000);
    Vec right = make_run(rng, r, key_range, 200000);
    Vec expect = merged_oracle(left, right);

    Vec v;
    if (front) {
      for (int i = 0; i < t; ++i) v.push_back({-1, 300000 + i});
      v.insert(v.end(), left.begin(), left.end());
      v.insert(v.end(), right.begin(), right.end());
    } else {
      v.insert(v.end(), left.begin(), left.end());
      v.insert(v.end(), right.begin(), right.end());
      for (int i = 0; i < t; ++i) v.push_back({-1, 300000 + i});
    }

    qms::ComparisonCounter ctr;
    qms::reinhardt_merge(
        v.begin(),
        {static_cast<std::size_t>(t), static_cast<std::size_t>(l),
         static_cast<std::size_t>(r), front ? qms::BufferSide::Front : qms::BufferSide::Back},
        qms::counted(KeyLess{}, ctr));

    CAPTURE(trial);
    const std::size_t merged_at = front ? 0 : t;
    for (int i = 0; i < l + r; ++i) {
      REQUIRE(v[merged_at + i] == expect[i]);
    }
    const std::size_t buf_at = front ? static_cast<std::size_t>(l + r) : 0;
    CHECK(sorted_tags(v, buf_at, buf_at + t) == iota_tags(300000, t));
    CHECK(ctr.count() <= static_cast<std::uint64_t>(l + r - 1));
  }
}

TEST_CASE("reinhardt_merge front: forced take-right and early right exhaustion") {
  {
    // r == 2t: phase 1 must consume rights fast enough to free the gap.
    Vec v{{-1, 0}, {-1, 1}, {4, 2}, {5, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    qms::reinhardt_merge(v.begin(), {2, 2, 4, qms::BufferSide::Front}, KeyLess{});
    for (int i = 0; i < 6; ++i) CHECK(v[i].key == i);
  }
  {
    // r <= t: the right run can run dry during phase 1.
    Vec v{{-1, 0}, {-1, 1}, {1, 2}, {3, 3}, {5, 4}, {7, 5}, {0, 6}, {2, 7}};
    qms::reinhardt_merge(v.begin(), {2, 4, 2, qms::BufferSide::Front}, KeyLess{});
    const int want[] = {0, 1, 2, 3, 5, 7};
    for (int i = 0; i < 6; ++i) CHECK(v[i].key == want[i]);
  }
  {
    // Left run entirely larger: phase 2 does all the work.
    Vec v{{-1, 0}, {5, 1}, {6, 2}, {0, 3}, {1, 4}};
    qms::reinhardt_merge(v.begin(), {1, 2, 2, qms::BufferSide::Front}, KeyLess{});
    const int want[] = {0, 1, 5, 6};
    for (int i = 0; i < 4; ++i) CHECK(v[i].key == want[i]);
  }
}

TEST_CASE("simple_buffered_merge merges in place, buffer keeps its cells") {
  std::mt19937_64 rng(9090);
  for (int trial = 0; trial < 10000; ++trial) {
    const bool front = trial % 2 == 0;
    const int l = 1 + static_cast<int>(rng() % 200);
    const int r = 1 + static_cast<int>(rng() % 200);
    const int t = std::min(l, r) + static_cast<int>(rng() % 32);
    const int key_range = trial % 3 == 0 ? 4 : 1000;

    Vec left = make_run(rng, l, key_range, 100000);
    Vec right = make_run(rng, r, key_range, 200000);
    Vec expect = merged_oracle(left, right);

    Vec v;
    if (front) {
      for (int i = 0; i < t; ++i) v.push_back({-1, 300000 + i});
    }
    v.insert(v.end(), left.begin(), left.end());
    v.insert(v.end(), right.begin(), right.end());
    if (!front) {
      for (int i = 0; i < t; ++i) v.push_back({-1, 300000 + i});
    }

    qms::ComparisonCounter ctr;
    qms::simple_buffered_merge(
        v.begin(),
        {static_cast<std::size_t>(t), static_cast<std::size_t>(l),
         static_cast<std::size_t>(r), front ? qms::BufferSide::Front : qms::BufferSide::Back},
        qms::counted(KeyLess{}, ctr));

    CAPTURE(trial);
    const std::size_t runs_at = front ? static_cast<std::size_t>(t) : 0;
    for (int i = 0; i < l + r; ++i) {
      REQUIRE(v[runs_at + i] == expect[i]);
    }
    const std::size_t buf_at = front ? 0 : static_cast<std::size_t>(l + r);
    CHECK(sorted_tags(v, buf_at, buf_at + t) == iota_tags(300000, t));
    CHECK(ctr.count() <= static_cast<std::uint64_t>(l + r - 1));
  }
}

TEST_CASE("mergesort_with_buffer: exhaustive small permutations at the exact bound") {
  for (int n : {2, 3, 4, 5, 6, 7, 8}) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    const auto bound = qms::analysis::merge_sort_worst_case(n);
    do {
      std::vector<int> v = perm;
      std::vector<int> buf((n + 1) / 2, -1);
      qms::ComparisonCounter ctr;
      qms::mergesort_with_buffer(v.begin(), v.end(), buf.begin(), 1,
                                 qms::counted(std::less<int>{}, ctr));
      REQUIRE(std::is_sorted(v.begin(), v.end()));
      REQUIRE(ctr.count() <= bound);
      int buf_sum = 0;
      for (int b : buf) buf_sum += b;
      REQUIRE(buf_sum == -static_cast<int>(buf.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("mergesort_with_buffer: worst-case ceiling at n = 1024") {
  std::mt19937_64 rng(1111);
  std::vector<int> v(1024);
  for (int trial = 0; trial < 50; ++trial) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<int> buf(512, -1);
    qms::ComparisonCounter ctr;
    qms::mergesort_with_buffer(v.begin(), v.end(), buf.begin(), 1,
                               qms::counted(std::less<int>{}, ctr));
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(ctr.count() <= qms::analysis::merge_sort_worst_case(1024));  // 9217
  }
}

TEST_CASE("mergesort_with_buffer keeps duplicate-heavy inputs and the buffer intact") {
  std::mt19937_64 rng(2222);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 300);
    Vec v(n);
    std::uniform_int_distribution<int> val(0, 6);
    for (int i = 0; i < n; ++i) v[i] = {val(rng), i};
    Vec expect_keys = v;
    std::sort(expect_keys.begin(), expect_keys.end(),
              [](const KV& a, const KV& b) { return a.key < b.key; });
    Vec buf((n + 1) / 2);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = {-7, 900000 + static_cast<int>(i)};
    qms::mergesort_with_buffer(v.begin(), v.end(), buf.begin(), 1, KeyLess{});
    REQUIRE(std::is_sorted(v.begin(), v.end(), KeyLess{}));
    CHECK(sorted_tags(v, 0, v.size()) == iota_tags(0, n));
    CHECK(sorted_tags(buf, 0, buf.size()) == iota_tags(900000, static_cast<int>(buf.size())));
  }
}

TEST_CASE("imbalanced_mergesort: bound grid over (n, m), both sides") {
  std::mt19937_64 rng(3333);
  int trials = 0;
  while (trials < 1000) {
    const int n = 2 + static_cast<int>(rng() % 800);
    const int m = 1 + static_cast<int>(rng() % std::max(1, n / 2 + 8));
    const bool front = trials % 2 == 0;
    std::vector<int> cells(n + m, -1);
    const int data_at = front ? m : 0;
    for (int i = 0; i < n; ++i) cells[data_at + i] = static_cast<int>(rng() % 1000);
    std::vector<int> expect(cells.begin() + data_at, cells.begin() + data_at + n);
    std::sort(expect.begin(), expect.end());

    qms::ComparisonCounter ctr;
    auto first = cells.begin() + data_at;
    qms::imbalanced_mergesort(first, first + n, m,
                              front ? qms::BufferSide::Front : qms::BufferSide::Back, 1,
                              qms::counted(std::less<int>{}, ctr));
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(front);
    REQUIRE(std::vector<int>(first, first + n) == expect);
    CHECK(ctr.count() <= qms::analysis::ms_buffered_bound(n, m));
    // Buffer cells keep their own multiset (all sentinels).
    const int buf_at = front ? 0 : n;
    for (int i = 0; i < m; ++i) REQUIRE(cells[buf_at + i] == -1);
    ++trials;
  }
}

TEST_CASE("imbalanced_mergesort: regime boundaries and reverse-sorted input") {
  for (int m : {1, 2, 5, 25}) {
    for (int n : {2 * m, 2 * m + 1, 4 * m, 4 * m + 1, 8 * m + 3, 100}) {
      if (n < 2) continue;
      std::vector<int> cells(n + m, -1);
      for (int i = 0; i < n; ++i) cells[m + i] = n - i;  // reverse sorted
      qms::ComparisonCounter ctr;
      auto first = cells.begin() + m;
      qms::imbalanced_mergesort(first, first + n, m, qms::BufferSide::Front, 1,
                                qms::counted(std::less<int>{}, ctr));
      CAPTURE(n);
      CAPTURE(m);
      REQUIRE(std::is_sorted(first, first + n));
      CHECK(ctr.count() <= qms::analysis::ms_buffered_bound(n, m));
      for (int i = 0; i < m; ++i) REQUIRE(cells[i] == -1);
    }
  }
}
