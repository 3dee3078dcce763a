#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "eqtower/errors.hpp"
#include "eqtower/gadgets.hpp"

using namespace eqtower;

TEST_CASE("generator collapse worked example") {
  const CollapseResult r = collapse_generator({5, 7, 5, 9});
  CHECK(r.t == std::vector<long long>{0, 1, 0, 3});
  CHECK(r.t1 == std::vector<std::pair<long long, long long>>{{0, 5}, {1, 7}, {3, 9}});
  CHECK(r.t2 == std::vector<std::pair<long long, long long>>{{5, 0}, {7, 1}, {9, 3}});
}

TEST_CASE("generator collapse degenerate shapes") {
  CHECK(collapse_generator({4, 8, 15}).t == std::vector<long long>{0, 1, 2});
  CHECK(collapse_generator({6, 6, 6, 6}).t == std::vector<long long>{0, 0, 0, 0});
  CHECK_THROWS_AS(collapse_generator({}), PreconditionError);
}

TEST_CASE("generator collapse properties on random inputs") {
  std::mt19937_64 rng(424242);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 200);
    std::vector<long long> t0(n);
    for (long long& v : t0) v = static_cast<long long>(rng() % 50);
    const CollapseResult r = collapse_generator(t0);

    std::map<long long, long long> t1(r.t1.begin(), r.t1.end());
    std::map<long long, long long> t2(r.t2.begin(), r.t2.end());
    std::set<long long> range_t(r.t.begin(), r.t.end());
    std::set<long long> range_t0(t0.begin(), t0.end());

    for (int x = 0; x < n; ++x) {
      CHECK(r.t[x] <= x);
      // t is idempotent on its range.
      CHECK(r.t[static_cast<size_t>(r.t[x])] == r.t[x]);
      // The two factoring identities.
      CHECK(t1.at(r.t[x]) == t0[x]);
      CHECK(t2.at(t0[x]) == r.t[x]);
    }
    // Range of t is exactly the first-occurrence indices.
    std::set<long long> firsts;
    std::set<long long> seen;
    for (int x = 0; x < n; ++x)
      if (seen.insert(t0[x]).second) firsts.insert(x);
    CHECK(range_t == firsts);
    // t1 and t2 are mutually inverse bijections.
    CHECK(t1.size() == range_t.size());
    CHECK(t2.size() == range_t0.size());
    CHECK(t1.size() == t2.size());
    for (const auto& [a, b] : t1) CHECK(t2.at(b) == a);
    for (int x = 0; x < n; ++x) CHECK(r.t[x] == r.t[static_cast<size_t>(t2.at(t0[x]))]);
  }
}

TEST_CASE("median tail split worked examples") {
  const MedianSplit a = median_tail_split({0, 1, 2, 3});
  CHECK(a.threshold == 1);
  CHECK(a.subset == std::vector<int>{1, 2, 3});

  const MedianSplit b = median_tail_split({7});
  CHECK(b.threshold == 7);
  CHECK(b.subset == std::vector<int>{0});

  const MedianSplit c = median_tail_split({10, 20});
  CHECK(c.threshold == 10);
  CHECK(c.subset == std::vector<int>{0, 1});

  CHECK_THROWS_WITH_AS(median_tail_split({3, 3}), doctest::Contains("one-to-one"),
                       PreconditionError);
  CHECK_THROWS_AS(median_tail_split({}), PreconditionError);
}

TEST_CASE("median tail split properties on random injective inputs") {
  std::mt19937_64 rng(91021);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 150);
    std::set<long long> pool;
    while (static_cast<int>(pool.size()) < n) pool.insert(static_cast<long long>(rng() % 10000));
    std::vector<long long> values(pool.begin(), pool.end());
    std::shuffle(values.begin(), values.end(), rng);

    const MedianSplit r = median_tail_split(values);
    CHECK(static_cast<int>(r.subset.size()) >= n / 2 + 1);
    long long min_val = -1;
    for (int x : r.subset) {
      CHECK(values[x] >= r.threshold);
      if (min_val < 0 || values[x] < min_val) min_val = values[x];
    }
    CHECK(min_val == r.threshold);
    // Minimality: the threshold below d fails the balance condition.
    long long above = 0, at_most = 0;
    for (long long v : values) (v > r.threshold - 1 ? above : at_most) += 1;
    if (r.threshold > 0) CHECK(above > at_most);
  }
}
