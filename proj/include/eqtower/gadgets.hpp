#pragma once

#include <utility>
#include <vector>

namespace eqtower {

struct CollapseResult {
  std::vector<long long> t;                         // t[x] <= x
  std::vector<std::pair<long long, long long>> t1;  // range(t) -> range(t0)
  std::vector<std::pair<long long, long long>> t2;  // range(t0) -> range(t)
};

// Collapses t0 to first-occurrence indices: t(x) = x when t0(x) is new,
// otherwise the earliest index with the same t0-value. t1 and t2 are the
// mutually inverse partial maps with t1(t(x)) = t0(x) and t2(t0(x)) = t(x).
CollapseResult collapse_generator(const std::vector<long long>& t0);

struct MedianSplit {
  long long threshold = 0;  // least d with |{f > d}| <= |{f <= d}|
  std::vector<int> subset;  // {x : f(x) >= d}, always more than half the domain
};

// Requires injective nonnegative values.
MedianSplit median_tail_split(const std::vector<long long>& values);

}  // namespace eqtower
