#pragma once

// Shared selection helpers for the extraction and canonicalization
// algorithms. Not part of the public surface.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace eqtower::detail {

// w^e capped so comparisons against ground sizes stay in range.
inline long long sat_pow(long long w, int e, long long cap) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (w != 0 && r > cap / w) return cap;
    r *= w;
  }
  return std::min(r, cap);
}

inline std::vector<int> iota_ids(int n) {
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = x;
  return ids;
}

inline std::vector<long long> restrict_values(const std::vector<long long>& vals,
                                              const std::vector<int>& ids) {
  std::vector<long long> out;
  out.reserve(ids.size());
  for (int x : ids) out.push_back(vals[x]);
  return out;
}

// Winning value by (count desc, value asc); nullopt when no value reaches
// `want` occurrences. Returns the `want` least ids of the winning value.
inline std::optional<std::pair<long long, std::vector<int>>> select_constant(
    const std::vector<int>& ids, const std::vector<long long>& vals, int want) {
  std::map<long long, int> counts;
  for (int x : ids) ++counts[vals[x]];
  bool have = false;
  long long best_val = 0;
  int best_count = 0;
  for (const auto& [val, count] : counts) {
    if (count > best_count) {
      best_count = count;
      best_val = val;
      have = true;
    }
  }
  if (!have || best_count < want) return std::nullopt;
  std::vector<int> chosen;
  for (int x : ids) {
    if (vals[x] == best_val) chosen.push_back(x);
    if (static_cast<int>(chosen.size()) == want) break;
  }
  return std::make_pair(best_val, std::move(chosen));
}

// One representative (the least id) per distinct value, then the `want`
// least representatives. nullopt when there are fewer distinct values.
inline std::optional<std::vector<int>> select_injective(
    const std::vector<int>& ids, const std::vector<long long>& vals, int want) {
  std::set<long long> seen;
  std::vector<int> reps;
  for (int x : ids)
    if (seen.insert(vals[x]).second) reps.push_back(x);
  if (static_cast<int>(reps.size()) < want) return std::nullopt;
  reps.resize(want);
  return reps;
}

}  // namespace eqtower::detail
