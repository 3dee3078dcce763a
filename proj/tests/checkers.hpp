#pragma once

// Independent re-validation of extractor outputs. Deliberately re-derives
// the special certificate from class counting alone (eqrel primitives), so
// it shares no logic with the extraction or certificate code paths.

#include <algorithm>
#include <set>
#include <vector>

#include "eqtower/extraction.hpp"
#include "eqtower/hstructure.hpp"

namespace checkers {

inline std::vector<int> oracle_index_set(const eqtower::HStructure& s) {
  std::vector<int> out;
  for (int i = 0; i < s.h(); ++i) {
    const eqtower::EqRel here = s.level(i);
    if (eqtower::class_count(here) == s.n()) continue;  // discrete
    if (here == s.level(i + 1)) continue;               // recurs later
    out.push_back(i);
  }
  return out;
}

inline int oracle_width(const eqtower::HStructure& s) {
  const std::vector<int> index_set = oracle_index_set(s);
  int width = s.n() + 1;
  for (int i : index_set)
    for (const std::vector<int>& cls : eqtower::eq_classes(s.level(i)))
      width = std::min(width, static_cast<int>(
                                  classes_within(s.level(i), cls, s.level(i + 1)).size()));
  return index_set.empty() ? 0 : width;
}

// The subset must induce a substructure whose index set is exactly
// `expect_index_set` and whose width is at least w.
inline bool check_induced_special(const eqtower::HStructure& s,
                                  const std::vector<int>& subset,
                                  const std::vector<int>& expect_index_set, int w) {
  if (subset.empty()) return false;
  const eqtower::Induced ind = eqtower::induce(s, subset);
  if (oracle_index_set(ind.structure) != expect_index_set) return false;
  return oracle_width(ind.structure) >= w;
}

inline bool constant_on(const eqtower::Coloring& f, const std::vector<int>& subset) {
  for (int x : subset)
    if (f.values[x] != f.values[subset.front()]) return false;
  return true;
}

inline bool injective_on(const eqtower::Coloring& f, const std::vector<int>& subset) {
  std::set<long long> seen;
  for (int x : subset)
    if (!seen.insert(f.values[x]).second) return false;
  return true;
}

// f's equality pattern on the induced substructure must coincide with some
// level (the discrete convention level included); returns that check.
inline bool canonical_on(const eqtower::HStructure& s, const std::vector<int>& subset,
                         const eqtower::Coloring& f) {
  const eqtower::Induced ind = eqtower::induce(s, subset);
  const int m = ind.structure.n();
  for (int i = 0; i <= ind.structure.h(); ++i) {
    const eqtower::EqRel lvl = ind.structure.level(i);
    bool match = true;
    for (int x = 0; x < m && match; ++x)
      for (int y = x + 1; y < m && match; ++y) {
        const bool same_value =
            f.values[ind.orig_ids[x]] == f.values[ind.orig_ids[y]];
        const bool same_class = lvl.class_of[x] == lvl.class_of[y];
        if (same_value != same_class) match = false;
      }
    if (match) return true;
  }
  return false;
}

inline bool subset_of_ground(const std::vector<int>& subset, int n) {
  if (!std::is_sorted(subset.begin(), subset.end())) return false;
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) return false;
  return subset.empty() || (subset.front() >= 0 && subset.back() < n);
}

}  // namespace checkers
