#pragma once

#include <optional>

#include "eqtower/bignat.hpp"
#include "eqtower/extraction.hpp"

namespace eqtower {

// Largest i <= h whose level matches the equality pattern of f exactly
// (level h meaning: f one-to-one). nullopt when f is not canonical on s.
std::optional<int> canonicity_index(const HStructure& s, const Coloring& f);

// Recursive width bound: B_h(0) = 0, B_h(1) = 1, B_1(w) = w^2,
// B_{h+1}(w) = B_h((h+1) * w^(h+1)).
BigNat c_bound(int h, const BigNat& w);

// Closed-form width bound (h! * w)^(2 * h!); requires w >= 2.
BigNat c_closed_bound(int h, const BigNat& w);

struct CanonicalizeResult {
  std::vector<int> subset;
  int canonical_index = 0;  // canonicity index of f on the induced structure
};

// Full canonicalization: a subset inducing a width-w special substructure
// (same special index set) on which f is canonical. Guaranteed mode requires
// width >= c_bound(k, w) with k the index-set size and always succeeds;
// best-effort accepts any special structure and may return nullopt.
std::optional<CanonicalizeResult> canonicalize(const HStructure& s, const Coloring& f,
                                               int w, ExtractMode mode);

// Exhaustive threshold oracle: the least v such that every coloring of the
// exact-shape width-v structure of height h admits a width-w canonical
// subset. Colorings are enumerated as set partitions of the ground set.
// Supported: h = 1 (w <= 5 is practical) and h = 2 with w = 2. nullopt when
// the answer exceeds cap.
std::optional<long long> c_exact(int h, int w, long long cap);

}  // namespace eqtower
