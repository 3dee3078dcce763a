#pragma once

#include <optional>
#include <vector>

#include "eqtower/eqrel.hpp"

namespace eqtower {

// Tower of equivalence relations E_0 ⊇ E_1 ⊇ ... ⊇ E_{h-1} over a nonempty
// ground set, E_0 trivial. The virtual level E_h is always the discrete
// relation and is never stored.
struct HStructure {
  GroundSet ground;
  std::vector<EqRel> levels;

  int h() const { return static_cast<int>(levels.size()); }
  int n() const { return ground.size; }
  // Level i for 0 <= i <= h(); level h() is the discrete relation.
  EqRel level(int i) const;
};

HStructure make_hstructure(GroundSet g, std::vector<EqRel> levels);
void validate_hstructure(const HStructure& s);

// Certificate that a structure is (index_set, width)-special.
struct SpecialCert {
  std::vector<int> index_set;
  int width = 0;
};

// Ground set: all functions [0,h) -> [0,h) encoded as h-digit base-h strings;
// element id is the base-h numeral, digit j is the value at j. Two elements
// are level-i equivalent iff they agree on digits 0..i-1.
HStructure basic_structure(int h, int cap = 5);

// Indices i where the tower properly branches: E_i is not discrete and i is
// the last index carrying that relation (everything from level h on counts
// as discrete).
std::vector<int> special_index_set(const HStructure& s);

// Minimum, over special indices i and E_i-classes A, of the number of
// E_{i+1}-classes inside A. nullopt when the index set is empty (then no
// width constraint applies).
std::optional<int> special_width(const HStructure& s);

// True iff index_set is exactly special_index_set(s), nonempty, and the
// width is at least w. Requires w >= 2.
bool is_special(const HStructure& s, const std::vector<int>& index_set, int w);

// The computed certificate (index set and exact width; width 0 when empty).
SpecialCert certificate(const HStructure& s);

struct Induced {
  HStructure structure;
  std::vector<int> orig_ids;  // new id -> original id
};
// Substructure on a nonempty subset, relabeled to [0, |subset|).
Induced induce(const HStructure& s, const std::vector<int>& subset);

// Deterministic subset inducing a (sub_index_set, v)-special substructure of
// size v^|sub_index_set|. Walks the class tree top-down keeping the v least
// child classes at indices in sub_index_set and only the least child
// elsewhere.
std::vector<int> shrink(const HStructure& s, const std::vector<int>& sub_index_set,
                        int v);

// Superstructure: embeds s id-for-id (levels restricted to the old ids are
// unchanged) and grafts fresh sibling subtrees until the result is
// (index_set_new, w_new)-special with h_new levels. Fresh elements get ids
// above the existing ones; labels are kept only when nothing changes.
HStructure extend(const HStructure& s, int h_new,
                  const std::vector<int>& index_set_new, int w_new);

// The minimal (index_set, w)-special h-structure: exactly w child classes at
// each special index and no other branching.
HStructure exact_shape(int h, const std::vector<int>& index_set, int w);

// k-structure over the E_k-classes, ordered by canonical representative.
// k = 0 yields the one-element structure with a single trivial level.
struct Quotient {
  HStructure structure;
  std::vector<std::vector<int>> class_elements;  // new element -> original class
};
Quotient quotient(const HStructure& s, int k);

// Drops duplicate levels: level j of the result is the old E_{level_map[j]},
// so the result has one level per special index and is fully branching.
struct Compressed {
  HStructure structure;
  std::vector<int> level_map;
};
Compressed compress(const HStructure& s);

}  // namespace eqtower
