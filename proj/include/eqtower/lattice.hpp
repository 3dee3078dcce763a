#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqtower/eqrel.hpp"
#include "eqtower/hstructure.hpp"

namespace eqtower {

// Finite bounded lattice given by its order table; join/meet tables are
// derived at construction and never trusted from input.
struct FiniteLattice {
  int n = 0;
  std::vector<uint8_t> leq;   // n*n row-major: leq[a*n+b] iff a <= b
  std::vector<int> join_tab;  // n*n
  std::vector<int> meet_tab;  // n*n

  bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b] != 0; }
  int join(int a, int b) const { return join_tab[static_cast<size_t>(a) * n + b]; }
  int meet(int a, int b) const { return meet_tab[static_cast<size_t>(a) * n + b]; }

  friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;
};

FiniteLattice make_lattice(int n, const std::vector<uint8_t>& leq);
// Whether the table is a lattice order. Throws on malformed tables.
bool is_lattice(int n, const std::vector<uint8_t>& leq);

int lattice_bottom(const FiniteLattice& L);
int lattice_top(const FiniteLattice& L);

// Total order 0 < 1 < ... < n-1.
FiniteLattice chain(int n);

// Stacks K under L, identifying the top of K with the bottom of L. K keeps
// its ids; the remaining L-elements follow in id order.
FiniteLattice linear_sum(const FiniteLattice& K, const FiniteLattice& L);

bool is_isomorphic(const FiniteLattice& K, const FiniteLattice& L);

// alpha : L -> eq(A), indexed by lattice element id.
struct Representation {
  FiniteLattice lattice;
  int ground = 0;
  std::vector<EqRel> alpha;
};

struct RepCheck {
  bool ok = false;
  std::string witness;  // first failing condition, empty when ok
};

// Conditions: alpha one-to-one, bottom -> trivial, top -> discrete, and
// alpha(join(r, s)) = alpha(r) ∩ alpha(s) for all pairs.
RepCheck check_representation(const Representation& rep);
bool is_representation(const Representation& rep);

struct RestrictedRep {
  Representation rep;
  bool valid = false;
  std::string witness;
  std::vector<int> orig_ids;
};
// Pointwise restriction to a nonempty subset; injectivity may collapse, so
// the result carries its own validity verdict.
RestrictedRep restrict_rep(const Representation& rep, const std::vector<int>& subset);

// Level 0: no image relation has exactly two classes. Level n+1: every
// equivalence relation on the ground set agrees with some image relation on
// a subset whose restriction is a level-n representation. Exponential in the
// ground size; intended for small grounds.
bool is_ncpp(const Representation& rep, int n);

// A fully branching width-2 tower converts to a chain representation with
// one relation per level plus the discrete top; and back.
Representation chain_rep_from_hstructure(const HStructure& s);
HStructure hstructure_from_chain_rep(const Representation& rep);

// Smallest n-CPP representation by ground size, then lexicographic order
// over the free elements' partitions. nullopt when none exists up to
// max_ground.
std::optional<Representation> search_ncpp(const FiniteLattice& L, int n,
                                          int max_ground);

}  // namespace eqtower
