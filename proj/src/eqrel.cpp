#include "eqtower/eqrel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "eqtower/errors.hpp"

namespace eqtower {

GroundSet ground(int size) {
  GroundSet g;
  g.size = size;
  validate_ground(g);
  return g;
}

void validate_ground(const GroundSet& g) {
  if (g.size < 1) throw ValidationError("empty ground");
  if (!g.labels.empty()) {
    if (static_cast<int>(g.labels.size()) != g.size)
      throw ValidationError("labels must have exactly one entry per element");
    std::set<std::string> seen(g.labels.begin(), g.labels.end());
    if (static_cast<int>(seen.size()) != g.size)
      throw ValidationError("labels must be distinct");
  }
}

EqRel eq_trivial(int n) {
  if (n < 1) throw PreconditionError("empty ground");
  EqRel e;
  e.n = n;
  e.class_of.assign(n, 0);
  return e;
}

EqRel eq_discrete(int n) {
  if (n < 1) throw PreconditionError("empty ground");
  EqRel e;
  e.n = n;
  e.class_of.resize(n);
  for (int x = 0; x < n; ++x) e.class_of[x] = x;
  return e;
}

EqRel eq_trivial(const GroundSet& g) { return eq_trivial(g.size); }
EqRel eq_discrete(const GroundSet& g) { return eq_discrete(g.size); }

EqRel eq_from_class_of(std::vector<int> class_of) {
  const int n = static_cast<int>(class_of.size());
  if (n < 1) throw ValidationError("empty ground");
  for (int x = 0; x < n; ++x) {
    const int r = class_of[x];
    if (r < 0 || r > x)
      throw ValidationError("class_of[" + std::to_string(x) +
                            "] must lie in [0, x]");
    if (class_of[r] != r)
      throw ValidationError("class_of[" + std::to_string(x) +
                            "] does not point at a canonical representative");
  }
  EqRel e;
  e.n = n;
  e.class_of = std::move(class_of);
  return e;
}

EqRel eq_from_assignment(const std::vector<int>& block_of) {
  const int n = static_cast<int>(block_of.size());
  if (n < 1) throw ValidationError("empty ground");
  EqRel e;
  e.n = n;
  e.class_of.resize(n);
  std::map<int, int> first_seen;
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = first_seen.try_emplace(block_of[x], x);
    e.class_of[x] = it->second;
  }
  return e;
}

EqRel eq_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw ValidationError("empty ground");
  std::vector<int> block_of(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ValidationError("empty block");
    for (int x : blocks[b]) {
      if (x < 0 || x >= n) throw ValidationError("block element out of range");
      if (block_of[x] != -1) throw ValidationError("blocks overlap");
      block_of[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n; ++x)
    if (block_of[x] == -1) throw ValidationError("blocks do not cover the ground set");
  return eq_from_assignment(block_of);
}

int class_count(const EqRel& e) {
  int count = 0;
  for (int x = 0; x < e.n; ++x)
    if (e.class_of[x] == x) ++count;
  return count;
}

bool is_trivial(const EqRel& e) { return class_count(e) == 1; }
bool is_discrete(const EqRel& e) { return class_count(e) == e.n; }

bool is_refinement(const EqRel& fine, const EqRel& coarse) {
  if (fine.n != coarse.n) throw PreconditionError("mismatched ground sets");
  for (int x = 0; x < fine.n; ++x)
    if (coarse.class_of[x] != coarse.class_of[fine.class_of[x]]) return false;
  return true;
}

std::vector<std::vector<int>> eq_classes(const EqRel& e) {
  std::vector<std::vector<int>> by_rep(e.n);
  for (int x = 0; x < e.n; ++x) by_rep[e.class_of[x]].push_back(x);
  std::vector<std::vector<int>> out;
  for (int r = 0; r < e.n; ++r)
    if (!by_rep[r].empty()) out.push_back(std::move(by_rep[r]));
  return out;
}

std::vector<std::vector<int>> classes_within(const EqRel& e_coarse,
                                             const std::vector<int>& cls,
                                             const EqRel& e_fine) {
  if (e_coarse.n != e_fine.n) throw PreconditionError("mismatched ground sets");
  if (!is_refinement(e_fine, e_coarse))
    throw PreconditionError("e_fine does not refine e_coarse");
  if (cls.empty()) throw PreconditionError("cls not a class of e_coarse");
  const int rep = e_coarse.class_of[cls[0]];
  std::vector<int> actual;
  for (int x = 0; x < e_coarse.n; ++x)
    if (e_coarse.class_of[x] == rep) actual.push_back(x);
  if (actual != cls) throw PreconditionError("cls not a class of e_coarse");

  // cls is ascending, so buckets appear in order of their least element.
  std::vector<std::vector<int>> out;
  std::map<int, size_t> bucket_of;
  for (int x : cls) {
    const int r = e_fine.class_of[x];
    auto [it, inserted] = bucket_of.try_emplace(r, out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(x);
  }
  return out;
}

EqRel eq_intersect(const EqRel& a, const EqRel& b) {
  if (a.n != b.n) throw PreconditionError("mismatched ground sets");
  EqRel e;
  e.n = a.n;
  e.class_of.resize(a.n);
  std::map<std::pair<int, int>, int> first_seen;
  for (int x = 0; x < a.n; ++x) {
    auto [it, inserted] =
        first_seen.try_emplace({a.class_of[x], b.class_of[x]}, x);
    e.class_of[x] = it->second;
  }
  return e;
}

EqRel eq_restrict(const EqRel& e, const std::vector<int>& ids) {
  if (ids.empty()) throw PreconditionError("empty subset");
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= e.n) throw PreconditionError("subset out of range");
    if (i > 0 && ids[i] <= ids[i - 1])
      throw PreconditionError("subset must be strictly ascending");
  }
  EqRel out;
  out.n = static_cast<int>(ids.size());
  out.class_of.resize(out.n);
  std::map<int, int> new_rep;
  for (int i = 0; i < out.n; ++i) {
    const int r = e.class_of[ids[i]];
    auto [it, inserted] = new_rep.try_emplace(r, i);
    out.class_of[i] = it->second;
  }
  return out;
}

PartitionStream::PartitionStream(int n) : n_(n) {
  if (n < 1) throw PreconditionError("empty ground");
  rgs_.assign(n, 0);
}

bool PartitionStream::next(EqRel& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
  } else {
    // Advance to the next restricted growth string: bump the rightmost digit
    // that may still grow (rgs[i] <= max of its prefix), zero the tail.
    std::vector<int> prefix_max(n_, 0);
    for (int j = 1; j < n_; ++j)
      prefix_max[j] = std::max(prefix_max[j - 1], rgs_[j - 1]);
    int i = n_ - 1;
    while (i >= 1 && rgs_[i] > prefix_max[i]) --i;
    if (i < 1) {
      done_ = true;
      return false;
    }
    ++rgs_[i];
    for (int j = i + 1; j < n_; ++j) rgs_[j] = 0;
  }
  out = eq_from_assignment(rgs_);
  return true;
}

}  // namespace eqtower
