#include "eqtower/hstructure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "eqtower/errors.hpp"

namespace eqtower {

EqRel HStructure::level(int i) const {
  if (i < 0 || i > h()) throw PreconditionError("level index out of range");
  if (i == h()) return eq_discrete(n());
  return levels[i];
}

HStructure make_hstructure(GroundSet g, std::vector<EqRel> levels) {
  HStructure s;
  s.ground = std::move(g);
  s.levels = std::move(levels);
  validate_hstructure(s);
  return s;
}

void validate_hstructure(const HStructure& s) {
  validate_ground(s.ground);
  if (s.levels.empty()) throw ValidationError("a tower needs at least one level");
  for (const EqRel& e : s.levels) {
    if (e.n != s.ground.size)
      throw ValidationError("level ground size does not match the structure");
    // Canonical form of each level is enforced at construction of the EqRel.
  }
  if (!is_trivial(s.levels[0]))
    throw ValidationError("level 0 must be the trivial relation");
  for (int i = 0; i + 1 < s.h(); ++i)
    if (!is_refinement(s.levels[i + 1], s.levels[i]))
      throw ValidationError("level " + std::to_string(i + 1) +
                            " does not refine level " + std::to_string(i));
}

HStructure basic_structure(int h, int cap) {
  if (h < 2) throw PreconditionError("basic structure needs h >= 2");
  if (h > cap) throw PreconditionError("basic structure capped at h = " +
                                       std::to_string(cap));
  long long n = 1;
  for (int i = 0; i < h; ++i) n *= h;

  GroundSet g;
  g.size = static_cast<int>(n);
  g.labels.reserve(n);
  for (long long x = 0; x < n; ++x) {
    std::string digits(h, '0');
    long long rest = x;
    for (int j = h - 1; j >= 0; --j) {
      digits[j] = static_cast<char>('0' + rest % h);
      rest /= h;
    }
    g.labels.push_back(digits);
  }

  std::vector<EqRel> levels;
  levels.reserve(h);
  long long block = n;  // h^(h-i) at level i
  for (int i = 0; i < h; ++i) {
    EqRel e;
    e.n = static_cast<int>(n);
    e.class_of.resize(n);
    for (long long x = 0; x < n; ++x)
      e.class_of[x] = static_cast<int>(x / block * block);
    levels.push_back(std::move(e));
    block /= h;
  }
  return make_hstructure(std::move(g), std::move(levels));
}

std::vector<int> special_index_set(const HStructure& s) {
  std::vector<int> out;
  for (int i = 0; i < s.h(); ++i) {
    if (is_discrete(s.levels[i])) continue;
    // Last occurrence: the tower is weakly decreasing, so the relation at i
    // recurs later iff it equals the one at i+1.
    if (i + 1 < s.h() && s.levels[i] == s.levels[i + 1]) continue;
    out.push_back(i);
  }
  return out;
}

std::optional<int> special_width(const HStructure& s) {
  const std::vector<int> index_set = special_index_set(s);
  if (index_set.empty()) return std::nullopt;
  int width = s.n() + 1;
  for (int i : index_set) {
    const EqRel coarse = s.level(i);
    const EqRel fine = s.level(i + 1);
    // Children per class: distinct fine-representatives per coarse-class.
    std::map<int, std::set<int>> children;
    for (int x = 0; x < s.n(); ++x)
      children[coarse.class_of[x]].insert(fine.class_of[x]);
    for (const auto& [rep, kids] : children)
      width = std::min(width, static_cast<int>(kids.size()));
  }
  return width;
}

bool is_special(const HStructure& s, const std::vector<int>& index_set, int w) {
  if (w < 2) throw PreconditionError("special width must be at least 2");
  if (index_set.empty()) return false;
  if (index_set != special_index_set(s)) return false;
  const std::optional<int> width = special_width(s);
  return width.has_value() && *width >= w;
}

SpecialCert certificate(const HStructure& s) {
  SpecialCert cert;
  cert.index_set = special_index_set(s);
  cert.width = special_width(s).value_or(0);
  return cert;
}

Induced induce(const HStructure& s, const std::vector<int>& subset) {
  if (subset.empty()) throw PreconditionError("empty subset");
  Induced out;
  out.orig_ids = subset;
  GroundSet g;
  g.size = static_cast<int>(subset.size());
  if (!s.ground.labels.empty()) {
    g.labels.reserve(subset.size());
    for (int x : subset) {
      if (x < 0 || x >= s.n()) throw PreconditionError("subset out of range");
      g.labels.push_back(s.ground.labels[x]);
    }
  }
  std::vector<EqRel> levels;
  levels.reserve(s.h());
  for (const EqRel& e : s.levels) levels.push_back(eq_restrict(e, subset));
  out.structure = make_hstructure(std::move(g), std::move(levels));
  return out;
}

std::vector<int> shrink(const HStructure& s, const std::vector<int>& sub_index_set,
                        int v) {
  const std::vector<int> index_set = special_index_set(s);
  if (sub_index_set.empty()) throw PreconditionError("sub index set must be nonempty");
  if (!std::includes(index_set.begin(), index_set.end(), sub_index_set.begin(),
                     sub_index_set.end()))
    throw PreconditionError("sub index set must be contained in the special index set");
  if (v < 2) throw PreconditionError("target width must be at least 2");
  const std::optional<int> width = special_width(s);
  if (!width || *width < v)
    throw PreconditionError("target width exceeds the structure width");

  std::vector<int> all(s.n());
  for (int x = 0; x < s.n(); ++x) all[x] = x;
  std::vector<std::vector<int>> current{all};
  for (int i = 0; i < s.h(); ++i) {
    const bool branch_here =
        std::binary_search(sub_index_set.begin(), sub_index_set.end(), i);
    const EqRel fine = s.level(i + 1);
    std::vector<std::vector<int>> kept;
    for (const std::vector<int>& cls : current) {
      // Group by the fine relation; buckets come out in order of least element.
      std::vector<std::vector<int>> kids;
      std::map<int, size_t> bucket_of;
      for (int x : cls) {
        auto [it, inserted] = bucket_of.try_emplace(fine.class_of[x], kids.size());
        if (inserted) kids.emplace_back();
        kids[it->second].push_back(x);
      }
      const size_t take = branch_here ? static_cast<size_t>(v) : 1;
      for (size_t t = 0; t < take && t < kids.size(); ++t)
        kept.push_back(std::move(kids[t]));
    }
    current = std::move(kept);
  }
  std::vector<int> result;
  for (const std::vector<int>& cls : current)
    for (int x : cls) result.push_back(x);
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// Tree assembly for extend(): leaves carry (element id, ancestor node ids per
// depth). Old leaves keep their ids; fresh leaves are numbered afterwards in
// emission order.
struct TreeBuilder {
  const HStructure* s = nullptr;
  int h_new = 0;
  const std::vector<int>* index_set_new = nullptr;
  int w_new = 0;
  int next_node = 0;
  int fresh_count = 0;
  // leaf element id (old id, or -(k+1) for the k-th fresh leaf), path of node
  // ids at depths 0..h_new-1 (depth h_new is the leaf itself).
  std::vector<std::pair<int, std::vector<int>>> leaves;
  std::vector<int> path;

  bool branches_at(int depth) const {
    return std::binary_search(index_set_new->begin(), index_set_new->end(), depth);
  }

  void emit_fresh(int depth) {
    if (depth == h_new) {
      leaves.emplace_back(-(++fresh_count), path);
      return;
    }
    const int kids = branches_at(depth) ? w_new : 1;
    for (int t = 0; t < kids; ++t) {
      path.push_back(next_node++);
      emit_fresh(depth + 1);
      path.pop_back();
    }
  }

  void emit_old_chain(int x, int depth) {
    if (depth == h_new) {
      leaves.emplace_back(x, path);
      return;
    }
    path.push_back(next_node++);
    emit_old_chain(x, depth + 1);
    path.pop_back();
    if (branches_at(depth)) {
      for (int t = 1; t < w_new; ++t) {
        path.push_back(next_node++);
        emit_fresh(depth + 1);
        path.pop_back();
      }
    }
  }

  void emit_old(const std::vector<int>& cls, int depth) {
    if (depth == s->h()) {
      emit_old_chain(cls[0], depth);
      return;
    }
    const std::vector<std::vector<int>> kids =
        classes_within(s->level(depth), cls, s->level(depth + 1));
    for (const std::vector<int>& kid : kids) {
      path.push_back(next_node++);
      emit_old(kid, depth + 1);
      path.pop_back();
    }
    if (branches_at(depth)) {
      for (size_t t = kids.size(); t < static_cast<size_t>(w_new); ++t) {
        path.push_back(next_node++);
        emit_fresh(depth + 1);
        path.pop_back();
      }
    }
  }
};

}  // namespace

HStructure extend(const HStructure& s, int h_new,
                  const std::vector<int>& index_set_new, int w_new) {
  const std::vector<int> index_set = special_index_set(s);
  if (h_new < s.h()) throw PreconditionError("cannot extend to fewer levels");
  if (w_new < 2) throw PreconditionError("target width must be at least 2");
  if (!index_set_new.empty() &&
      (index_set_new.front() < 0 || index_set_new.back() >= h_new))
    throw PreconditionError("index set out of range for the target height");
  if (!std::includes(index_set_new.begin(), index_set_new.end(),
                     index_set.begin(), index_set.end()))
    throw PreconditionError("target index set must contain the special index set");
  if (index_set_new.empty())
    throw PreconditionError("target index set must be nonempty");

  TreeBuilder tb;
  tb.s = &s;
  tb.h_new = h_new;
  tb.index_set_new = &index_set_new;
  tb.w_new = w_new;
  std::vector<int> all(s.n());
  for (int x = 0; x < s.n(); ++x) all[x] = x;
  tb.path.push_back(tb.next_node++);  // the root: level 0 stays trivial
  tb.emit_old(all, 0);
  tb.path.pop_back();

  const int n_total = static_cast<int>(tb.leaves.size());
  // Fresh leaves get ids after the old ones, in emission order.
  int next_fresh_id = s.n();
  std::vector<int> elem_of_leaf(n_total);
  for (int l = 0; l < n_total; ++l) {
    const int tag = tb.leaves[l].first;
    elem_of_leaf[l] = tag >= 0 ? tag : next_fresh_id++;
  }

  std::vector<EqRel> levels;
  levels.reserve(h_new);
  for (int depth = 0; depth < h_new; ++depth) {
    // Elements share a level-`depth` class iff they share the depth ancestor.
    std::map<int, int> least_elem;
    for (int l = 0; l < n_total; ++l) {
      const int node = tb.leaves[l].second[depth];
      auto [it, inserted] = least_elem.try_emplace(node, elem_of_leaf[l]);
      if (!inserted) it->second = std::min(it->second, elem_of_leaf[l]);
    }
    EqRel e;
    e.n = n_total;
    e.class_of.resize(n_total);
    for (int l = 0; l < n_total; ++l)
      e.class_of[elem_of_leaf[l]] = least_elem[tb.leaves[l].second[depth]];
    levels.push_back(std::move(e));
  }

  GroundSet g;
  g.size = n_total;
  if (n_total == s.n() && h_new == s.h()) g.labels = s.ground.labels;
  return make_hstructure(std::move(g), std::move(levels));
}

HStructure exact_shape(int h, const std::vector<int>& index_set, int w) {
  if (h < 1) throw PreconditionError("height must be at least 1");
  if (w < 2) throw PreconditionError("width must be at least 2");
  if (index_set.empty()) throw PreconditionError("index set must be nonempty");
  if (index_set.front() < 0 || index_set.back() >= h)
    throw PreconditionError("index set out of range");
  for (size_t j = 1; j < index_set.size(); ++j)
    if (index_set[j] <= index_set[j - 1])
      throw PreconditionError("index set must be strictly ascending");

  const int k = static_cast<int>(index_set.size());
  constexpr long long kMaxElements = 1'000'000;
  long long n = 1;
  for (int j = 0; j < k; ++j) {
    n *= w;
    if (n > kMaxElements) throw PreconditionError("exact shape too large");
  }

  std::vector<EqRel> levels;
  levels.reserve(h);
  for (int i = 0; i < h; ++i) {
    // Digits fixed so far: one per special index below i.
    const int cnt = static_cast<int>(
        std::lower_bound(index_set.begin(), index_set.end(), i) - index_set.begin());
    long long block = 1;
    for (int j = 0; j < k - cnt; ++j) block *= w;
    EqRel e;
    e.n = static_cast<int>(n);
    e.class_of.resize(n);
    for (long long x = 0; x < n; ++x)
      e.class_of[x] = static_cast<int>(x / block * block);
    levels.push_back(std::move(e));
  }
  GroundSet g;
  g.size = static_cast<int>(n);
  return make_hstructure(std::move(g), std::move(levels));
}

Quotient quotient(const HStructure& s, int k) {
  if (k < 0 || k >= s.h()) throw PreconditionError("level index out of range");
  Quotient out;
  if (k == 0) {
    std::vector<int> all(s.n());
    for (int x = 0; x < s.n(); ++x) all[x] = x;
    out.class_elements = {all};
    out.structure = make_hstructure(ground(1), {eq_trivial(1)});
    return out;
  }
  out.class_elements = eq_classes(s.levels[k]);
  const int m = static_cast<int>(out.class_elements.size());
  std::vector<EqRel> levels;
  levels.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> block_of(m);
    for (int z = 0; z < m; ++z)
      block_of[z] = s.levels[i].class_of[out.class_elements[z][0]];
    levels.push_back(eq_from_assignment(block_of));
  }
  out.structure = make_hstructure(ground(m), std::move(levels));
  return out;
}

Compressed compress(const HStructure& s) {
  const std::vector<int> index_set = special_index_set(s);
  if (index_set.empty())
    throw PreconditionError("cannot compress: special index set is empty");
  Compressed out;
  out.level_map = index_set;
  std::vector<EqRel> levels;
  levels.reserve(index_set.size());
  for (int i : index_set) levels.push_back(s.levels[i]);
  out.structure = make_hstructure(s.ground, std::move(levels));
  return out;
}

}  // namespace eqtower
