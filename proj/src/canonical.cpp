#include "eqtower/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "eqtower/errors.hpp"
#include "internal.hpp"

namespace eqtower {

using detail::iota_ids;
using detail::restrict_values;
using detail::sat_pow;
using detail::select_constant;
using detail::select_injective;

std::optional<int> canonicity_index(const HStructure& s, const Coloring& f) {
  validate_coloring(f);
  if (f.n != s.n())
    throw PreconditionError("coloring ground does not match the structure");
  // Equality pattern of f as a partition of the ground set.
  std::vector<int> block_of(f.n);
  std::map<long long, int> first;
  for (int x = 0; x < f.n; ++x) {
    auto [it, inserted] = first.try_emplace(f.values[x], x);
    block_of[x] = it->second;
  }
  const EqRel pattern = eq_from_assignment(block_of);
  for (int i = s.h(); i >= 0; --i)
    if (s.level(i) == pattern) return i;
  return std::nullopt;
}

BigNat c_bound(int h, const BigNat& w) {
  if (h < 1) throw PreconditionError("h must be at least 1");
  if (w < 0) throw PreconditionError("w must be nonnegative");
  if (w == 0) return BigNat(0);
  if (w == 1) return BigNat(1);
  if (h == 1) return w * w;
  return c_bound(h - 1, big_pow(w, h) * h);
}

BigNat c_closed_bound(int h, const BigNat& w) {
  if (h < 1) throw PreconditionError("h must be at least 1");
  if (w < 2) throw PreconditionError("w must be at least 2");
  if (h > 20) throw PreconditionError("closed bound exponent does not fit");
  const BigNat fact = big_factorial(static_cast<unsigned long>(h));
  const unsigned long exp = 2ul * fact.get_ui();
  return big_pow(fact * w, exp);
}

namespace {

struct CanonRec {
  std::vector<int> subset;  // ids of the current structure's ground
  int rel = 0;              // equality pattern level, relative: 0 = constant
};

// Canonicalization recursion on a fully branching structure. `lenient`
// reports failure instead of relying on the guaranteed width arithmetic; it
// also retries narrow children once at the reduced target.
std::optional<CanonRec> canon_rec(const HStructure& cs,
                                  const std::vector<long long>& vals, int target,
                                  bool lenient) {
  const int k = cs.h();
  const std::vector<int> ids = iota_ids(cs.n());
  if (k == 1) {
    if (auto c = select_constant(ids, vals, target))
      return CanonRec{std::move(c->second), 0};
    if (auto inj = select_injective(ids, vals, target))
      return CanonRec{std::move(*inj), 1};
    if (!lenient) throw std::logic_error("canonicalize: basis pigeonhole failed");
    return std::nullopt;
  }

  // Children are canonicalized at the recursion's enlarged target width.
  const long long cap = static_cast<long long>(cs.n()) + 1;
  const long long child_target_ll =
      std::min(static_cast<long long>(k) * sat_pow(target, k, cap), cap);
  const int child_target = static_cast<int>(std::min<long long>(
      child_target_ll, std::numeric_limits<int>::max()));

  const std::vector<std::vector<int>> kids = eq_classes(cs.levels[1]);
  std::vector<std::vector<int>> kid_subset;
  std::vector<long long> kid_rel;
  for (size_t i = 0; i < kids.size(); ++i) {
    const Induced ind = induce(cs, kids[i]);
    const Compressed cc = compress(ind.structure);
    const std::vector<long long> sub = restrict_values(vals, ind.orig_ids);
    std::optional<CanonRec> rc = canon_rec(cc.structure, sub, child_target, lenient);
    if (!rc && lenient && child_target != target)
      rc = canon_rec(cc.structure, sub, target, lenient);
    if (!rc) {
      if (!lenient) throw std::logic_error("canonicalize: child recursion failed");
      continue;
    }
    for (int& x : rc->subset) x = ind.orig_ids[x];
    kid_subset.push_back(std::move(rc->subset));
    kid_rel.push_back(rc->rel);
  }
  if (kid_subset.empty()) return std::nullopt;

  // Align the per-child pattern levels.
  const std::vector<int> kidx = iota_ids(static_cast<int>(kid_subset.size()));
  std::map<long long, int> rel_counts;
  for (long long r : kid_rel) ++rel_counts[r];
  long long best_rel = 0;
  int best_count = 0;
  for (const auto& [r, cnt] : rel_counts) {
    if (cnt > best_count) {
      best_count = cnt;
      best_rel = r;
    }
  }
  std::vector<int> aligned;
  for (int i : kidx)
    if (kid_rel[i] == best_rel) aligned.push_back(i);
  const long long need_classes = sat_pow(target, k, cap);
  if (!lenient) {
    if (static_cast<long long>(aligned.size()) < need_classes)
      throw std::logic_error("canonicalize: alignment pigeonhole failed");
    aligned.resize(static_cast<size_t>(need_classes));
  }

  if (best_rel == 0) {
    // Children are constant; split on the induced class-value function.
    std::vector<long long> g;
    g.reserve(aligned.size());
    for (int i : aligned) g.push_back(vals[kid_subset[i][0]]);
    const std::vector<int> gids = iota_ids(static_cast<int>(aligned.size()));
    std::vector<int> chosen;
    int rel = 0;
    if (auto c = select_constant(gids, g, target)) {
      chosen = std::move(c->second);
      rel = 0;
    } else if (auto inj = select_injective(gids, g, target)) {
      chosen = std::move(*inj);
      rel = 1;
    } else {
      if (!lenient) throw std::logic_error("canonicalize: class-value pigeonhole failed");
      return std::nullopt;
    }
    std::vector<int> out;
    for (int i : chosen) {
      const std::vector<int>& part = kid_subset[aligned[i]];
      out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return CanonRec{std::move(out), rel};
  }

  // Children share a deeper pattern level; merge them and realign there.
  if (aligned.size() < 2) {
    if (!lenient) throw std::logic_error("canonicalize: too few aligned classes");
    return std::nullopt;
  }
  std::vector<int> merged;
  for (int i : aligned)
    merged.insert(merged.end(), kid_subset[i].begin(), kid_subset[i].end());
  std::sort(merged.begin(), merged.end());

  const Induced ind = induce(cs, merged);
  Coloring fz;
  fz.n = ind.structure.n();
  fz.values = restrict_values(vals, ind.orig_ids);
  const int k_param = static_cast<int>(best_rel);  // pattern = level k_param + 1
  std::vector<int> out;
  try {
    CanonicalKResult ck = canonical_k_extract(ind.structure, fz, k_param, target);
    out = std::move(ck.subset);
  } catch (const PreconditionError&) {
    if (!lenient) throw;
    return std::nullopt;
  }
  for (int& x : out) x = ind.orig_ids[x];
  return CanonRec{std::move(out), static_cast<int>(best_rel) + 1};
}

}  // namespace

std::optional<CanonicalizeResult> canonicalize(const HStructure& s, const Coloring& f,
                                               int w, ExtractMode mode) {
  validate_coloring(f);
  if (f.n != s.n())
    throw PreconditionError("coloring ground does not match the structure");
  if (w < 2) throw PreconditionError("target width must be at least 2");
  const std::vector<int> index_set = special_index_set(s);
  if (index_set.empty())
    throw PreconditionError("structure has no special certificate (index set empty)");
  const std::optional<int> width = special_width(s);
  if (!width || *width < 2)
    throw PreconditionError("structure has no special certificate (width below 2)");
  const int k = static_cast<int>(index_set.size());
  if (mode == ExtractMode::Guaranteed) {
    const BigNat need = c_bound(k, BigNat(w));
    if (BigNat(*width) < need)
      throw PreconditionError("guaranteed mode needs width at least c_bound(" +
                              std::to_string(k) + ", " + std::to_string(w) + ") = " +
                              to_decimal(need));
  }

  const Compressed cmp = compress(s);
  std::optional<CanonRec> rec;
  if (mode == ExtractMode::Guaranteed) {
    rec = canon_rec(cmp.structure, f.values, w, /*lenient=*/false);
  } else {
    rec = canon_rec(cmp.structure, f.values, w, /*lenient=*/true);
  }
  if (!rec) {
    if (mode == ExtractMode::Guaranteed)
      throw std::logic_error("canonicalize: guaranteed extraction failed");
    return std::nullopt;
  }

  const Induced ind = induce(s, rec->subset);
  if (!is_special(ind.structure, index_set, w))
    throw std::logic_error("canonicalize: output does not induce the promised shape");
  Coloring fy;
  fy.n = ind.structure.n();
  fy.values = restrict_values(f.values, ind.orig_ids);
  const std::optional<int> idx = canonicity_index(ind.structure, fy);
  if (!idx) throw std::logic_error("canonicalize: output is not canonical");
  return CanonicalizeResult{std::move(rec->subset), *idx};
}

namespace {

// Exhaustive goodness check at height 1: every partition of [0, n) must have
// a block of size >= w or at least w blocks. Enumerates restricted growth
// strings depth-first, pruning a branch as soon as its prefix turns good
// (goodness is monotone under adding elements).
bool every_coloring_good_h1(long long n, int w) {
  std::vector<int> counts(static_cast<size_t>(n), 0);
  int blocks = 0;

  std::function<bool(int, int)> exists_bad = [&](int pos, int max_digit) -> bool {
    if (pos == n) return true;  // a complete coloring survived every prune
    const int limit = std::min<int>(max_digit + 1, static_cast<int>(n) - 1);
    for (int b = 0; b <= limit; ++b) {
      if (counts[b] == 0) ++blocks;
      ++counts[b];
      const bool good = counts[b] >= w || blocks >= w;
      const bool bad = !good && exists_bad(pos + 1, std::max(max_digit, b));
      --counts[b];
      if (counts[b] == 0) --blocks;
      if (bad) return true;
    }
    return false;
  };
  return !exists_bad(0, -1);
}

// Exhaustive goodness check at height 2, w = 2, over the exact shape with v
// classes of v elements each. A coloring is good when two classes contain
// two elements each realizing one of the canonical patterns: all four values
// equal; equal within each class and distinct across; all four distinct.
bool every_coloring_good_h2w2(int v) {
  const int n = v * v;
  std::vector<uint64_t> present(v, 0), repeated(v, 0);
  std::vector<std::vector<int>> counts(v, std::vector<int>(n, 0));

  // Whether placing value `val` into class `cls` completed a pattern. The
  // prefix was bad before, so only pairs involving `cls` can have turned.
  const auto good_after = [&](int cls, int val) -> bool {
    const uint64_t bit = uint64_t{1} << val;
    if (repeated[cls] & bit) {
      for (int j = 0; j < v; ++j) {
        if (j == cls) continue;
        if (repeated[j] & bit) return true;   // constant on 2 + 2 elements
        if (repeated[j] & ~bit) return true;  // aligned: distinct repeats
      }
    }
    const uint64_t a = present[cls];
    if (__builtin_popcountll(a) >= 2) {
      for (int j = 0; j < v; ++j) {
        if (j == cls) continue;
        const uint64_t b = present[j];
        // 2 + 2 globally distinct values are selectable iff both classes
        // hold two values and the union holds four.
        if (__builtin_popcountll(b) >= 2 && __builtin_popcountll(a | b) >= 4)
          return true;
      }
    }
    return false;
  };

  std::function<bool(int, int)> exists_bad = [&](int pos, int max_digit) -> bool {
    if (pos == n) return true;
    const int cls = pos / v;
    const int limit = std::min(max_digit + 1, n - 1);
    for (int b = 0; b <= limit; ++b) {
      const uint64_t bit = uint64_t{1} << b;
      ++counts[cls][b];
      const uint64_t p_save = present[cls];
      const uint64_t r_save = repeated[cls];
      present[cls] |= bit;
      if (counts[cls][b] >= 2) repeated[cls] |= bit;
      const bool good = good_after(cls, b);
      const bool bad = !good && exists_bad(pos + 1, std::max(max_digit, b));
      present[cls] = p_save;
      repeated[cls] = r_save;
      --counts[cls][b];
      if (bad) return true;
    }
    return false;
  };
  return !exists_bad(0, -1);
}

}  // namespace

std::optional<long long> c_exact(int h, int w, long long cap) {
  if (h != 1 && h != 2)
    throw PreconditionError("exact oracle supports heights 1 and 2 only");
  if (w < 2) throw PreconditionError("w must be at least 2");
  if (cap < 2) throw PreconditionError("cap must be at least 2");
  if (h == 2 && w != 2)
    throw PreconditionError("exact oracle at height 2 supports w = 2 only");
  if (h == 2 && cap > 8) cap = 8;  // v*v values must fit the 64-bit masks

  for (long long v = 2; v <= cap; ++v) {
    const bool good =
        h == 1 ? every_coloring_good_h1(v, w) : every_coloring_good_h2w2(static_cast<int>(v));
    if (good) return v;
  }
  return std::nullopt;
}

}  // namespace eqtower
