#include "eqtower/extraction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "eqtower/canonical.hpp"
#include "eqtower/errors.hpp"
#include "internal.hpp"

namespace eqtower {

using detail::iota_ids;
using detail::restrict_values;
using detail::sat_pow;
using detail::select_constant;
using detail::select_injective;

namespace {

void check_same_ground(const HStructure& s, const Coloring& f) {
  validate_coloring(f);
  if (f.n != s.n()) throw PreconditionError("coloring ground does not match the structure");
}

// Requires a nonempty special index set; returns it with the exact width.
SpecialCert require_certificate(const HStructure& s) {
  SpecialCert cert = certificate(s);
  if (cert.index_set.empty())
    throw PreconditionError("structure has no special certificate (index set empty)");
  return cert;
}

void verify_induced(const HStructure& s, const std::vector<int>& subset,
                    const std::vector<int>& expect_index_set, int w,
                    const char* who) {
  const Induced ind = induce(s, subset);
  if (!is_special(ind.structure, expect_index_set, w))
    throw std::logic_error(std::string(who) +
                           ": output does not induce the promised special substructure");
}

}  // namespace

void validate_coloring(const Coloring& f) {
  if (f.n < 1) throw ValidationError("empty ground");
  if (static_cast<int>(f.values.size()) != f.n)
    throw ValidationError("coloring must assign a value to every element");
  for (long long v : f.values)
    if (v < 0) throw ValidationError("coloring values must be nonnegative");
}

Php1Result php1(const Coloring& f, int a, long long c) {
  validate_coloring(f);
  if (a < 0) throw PreconditionError("a must be nonnegative");
  if (c < 1) throw PreconditionError("c must be at least 1");
  if (static_cast<long long>(f.n) < c * a + 1)
    throw PreconditionError("domain too small: need at least c*a+1 elements");
  for (int x = 0; x < f.n; ++x)
    if (f.values[x] >= c)
      throw PreconditionError("value out of range at element " + std::to_string(x));
  auto picked = select_constant(iota_ids(f.n), f.values, a + 1);
  if (!picked) throw std::logic_error("php1: pigeonhole failed");
  return {std::move(picked->second), picked->first};
}

Php2Result php2(const Coloring& f, int a) {
  validate_coloring(f);
  if (a < 0) throw PreconditionError("a must be nonnegative");
  if (static_cast<long long>(f.n) < static_cast<long long>(a) * a + 1)
    throw PreconditionError("domain too small: need at least a*a+1 elements");
  const std::vector<int> ids = iota_ids(f.n);
  if (auto picked = select_constant(ids, f.values, a + 1))
    return {std::move(picked->second), Php2Mode::Constant};
  auto reps = select_injective(ids, f.values, a + 1);
  if (!reps) throw std::logic_error("php2: pigeonhole failed");
  return {std::move(*reps), Php2Mode::Injective};
}

namespace {

// Recursion for the monochromatic extractor, on the compressed (fully
// branching) structure. Returns ids of the structure's own ground.
std::pair<std::vector<int>, long long> mono_rec(const HStructure& cs,
                                                const std::vector<long long>& vals,
                                                int w) {
  if (cs.h() == 1) {
    auto picked = select_constant(iota_ids(cs.n()), vals, w);
    if (!picked) throw std::logic_error("mono_rec: basis pigeonhole failed");
    return {std::move(picked->second), picked->first};
  }
  const std::vector<std::vector<int>> kids = eq_classes(cs.levels[1]);
  std::vector<std::vector<int>> sub_y(kids.size());
  std::vector<long long> sub_d(kids.size());
  for (size_t i = 0; i < kids.size(); ++i) {
    const Induced ind = induce(cs, kids[i]);
    const Compressed cc = compress(ind.structure);
    auto [y, d] = mono_rec(cc.structure, restrict_values(vals, ind.orig_ids), w);
    for (int& x : y) x = ind.orig_ids[x];
    sub_y[i] = std::move(y);
    sub_d[i] = d;
  }
  // Align the per-class colors, keep the w least classes of the winner.
  auto picked = select_constant(iota_ids(static_cast<int>(kids.size())), sub_d, w);
  if (!picked) throw std::logic_error("mono_rec: alignment pigeonhole failed");
  std::vector<int> out;
  for (int i : picked->second)
    out.insert(out.end(), sub_y[i].begin(), sub_y[i].end());
  std::sort(out.begin(), out.end());
  return {std::move(out), picked->first};
}

}  // namespace

MonoResult mono_extract(const HStructure& s, const Coloring& f, long long c, int w) {
  check_same_ground(s, f);
  if (c < 1) throw PreconditionError("c must be at least 1");
  if (w < 2) throw PreconditionError("target width must be at least 2");
  for (int x = 0; x < f.n; ++x)
    if (f.values[x] >= c)
      throw PreconditionError("value out of range at element " + std::to_string(x));
  const SpecialCert cert = require_certificate(s);
  if (static_cast<long long>(cert.width) < c * w)
    throw PreconditionError("width below c*w: have " + std::to_string(cert.width) +
                            ", need " + std::to_string(c * w));

  const Compressed cmp = compress(s);  // same ground ids
  auto [subset, value] = mono_rec(cmp.structure, f.values, w);
  verify_induced(s, subset, cert.index_set, w, "mono_extract");
  for (int x : subset)
    if (f.values[x] != value) throw std::logic_error("mono_extract: not constant");
  return {std::move(subset), value};
}

namespace {

// Shared core of the injective extractor: prune the compressed structure to
// the exact shape (w children per branching, w^k elements per deepest class)
// and greedily take, per deepest class, the w least elements whose values
// were not used earlier. `lenient` reports failure instead of relying on the
// width arithmetic.
std::optional<std::vector<int>> injective_core(const HStructure& cs,
                                               const std::vector<long long>& vals,
                                               int w, bool lenient) {
  const int k = cs.h();
  const long long deep_need = sat_pow(w, k, static_cast<long long>(cs.n()) + 1);

  std::vector<std::vector<int>> current{iota_ids(cs.n())};
  for (int j = 0; j + 1 < k; ++j) {
    std::vector<std::vector<int>> kept;
    for (const std::vector<int>& cls : current) {
      const std::vector<std::vector<int>> kids =
          classes_within(cs.level(j), cls, cs.level(j + 1));
      if (static_cast<int>(kids.size()) < w) {
        if (lenient) return std::nullopt;
        throw std::logic_error("injective_core: branching narrower than promised");
      }
      for (int t = 0; t < w; ++t) kept.push_back(kids[t]);
    }
    current = std::move(kept);
  }
  // `current` now holds the surviving deepest classes, in canonical order.
  std::set<long long> used;
  std::vector<int> out;
  for (std::vector<int>& cls : current) {
    if (static_cast<long long>(cls.size()) < deep_need) {
      if (lenient) return std::nullopt;
      throw std::logic_error("injective_core: deepest class narrower than promised");
    }
    cls.resize(static_cast<size_t>(deep_need));
    int taken = 0;
    for (int x : cls) {
      if (used.count(vals[x])) continue;
      used.insert(vals[x]);
      out.push_back(x);
      if (++taken == w) break;
    }
    if (taken < w) {
      if (lenient) return std::nullopt;
      throw std::logic_error("injective_core: ran out of unused values");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_classwise_injective(const HStructure& s, const Coloring& f, int k) {
  for (const std::vector<int>& cls : eq_classes(s.level(k))) {
    std::map<long long, int> seen;
    for (int x : cls) {
      auto [it, inserted] = seen.try_emplace(f.values[x], x);
      if (!inserted)
        throw PreconditionError(
            "f is not one-to-one on a level-" + std::to_string(k) + " class: f(" +
            std::to_string(it->second) + ") = f(" + std::to_string(x) + ") = " +
            std::to_string(f.values[x]));
    }
  }
}

}  // namespace

std::vector<int> injective_extract(const HStructure& s, const Coloring& f, int w) {
  check_same_ground(s, f);
  if (w < 2) throw PreconditionError("target width must be at least 2");
  const SpecialCert cert = require_certificate(s);
  const int k = cert.index_set.back();
  const long long need = sat_pow(w, k + 1, static_cast<long long>(s.n()) + 1);
  if (cert.width < need)
    throw PreconditionError("width below w^(k+1): have " + std::to_string(cert.width) +
                            ", need " + std::to_string(need));
  check_classwise_injective(s, f, k);

  const Compressed cmp = compress(s);
  auto subset = injective_core(cmp.structure, f.values, w, /*lenient=*/false);
  verify_induced(s, *subset, cert.index_set, w, "injective_extract");
  std::set<long long> vals;
  for (int x : *subset)
    if (!vals.insert(f.values[x]).second)
      throw std::logic_error("injective_extract: not one-to-one");
  return std::move(*subset);
}

CanonicalKResult canonical_k_extract(const HStructure& s, const Coloring& f, int k,
                                     int w) {
  check_same_ground(s, f);
  if (w < 2) throw PreconditionError("target width must be at least 2");
  const SpecialCert cert = require_certificate(s);
  if (!std::binary_search(cert.index_set.begin(), cert.index_set.end(), k))
    throw PreconditionError("k must be a special index");
  const long long need = sat_pow(w, k + 1, static_cast<long long>(s.n()) + 1);
  if (cert.width < need)
    throw PreconditionError("width below w^(k+1): have " + std::to_string(cert.width) +
                            ", need " + std::to_string(need));

  // Hypotheses: f constant on each level-(k+1) class, distinct across the
  // level-(k+1) classes inside any level-k class.
  const EqRel succ = s.level(k + 1);
  for (const std::vector<int>& cls : eq_classes(succ)) {
    for (int x : cls) {
      if (f.values[x] != f.values[cls[0]])
        throw PreconditionError("f is not constant on a level-" + std::to_string(k + 1) +
                                " class: f(" + std::to_string(cls[0]) + ") = " +
                                std::to_string(f.values[cls[0]]) + " but f(" +
                                std::to_string(x) + ") = " +
                                std::to_string(f.values[x]));
    }
  }
  const EqRel at_k = s.level(k);
  for (const std::vector<int>& cls : eq_classes(at_k)) {
    std::map<long long, int> value_rep;
    for (const std::vector<int>& sub : classes_within(at_k, cls, succ)) {
      auto [it, inserted] = value_rep.try_emplace(f.values[sub[0]], sub[0]);
      if (!inserted)
        throw PreconditionError(
            "distinct level-" + std::to_string(k + 1) + " classes inside a level-" +
            std::to_string(k) + " class share the value " +
            std::to_string(f.values[sub[0]]) + " (elements " +
            std::to_string(it->second) + " and " + std::to_string(sub[0]) + ")");
    }
  }

  std::vector<int> subset;
  if (k == cert.index_set.back()) {
    // The successor level is discrete, so f is one-to-one on each level-k
    // class and this reduces to the injective extractor.
    subset = injective_extract(s, f, w);
  } else {
    const Quotient q = quotient(s, k + 1);
    Coloring g;
    g.n = q.structure.n();
    g.values.reserve(g.n);
    for (const std::vector<int>& cls : q.class_elements)
      g.values.push_back(f.values[cls[0]]);
    const std::vector<int> picked = injective_extract(q.structure, g, w);
    for (int z : picked)
      subset.insert(subset.end(), q.class_elements[z].begin(),
                    q.class_elements[z].end());
    std::sort(subset.begin(), subset.end());
  }

  verify_induced(s, subset, cert.index_set, w, "canonical_k_extract");
  const Induced ind = induce(s, subset);
  Coloring fy;
  fy.n = ind.structure.n();
  fy.values = restrict_values(f.values, ind.orig_ids);
  const std::optional<int> idx = canonicity_index(ind.structure, fy);
  if (!idx) throw std::logic_error("canonical_k_extract: output is not canonical");
  return {std::move(subset), *idx};
}

std::optional<DichotomyResult> dichotomy_extract(const HStructure& s,
                                                 const Coloring& f, int w,
                                                 ExtractMode mode) {
  check_same_ground(s, f);
  if (w < 2) throw PreconditionError("target width must be at least 2");
  const SpecialCert cert = require_certificate(s);
  const int k = static_cast<int>(cert.index_set.size());
  if (mode == ExtractMode::Guaranteed) {
    const BigNat need = c_closed_bound(k, w);
    if (BigNat(cert.width) < need)
      throw PreconditionError("guaranteed mode needs width at least (k!w)^(2k!) = " +
                              to_decimal(need));
  }
  if (k == 1) {
    // A single special index carries no obligation in either direction.
    return DichotomyResult{cert.index_set[0], std::nullopt, std::nullopt};
  }

  const std::optional<CanonicalizeResult> canon = canonicalize(s, f, w, mode);
  if (!canon) return std::nullopt;

  const auto subset_shrink = [&](const std::vector<int>& within,
                                 const std::vector<int>& idx_set) {
    const Induced ind = induce(s, within);
    std::vector<int> picked = shrink(ind.structure, idx_set, w);
    for (int& x : picked) x = ind.orig_ids[x];
    return picked;
  };

  DichotomyResult out;
  const int idx = canon->canonical_index;
  if (idx == s.h()) {
    out.level = cert.index_set.back();
  } else {
    if (!std::binary_search(cert.index_set.begin(), cert.index_set.end(), idx))
      throw std::logic_error("dichotomy_extract: canonical index is not special");
    out.level = idx;
  }
  if (out.level != cert.index_set.back()) {
    std::vector<int> tail(std::lower_bound(cert.index_set.begin(),
                                           cert.index_set.end(), out.level),
                          cert.index_set.end());
    out.constant_subset = subset_shrink(canon->subset, tail);
  }
  if (out.level != cert.index_set.front()) {
    std::vector<int> head(cert.index_set.begin(),
                          std::lower_bound(cert.index_set.begin(),
                                           cert.index_set.end(), out.level));
    out.injective_subset = subset_shrink(canon->subset, head);
  }
  return out;
}

}  // namespace eqtower
