#include "eqtower/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "eqtower/errors.hpp"

namespace eqtower {

namespace {

void check_table_shape(int n, const std::vector<uint8_t>& leq) {
  if (n < 1) throw ValidationError("lattice must be nonempty");
  if (leq.size() != static_cast<size_t>(n) * n)
    throw ValidationError("order table must be n*n");
}

// Empty string when the table is a lattice order; otherwise the reason.
std::string lattice_defect(int n, const std::vector<uint8_t>& leq) {
  const auto le = [&](int a, int b) { return leq[static_cast<size_t>(a) * n + b] != 0; };
  for (int a = 0; a < n; ++a)
    if (!le(a, a)) return "not reflexive at " + std::to_string(a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a))
        return "not antisymmetric at " + std::to_string(a) + "," + std::to_string(b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          return "not transitive at " + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int join = -1, meet = -1;
      for (int c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (le(a, d) && le(b, d) && !le(c, d)) least = false;
          if (least) join = c;
        }
        if (le(c, a) && le(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
          if (greatest) meet = c;
        }
      }
      if (join < 0)
        return "no join for " + std::to_string(a) + "," + std::to_string(b);
      if (meet < 0)
        return "no meet for " + std::to_string(a) + "," + std::to_string(b);
    }
  }
  return {};
}

}  // namespace

FiniteLattice make_lattice(int n, const std::vector<uint8_t>& leq) {
  check_table_shape(n, leq);
  const std::string defect = lattice_defect(n, leq);
  if (!defect.empty()) throw ValidationError("not a lattice: " + defect);

  FiniteLattice L;
  L.n = n;
  L.leq = leq;
  for (uint8_t& v : L.leq) v = v ? 1 : 0;
  L.join_tab.assign(static_cast<size_t>(n) * n, -1);
  L.meet_tab.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (L.le(a, c) && L.le(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (L.le(a, d) && L.le(b, d) && !L.le(c, d)) least = false;
          if (least) L.join_tab[static_cast<size_t>(a) * n + b] = c;
        }
        if (L.le(c, a) && L.le(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (L.le(d, a) && L.le(d, b) && !L.le(d, c)) greatest = false;
          if (greatest) L.meet_tab[static_cast<size_t>(a) * n + b] = c;
        }
      }
    }
  }
  return L;
}

bool is_lattice(int n, const std::vector<uint8_t>& leq) {
  check_table_shape(n, leq);
  return lattice_defect(n, leq).empty();
}

int lattice_bottom(const FiniteLattice& L) {
  int b = 0;
  for (int a = 1; a < L.n; ++a) b = L.meet(b, a);
  return b;
}

int lattice_top(const FiniteLattice& L) {
  int t = 0;
  for (int a = 1; a < L.n; ++a) t = L.join(t, a);
  return t;
}

FiniteLattice chain(int n) {
  if (n < 1) throw PreconditionError("chain must be nonempty");
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = 1;
  return make_lattice(n, leq);
}

FiniteLattice linear_sum(const FiniteLattice& K, const FiniteLattice& L) {
  const int bottom_l = lattice_bottom(L);
  const int top_k = lattice_top(K);
  const int n = K.n + L.n - 1;
  // K keeps its ids; L-elements other than its bottom follow in id order.
  std::vector<int> l_new_id(L.n, -1);
  l_new_id[bottom_l] = top_k;
  int next = K.n;
  for (int x = 0; x < L.n; ++x)
    if (x != bottom_l) l_new_id[x] = next++;

  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  const auto set_le = [&](int a, int b) { leq[static_cast<size_t>(a) * n + b] = 1; };
  for (int a = 0; a < K.n; ++a)
    for (int b = 0; b < K.n; ++b)
      if (K.le(a, b)) set_le(a, b);
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (L.le(a, b)) set_le(l_new_id[a], l_new_id[b]);
  for (int a = 0; a < K.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (b != bottom_l) set_le(a, l_new_id[b]);
  return make_lattice(n, leq);
}

bool is_isomorphic(const FiniteLattice& K, const FiniteLattice& L) {
  if (K.n != L.n) return false;
  const int n = K.n;
  // Cheap invariant: multiset of down-set sizes.
  const auto degrees = [n](const FiniteLattice& M) {
    std::vector<int> d(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (M.le(b, a)) ++d[a];
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(K) != degrees(L)) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int a = 0; a < n && match; ++a)
      for (int b = 0; b < n && match; ++b)
        if (K.le(a, b) != L.le(perm[a], perm[b])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

RepCheck check_representation(const Representation& rep) {
  if (rep.ground < 1) return {false, "empty ground"};
  if (static_cast<int>(rep.alpha.size()) != rep.lattice.n)
    return {false, "alpha must assign one relation per lattice element"};
  for (const EqRel& e : rep.alpha)
    if (e.n != rep.ground) return {false, "relation ground size mismatch"};

  for (int r = 0; r < rep.lattice.n; ++r)
    for (int s = r + 1; s < rep.lattice.n; ++s)
      if (rep.alpha[r] == rep.alpha[s])
        return {false, "alpha not one-to-one: elements " + std::to_string(r) + " and " +
                           std::to_string(s)};
  if (!is_trivial(rep.alpha[lattice_bottom(rep.lattice)]))
    return {false, "bottom must map to the trivial relation"};
  if (!is_discrete(rep.alpha[lattice_top(rep.lattice)]))
    return {false, "top must map to the discrete relation"};
  for (int r = 0; r < rep.lattice.n; ++r)
    for (int s = 0; s < rep.lattice.n; ++s) {
      const int j = rep.lattice.join(r, s);
      if (rep.alpha[j] != eq_intersect(rep.alpha[r], rep.alpha[s]))
        return {false, "join(" + std::to_string(r) + "," + std::to_string(s) +
                           ") is not the intersection"};
    }
  return {true, {}};
}

bool is_representation(const Representation& rep) {
  return check_representation(rep).ok;
}

RestrictedRep restrict_rep(const Representation& rep, const std::vector<int>& subset) {
  if (subset.empty()) throw PreconditionError("empty subset");
  RestrictedRep out;
  out.orig_ids = subset;
  out.rep.lattice = rep.lattice;
  out.rep.ground = static_cast<int>(subset.size());
  out.rep.alpha.reserve(rep.alpha.size());
  for (const EqRel& e : rep.alpha) out.rep.alpha.push_back(eq_restrict(e, subset));
  const RepCheck check = check_representation(out.rep);
  out.valid = check.ok;
  out.witness = check.witness;
  return out;
}

bool is_ncpp(const Representation& rep, int n) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  const RepCheck check = check_representation(rep);
  if (!check.ok) throw PreconditionError("invalid representation: " + check.witness);
  if (n == 0) {
    for (const EqRel& e : rep.alpha)
      if (class_count(e) == 2) return false;
    return true;
  }
  const int m = rep.ground;
  if (m > 20) throw PreconditionError("ground too large for the CPP check");

  // All subsets whose restriction is an (n-1)-CPP representation, with the
  // restricted image relations precomputed.
  struct GoodSubset {
    std::vector<int> ids;
    std::vector<EqRel> alpha;
  };
  std::vector<GoodSubset> good;
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    std::vector<int> ids;
    for (int x = 0; x < m; ++x)
      if (mask & (uint32_t{1} << x)) ids.push_back(x);
    RestrictedRep cand = restrict_rep(rep, ids);
    if (!cand.valid) continue;
    if (!is_ncpp(cand.rep, n - 1)) continue;
    good.push_back({std::move(ids), std::move(cand.rep.alpha)});
  }
  if (good.empty()) return false;

  PartitionStream stream(m);
  EqRel theta;
  while (stream.next(theta)) {
    bool matched = false;
    for (const GoodSubset& g : good) {
      const EqRel restricted_theta = eq_restrict(theta, g.ids);
      for (const EqRel& image : g.alpha) {
        if (image == restricted_theta) {
          matched = true;
          break;
        }
      }
      if (matched) break;
    }
    if (!matched) return false;
  }
  return true;
}

Representation chain_rep_from_hstructure(const HStructure& s) {
  const std::vector<int> index_set = special_index_set(s);
  std::vector<int> full(s.h());
  std::iota(full.begin(), full.end(), 0);
  if (index_set != full || !is_special(s, full, 2))
    throw PreconditionError(
        "conversion needs a fully branching tower: equal or discrete levels would "
        "break injectivity");
  Representation rep;
  rep.lattice = chain(s.h() + 1);
  rep.ground = s.n();
  rep.alpha = s.levels;
  rep.alpha.push_back(eq_discrete(s.n()));
  return rep;
}

HStructure hstructure_from_chain_rep(const Representation& rep) {
  const RepCheck check = check_representation(rep);
  if (!check.ok) throw PreconditionError("invalid representation: " + check.witness);
  if (rep.lattice.n < 2 || rep.lattice.leq != chain(rep.lattice.n).leq)
    throw PreconditionError("expected a chain lattice with elements in order");
  std::vector<EqRel> levels(rep.alpha.begin(), rep.alpha.end() - 1);
  return make_hstructure(ground(rep.ground), std::move(levels));
}

namespace {

// Enumerates candidate alpha assignments for the free (non-bottom, non-top)
// elements, each over all partitions in stream order, nested left to right.
bool search_rec(const FiniteLattice& L, int n, int m, const std::vector<int>& free_ids,
                size_t pos, Representation& rep, std::optional<Representation>& found) {
  if (pos == free_ids.size()) {
    if (!is_representation(rep)) return false;
    if (!is_ncpp(rep, n)) return false;
    found = rep;
    return true;
  }
  PartitionStream stream(m);
  EqRel candidate;
  while (stream.next(candidate)) {
    rep.alpha[free_ids[pos]] = candidate;
    if (search_rec(L, n, m, free_ids, pos + 1, rep, found)) return true;
  }
  return false;
}

}  // namespace

std::optional<Representation> search_ncpp(const FiniteLattice& L, int n,
                                          int max_ground) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  if (max_ground < 1) throw PreconditionError("max_ground must be at least 1");
  const int bottom = lattice_bottom(L);
  const int top = lattice_top(L);
  std::vector<int> free_ids;
  for (int r = 0; r < L.n; ++r)
    if (r != bottom && r != top) free_ids.push_back(r);

  for (int m = 1; m <= max_ground; ++m) {
    Representation rep;
    rep.lattice = L;
    rep.ground = m;
    rep.alpha.assign(L.n, eq_trivial(m));
    rep.alpha[bottom] = eq_trivial(m);
    rep.alpha[top] = eq_discrete(m);
    std::optional<Representation> found;
    if (search_rec(L, n, m, free_ids, 0, rep, found)) return found;
  }
  return std::nullopt;
}

}  // namespace eqtower
