#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "checkers.hpp"
#include "eqtower/errors.hpp"
#include "eqtower/hstructure.hpp"

using namespace eqtower;

namespace {

HStructure tower(int n, const std::vector<std::vector<std::vector<int>>>& blocks) {
  std::vector<EqRel> levels;
  levels.push_back(eq_trivial(n));
  for (const auto& level_blocks : blocks) levels.push_back(eq_from_blocks(n, level_blocks));
  return make_hstructure(ground(n), std::move(levels));
}

std::vector<int> full_range(int h) {
  std::vector<int> out(h);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// All towers of height up to max_h over ground size n, by enumerating
// refinement chains of partitions.
std::vector<HStructure> all_towers(int n, int max_h) {
  std::vector<EqRel> parts;
  PartitionStream stream(n);
  EqRel e;
  while (stream.next(e)) parts.push_back(e);

  std::vector<HStructure> out;
  std::vector<EqRel> chain{eq_trivial(n)};
  std::function<void()> go = [&] {
    out.push_back(make_hstructure(ground(n), chain));
    if (static_cast<int>(chain.size()) == max_h) return;
    for (const EqRel& next : parts) {
      if (!is_refinement(next, chain.back())) continue;
      chain.push_back(next);
      go();
      chain.pop_back();
    }
  };
  go();
  return out;
}

}  // namespace

TEST_CASE("structure invariants are validated") {
  CHECK_NOTHROW(tower(4, {{{0, 1}, {2, 3}}}));
  // level 0 must be trivial
  CHECK_THROWS_AS(make_hstructure(ground(3), {eq_discrete(3)}), ValidationError);
  // refinement must hold between consecutive levels
  CHECK_THROWS_AS(
      make_hstructure(ground(4), {eq_trivial(4), eq_from_blocks(4, {{0, 1}, {2, 3}}),
                                  eq_from_blocks(4, {{0, 2}, {1, 3}})}),
      ValidationError);
  CHECK_THROWS_AS(make_hstructure(ground(3), {}), ValidationError);
}

TEST_CASE("basic structure") {
  const HStructure b2 = basic_structure(2);
  CHECK(b2.n() == 4);
  CHECK(b2.ground.labels == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(b2.levels[0] == eq_trivial(4));
  CHECK(b2.levels[1] == eq_from_blocks(4, {{0, 1}, {2, 3}}));
  CHECK(special_index_set(b2) == std::vector<int>{0, 1});
  CHECK(special_width(b2) == 2);
  CHECK(is_special(b2, {0, 1}, 2));

  const HStructure b3 = basic_structure(3);
  CHECK(b3.n() == 27);
  CHECK(special_width(b3) == 3);

  CHECK_THROWS_AS(basic_structure(1), PreconditionError);
  CHECK_THROWS_AS(basic_structure(6), PreconditionError);
}

TEST_CASE("special index set follows the last-occurrence rule") {
  // E_0 = E_1 trivial, E_2 splits into two pairs.
  const HStructure s = make_hstructure(
      ground(4),
      {eq_trivial(4), eq_trivial(4), eq_from_blocks(4, {{0, 1}, {2, 3}})});
  CHECK(special_index_set(s) == std::vector<int>{1, 2});
  CHECK(special_width(s) == 2);

  const HStructure single = make_hstructure(ground(1), {eq_trivial(1)});
  CHECK(special_index_set(single).empty());
  CHECK_FALSE(special_width(single).has_value());
}

TEST_CASE("is_special demands the exact index set and enough width") {
  const HStructure b2 = basic_structure(2);
  CHECK_FALSE(is_special(b2, {0, 1}, 3));
  CHECK_FALSE(is_special(b2, {0}, 2));
  CHECK_FALSE(is_special(b2, {}, 2));
  CHECK_THROWS_AS(is_special(b2, {0, 1}, 1), PreconditionError);
}

TEST_CASE("induce") {
  const HStructure b2 = basic_structure(2);
  const Induced whole = induce(b2, {0, 1, 2, 3});
  CHECK(whole.structure.levels == b2.levels);
  CHECK(whole.structure.ground.labels == b2.ground.labels);

  // Inside one branch the deeper level goes trivial; its last occurrence is 1.
  CHECK(special_index_set(induce(b2, {0, 1}).structure) == std::vector<int>{1});
  // Across branches the deeper level goes discrete; only index 0 is left.
  CHECK(special_index_set(induce(b2, {0, 2}).structure) == std::vector<int>{0});
  CHECK_THROWS_AS(induce(b2, {}), PreconditionError);
}

TEST_CASE("shrink worked examples") {
  const HStructure b2 = basic_structure(2);
  CHECK(shrink(b2, {0, 1}, 2) == std::vector<int>{0, 1, 2, 3});

  const HStructure b3 = basic_structure(3);
  const std::vector<int> y = shrink(b3, {0, 2}, 2);
  CHECK(y == std::vector<int>{0, 1, 9, 10});
  CHECK(checkers::check_induced_special(b3, y, {0, 2}, 2));

  // Keeping only the deepest index picks one chain down to a single class.
  const std::vector<int> deep = shrink(b3, {2}, 3);
  CHECK(deep == std::vector<int>{0, 1, 2});
  CHECK(checkers::check_induced_special(b3, deep, {2}, 3));

  CHECK_THROWS_AS(shrink(b3, {}, 2), PreconditionError);
  CHECK_THROWS_AS(shrink(b3, {1, 3}, 2), PreconditionError);
  CHECK_THROWS_AS(shrink(b3, {0}, 4), PreconditionError);
  CHECK_THROWS_AS(shrink(b3, {0}, 1), PreconditionError);
}

TEST_CASE("shrink output re-verified across index subsets") {
  const HStructure b4 = basic_structure(4);
  const std::vector<std::vector<int>> subsets = {{0}, {1, 3}, {0, 2}, {0, 1, 2, 3}, {2}};
  for (const std::vector<int>& sub : subsets) {
    for (int v = 2; v <= 4; ++v) {
      const std::vector<int> y = shrink(b4, sub, v);
      long long want = 1;
      for (size_t i = 0; i < sub.size(); ++i) want *= v;
      CHECK(static_cast<long long>(y.size()) == want);
      CHECK(checkers::check_induced_special(b4, y, sub, v));
    }
  }
}

TEST_CASE("extend worked examples") {
  const HStructure b2 = basic_structure(2);

  // No-op extension returns the same tower.
  const HStructure same = extend(b2, 2, {0, 1}, 2);
  CHECK(same.levels == b2.levels);
  CHECK(same.ground.labels == b2.ground.labels);

  // One extra level below, width 2: doubles the ground.
  const HStructure deeper = extend(b2, 3, {0, 1, 2}, 2);
  CHECK(deeper.n() == 8);
  CHECK(is_special(deeper, {0, 1, 2}, 2));
  for (int i = 0; i < 2; ++i)
    CHECK(eq_restrict(deeper.levels[i], {0, 1, 2, 3}) == b2.levels[i]);
  CHECK(eq_restrict(deeper.level(3), {0, 1, 2, 3}) == eq_discrete(4));

  // Wider at the same height: restriction to the old ids is unchanged.
  const HStructure wider = extend(b2, 2, {0, 1}, 3);
  CHECK(is_special(wider, {0, 1}, 3));
  for (int i = 0; i < 2; ++i)
    CHECK(eq_restrict(wider.levels[i], {0, 1, 2, 3}) == b2.levels[i]);

  CHECK_THROWS_AS(extend(b2, 1, {0}, 2), PreconditionError);
  CHECK_THROWS_AS(extend(b2, 2, {0}, 2), PreconditionError);
  CHECK_THROWS_AS(extend(b2, 2, {0, 1}, 1), PreconditionError);
}

TEST_CASE("extend then restrict is the identity on every level") {
  const HStructure b3 = basic_structure(3);
  const HStructure big = extend(b3, 5, {0, 1, 2, 4}, 4);
  CHECK(is_special(big, {0, 1, 2, 4}, 4));
  std::vector<int> old_ids(b3.n());
  std::iota(old_ids.begin(), old_ids.end(), 0);
  for (int i = 0; i < b3.h(); ++i)
    CHECK(eq_restrict(big.levels[i], old_ids) == b3.levels[i]);
  CHECK(eq_restrict(big.level(3), old_ids) == eq_discrete(b3.n()));
}

TEST_CASE("exact shape") {
  const HStructure s = exact_shape(3, {0, 2}, 3);
  CHECK(s.n() == 9);
  CHECK(is_special(s, {0, 2}, 3));
  CHECK(special_width(s) == 3);
  const HStructure t = exact_shape(1, {0}, 5);
  CHECK(t.n() == 5);
  CHECK(special_index_set(t) == std::vector<int>{0});
}

TEST_CASE("quotient") {
  const HStructure b2 = basic_structure(2);
  const Quotient q0 = quotient(b2, 0);
  CHECK(q0.structure.n() == 1);
  CHECK(q0.structure.h() == 1);

  const Quotient q1 = quotient(b2, 1);
  CHECK(q1.structure.n() == 2);
  CHECK(q1.structure.h() == 1);
  CHECK(q1.structure.levels[0] == eq_trivial(2));
  CHECK(special_index_set(q1.structure) == std::vector<int>{0});
  CHECK(special_width(q1.structure) == 2);
  CHECK(q1.class_elements == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  const Quotient q2 = quotient(basic_structure(3), 2);
  CHECK(q2.structure.n() == 9);
  CHECK(q2.structure.h() == 2);
  CHECK(is_special(q2.structure, {0, 1}, 3));

  CHECK_THROWS_AS(quotient(b2, 2), PreconditionError);
}

TEST_CASE("compress") {
  const HStructure b3 = basic_structure(3);
  const Compressed c = compress(b3);
  CHECK(c.structure.levels == b3.levels);
  CHECK(c.level_map == std::vector<int>{0, 1, 2});

  const HStructure s = make_hstructure(
      ground(4),
      {eq_trivial(4), eq_trivial(4), eq_from_blocks(4, {{0, 1}, {2, 3}})});
  const Compressed cs = compress(s);
  CHECK(cs.structure.h() == 2);
  CHECK(cs.level_map == std::vector<int>{1, 2});
  CHECK(cs.structure.levels[1] == s.levels[2]);
  CHECK(is_special(cs.structure, {0, 1}, 2));
  CHECK(special_width(cs.structure) == special_width(s));

  const HStructure single = make_hstructure(ground(1), {eq_trivial(1)});
  CHECK_THROWS_AS(compress(single), PreconditionError);
}

TEST_CASE("compress commutes with shrink on the basic tower") {
  const HStructure b3 = basic_structure(3);
  const std::vector<int> sub = {0, 2};
  const std::vector<int> y = shrink(b3, sub, 2);
  const Compressed after = compress(induce(b3, y).structure);

  const Compressed first = compress(b3);
  // Index 2 of the original tower is index 2 of the compressed one here.
  const std::vector<int> y2 = shrink(first.structure, sub, 2);
  const Induced ind2 = induce(first.structure, y2);
  CHECK(y == y2);
  CHECK(after.structure.levels == compress(ind2.structure).structure.levels);
}

TEST_CASE("size bound holds on every tower over small grounds") {
  for (int n = 2; n <= 6; ++n) {
    for (const HStructure& s : all_towers(n, 3)) {
      const std::vector<int> index_set = special_index_set(s);
      if (index_set.empty()) continue;
      const int w = *special_width(s);
      long long bound = 1;
      for (size_t i = 0; i < index_set.size(); ++i) bound *= w;
      CHECK(static_cast<long long>(s.n()) >= bound);
      // Monotonicity: special at the exact width implies special below it.
      for (int v = 2; v <= w; ++v) CHECK(is_special(s, index_set, v));
    }
  }
}

TEST_CASE("basic structure is fully special for every supported height") {
  for (int h = 2; h <= 5; ++h) {
    const HStructure b = basic_structure(h);
    long long size = 1;
    for (int i = 0; i < h; ++i) size *= h;
    CHECK(b.n() == size);
    CHECK(is_special(b, full_range(h), h));
  }
}
