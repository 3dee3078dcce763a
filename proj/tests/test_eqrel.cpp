#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "eqtower/eqrel.hpp"
#include "eqtower/errors.hpp"

using namespace eqtower;

namespace {

// Independent oracle: count all restricted growth strings by direct
// recursion, no shared code with PartitionStream.
long long count_rgs(int n) {
  std::function<long long(int, int)> go = [&](int pos, int maxv) -> long long {
    if (pos == n) return 1;
    long long total = 0;
    for (int b = 0; b <= maxv + 1; ++b) total += go(pos + 1, std::max(maxv, b));
    return total;
  };
  return go(0, -1);
}

std::vector<EqRel> all_partitions(int n) {
  std::vector<EqRel> out;
  PartitionStream stream(n);
  EqRel e;
  while (stream.next(e)) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("trivial and discrete relations") {
  CHECK(eq_trivial(3).class_of == std::vector<int>{0, 0, 0});
  CHECK(eq_trivial(1).class_of == std::vector<int>{0});
  CHECK(class_count(eq_trivial(5)) == 1);
  CHECK(eq_discrete(3).class_of == std::vector<int>{0, 1, 2});
  CHECK(eq_discrete(1).class_of == std::vector<int>{0});
  CHECK(class_count(eq_discrete(4)) == 4);
  CHECK(eq_trivial(1) == eq_discrete(1));
  CHECK_THROWS_AS(eq_trivial(0), PreconditionError);
  CHECK_THROWS_AS(eq_discrete(0), PreconditionError);
}

TEST_CASE("canonical form validation") {
  CHECK_NOTHROW(eq_from_class_of({0, 0, 2, 2}));
  // Representative must be the least member of its class.
  CHECK_THROWS_AS(eq_from_class_of({0, 1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(eq_from_class_of({0, 2, 2}), ValidationError);
  CHECK_THROWS_AS(eq_from_class_of({1, 1}), ValidationError);
  CHECK_THROWS_AS(eq_from_class_of({}), ValidationError);
  CHECK(eq_from_assignment({7, 3, 7, 3}).class_of == std::vector<int>{0, 1, 0, 1});
  CHECK(eq_from_blocks(4, {{2, 3}, {0, 1}}).class_of == std::vector<int>{0, 0, 2, 2});
  CHECK_THROWS_AS(eq_from_blocks(3, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(eq_from_blocks(3, {{0, 1}, {1, 2}}), ValidationError);
}

TEST_CASE("refinement") {
  CHECK(is_refinement(eq_discrete(4), eq_trivial(4)));
  const EqRel left = eq_from_blocks(4, {{0, 1}, {2, 3}});
  const EqRel right = eq_from_blocks(4, {{0, 2}, {1, 3}});
  CHECK_FALSE(is_refinement(left, right));
  CHECK(is_refinement(left, left));
  CHECK_THROWS_AS(is_refinement(eq_trivial(3), eq_trivial(4)), PreconditionError);
}

TEST_CASE("classes and classes_within") {
  CHECK(eq_classes(eq_discrete(3)) == std::vector<std::vector<int>>{{0}, {1}, {2}});
  const EqRel fine = eq_from_blocks(4, {{0, 1}, {2, 3}});
  CHECK(classes_within(eq_trivial(4), {0, 1, 2, 3}, fine) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(classes_within(fine, {0, 1}, fine).size() == 1);
  CHECK_THROWS_AS(classes_within(fine, {0, 2}, fine), PreconditionError);
  CHECK_THROWS_AS(classes_within(fine, {0, 1, 2, 3}, fine), PreconditionError);
}

TEST_CASE("intersection and restriction") {
  const EqRel a = eq_from_blocks(4, {{0, 1}, {2, 3}});
  const EqRel b = eq_from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(eq_intersect(a, b) == eq_discrete(4));
  CHECK(eq_intersect(a, eq_trivial(4)) == a);
  CHECK(eq_restrict(a, {0, 1, 2}).class_of == std::vector<int>{0, 0, 2});
  CHECK(eq_restrict(a, {1, 3}) == eq_discrete(2));
  CHECK_THROWS_AS(eq_restrict(a, {}), PreconditionError);
  CHECK_THROWS_AS(eq_restrict(a, {2, 1}), PreconditionError);
}

TEST_CASE("partition enumeration counts match the independent oracle") {
  const long long bell[] = {0, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    CHECK(static_cast<long long>(all_partitions(n).size()) == bell[n]);
    CHECK(count_rgs(n) == bell[n]);
  }
  CHECK_THROWS_AS(PartitionStream(0), PreconditionError);
}

TEST_CASE("enumeration is deterministic, lexicographic, duplicate-free") {
  const std::vector<EqRel> parts = all_partitions(4);
  std::set<std::vector<int>> seen;
  for (const EqRel& e : parts) CHECK(seen.insert(e.class_of).second);
  CHECK(parts.front() == eq_trivial(4));
  CHECK(parts.back() == eq_discrete(4));
}

TEST_CASE("refinement is a partial order on enumerated partitions") {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<EqRel> parts = all_partitions(n);
    for (const EqRel& a : parts) {
      CHECK(is_refinement(a, a));
      CHECK(is_refinement(eq_discrete(n), a));
      CHECK(is_refinement(a, eq_trivial(n)));
      for (const EqRel& b : parts) {
        if (is_refinement(a, b) && is_refinement(b, a)) CHECK(a == b);
        for (const EqRel& c : parts)
          if (is_refinement(a, b) && is_refinement(b, c)) CHECK(is_refinement(a, c));
      }
    }
  }
}

TEST_CASE("class navigation round-trips through blocks") {
  for (int n = 1; n <= 6; ++n) {
    PartitionStream stream(n);
    EqRel e;
    while (stream.next(e)) {
      CHECK(eq_from_blocks(n, eq_classes(e)) == e);
      CHECK(eq_from_class_of(e.class_of) == e);
    }
  }
}
