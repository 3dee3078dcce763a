#pragma once

#include <string>
#include <vector>

namespace eqtower {

// Finite ground set [0, size). Labels, when present, name every element.
struct GroundSet {
  int size = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` distinct entries

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

GroundSet ground(int size);
void validate_ground(const GroundSet& g);

// Partition of [0, n) in canonical form: class_of[x] is the least element of
// x's class, so class_of[x] <= x and class_of[class_of[x]] == class_of[x].
struct EqRel {
  int n = 0;
  std::vector<int> class_of;

  friend bool operator==(const EqRel&, const EqRel&) = default;
};

EqRel eq_trivial(int n);
EqRel eq_discrete(int n);
EqRel eq_trivial(const GroundSet& g);
EqRel eq_discrete(const GroundSet& g);

// Validating constructor; rejects arrays not in canonical form.
EqRel eq_from_class_of(std::vector<int> class_of);
// Canonicalizes an arbitrary element -> block-id assignment.
EqRel eq_from_assignment(const std::vector<int>& block_of);
// Builds from explicit blocks, which must partition [0, n).
EqRel eq_from_blocks(int n, const std::vector<std::vector<int>>& blocks);

int class_count(const EqRel& e);
bool is_trivial(const EqRel& e);
bool is_discrete(const EqRel& e);

// true iff every fine-class is contained in some coarse-class.
bool is_refinement(const EqRel& fine, const EqRel& coarse);

// Classes in ascending order of canonical representative.
std::vector<std::vector<int>> eq_classes(const EqRel& e);

// The e_fine-classes contained in cls; cls must be a class of e_coarse and
// e_fine must refine e_coarse.
std::vector<std::vector<int>> classes_within(const EqRel& e_coarse,
                                             const std::vector<int>& cls,
                                             const EqRel& e_fine);

// Common refinement: classes are the nonempty pairwise intersections.
EqRel eq_intersect(const EqRel& a, const EqRel& b);

// Restriction to a sorted subset of the ground set, relabeled to [0, |ids|).
EqRel eq_restrict(const EqRel& e, const std::vector<int>& ids);

// Lazy enumeration of all partitions of [0, n) in restricted-growth-string
// lexicographic order. Bell(n) items; callers may stop early.
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  // Fills `out` with the next partition; false once exhausted.
  bool next(EqRel& out);

 private:
  int n_;
  bool first_ = true;
  bool done_ = false;
  std::vector<int> rgs_;
};

}  // namespace eqtower
