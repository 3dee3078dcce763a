#pragma once

#include <optional>
#include <vector>

#include "eqtower/hstructure.hpp"

namespace eqtower {

// f : ground -> nonnegative integers.
struct Coloring {
  int n = 0;
  std::vector<long long> values;
};

void validate_coloring(const Coloring& f);

enum class ExtractMode { Guaranteed, BestEffort };

struct Php1Result {
  std::vector<int> set;  // a+1 elements, ascending
  long long value = 0;   // the witnessing color
};

// Constant subset of size a+1 from a domain of size >= c*a+1 colored with
// fewer than c colors. Winning color: maximal count, ties to smaller value.
Php1Result php1(const Coloring& f, int a, long long c);

enum class Php2Mode { Constant, Injective };

struct Php2Result {
  std::vector<int> set;  // a+1 elements, ascending
  Php2Mode mode = Php2Mode::Constant;
};

// Constant-or-injective subset of size a+1 from a domain of size >= a^2+1.
// Constant wins whenever some value reaches count a+1.
Php2Result php2(const Coloring& f, int a);

struct MonoResult {
  std::vector<int> subset;
  long long value = 0;
};

// Monochromatic extraction: needs structure width >= c*w and f-values < c.
// Returns Y with f constant on Y; the substructure induced by Y keeps the
// full special index set at width w.
MonoResult mono_extract(const HStructure& s, const Coloring& f, long long c, int w);

// Injective extraction: needs width >= w^(k+1) for k the largest special
// index, and f one-to-one on each level-k class. Returns Y with f one-to-one
// on Y and the induced substructure special at width w.
std::vector<int> injective_extract(const HStructure& s, const Coloring& f, int w);

struct CanonicalKResult {
  std::vector<int> subset;
  int canonical_index = 0;  // canonicity index of f on the induced structure
};

// Level-aligned extraction at a special index k: f must be constant on each
// level-(k+1) class and take distinct values on distinct level-(k+1) classes
// inside a common level-k class. Needs width >= w^(k+1). On the output the
// equality pattern of f coincides with level k+1 restricted to the subset,
// i.e. with the successor special level of k.
CanonicalKResult canonical_k_extract(const HStructure& s, const Coloring& f, int k,
                                     int w);

struct DichotomyResult {
  int level = 0;  // j, a member of the special index set
  std::optional<std::vector<int>> constant_subset;   // present when j != max
  std::optional<std::vector<int>> injective_subset;  // present when j != min
};

// Splits any coloring along the tower: some special index j admits a
// width-w constant witness above it (when j is not the last index) and a
// width-w injective witness below it (when j is not the first). Guaranteed
// mode requires width >= (k! * w)^(2 * k!) with k the index-set size;
// best-effort accepts any special structure and may report no witness.
std::optional<DichotomyResult> dichotomy_extract(const HStructure& s,
                                                 const Coloring& f, int w,
                                                 ExtractMode mode);

}  // namespace eqtower
