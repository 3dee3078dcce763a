#include "eqtower/gadgets.hpp"

#include <algorithm>
#include <map>

#include "eqtower/errors.hpp"

namespace eqtower {

CollapseResult collapse_generator(const std::vector<long long>& t0) {
  const size_t n = t0.size();
  if (n == 0) throw PreconditionError("empty input");
  for (long long v : t0)
    if (v < 0) throw PreconditionError("values must be nonnegative");

  CollapseResult out;
  out.t.resize(n);
  std::map<long long, long long> first_index;
  for (size_t x = 0; x < n; ++x) {
    // t fixes first occurrences, so t(min earlier match) is that index itself.
    auto [it, inserted] = first_index.try_emplace(t0[x], static_cast<long long>(x));
    out.t[x] = it->second;
  }
  for (const auto& [value, index] : first_index) {
    out.t1.emplace_back(index, value);
    out.t2.emplace_back(value, index);
  }
  std::sort(out.t1.begin(), out.t1.end());
  std::sort(out.t2.begin(), out.t2.end());
  return out;
}

MedianSplit median_tail_split(const std::vector<long long>& values) {
  const size_t n = values.size();
  if (n == 0) throw PreconditionError("empty input");
  std::map<long long, size_t> where;
  for (size_t x = 0; x < n; ++x) {
    if (values[x] < 0) throw PreconditionError("values must be nonnegative");
    auto [it, inserted] = where.try_emplace(values[x], x);
    if (!inserted)
      throw PreconditionError("f is not one-to-one: f(" + std::to_string(it->second) +
                              ") = f(" + std::to_string(x) + ") = " +
                              std::to_string(values[x]));
  }
  // The least d with |{f > d}| <= |{f <= d}| is the ceil(n/2)-th value.
  std::vector<long long> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  const long long d = sorted[(n + 1) / 2 - 1];
  MedianSplit out;
  out.threshold = d;
  for (size_t x = 0; x < n; ++x)
    if (values[x] >= d) out.subset.push_back(static_cast<int>(x));
  return out;
}

}  // namespace eqtower
