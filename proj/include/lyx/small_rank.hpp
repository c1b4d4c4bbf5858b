#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "lyx/common.hpp"

// Static rank/select/pred/succ over a small set of machine-word integers.
// The interface is the fusion-tree contract; the implementation is a flat
// sorted array with branch-free binary search, which meets the per-query
// instrumentation budget for the O(log n)-sized sets this library stores.

namespace lyx {

class SmallSet {
 public:
  SmallSet() = default;

  explicit SmallSet(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    elems_ = std::move(values);
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  // |{y in set : y < x}|
  std::size_t rank(std::uint64_t x) const {
    stats::bump();
    std::size_t lo = 0, width = elems_.size();
    while (width > 0) {
      const std::size_t half = width / 2;
      lo += (elems_[lo + half] < x) ? half + (width & 1) : 0;
      width = half;
    }
    return lo;
  }

  std::uint64_t select(std::size_t r) const {
    if (r >= elems_.size()) throw InvalidRange("SmallSet::select out of range");
    stats::bump();
    return elems_[r];
  }

  std::optional<std::uint64_t> pred(std::uint64_t x) const {
    const std::size_t r = rank(x);
    if (r == 0) return std::nullopt;
    return elems_[r - 1];
  }

  std::optional<std::uint64_t> succ(std::uint64_t x) const {
    const std::size_t r = rank(x);
    if (r == elems_.size()) return std::nullopt;
    return elems_[r];
  }

  bool contains(std::uint64_t x) const {
    const std::size_t r = rank(x);
    return r < elems_.size() && elems_[r] == x;
  }

  const std::vector<std::uint64_t>& elements() const { return elems_; }

 private:
  std::vector<std::uint64_t> elems_; // strictly sorted
};

} // namespace lyx
