#pragma once

#include <cstdint>
#include <vector>

#include "orsti/text.hpp"

namespace orsti {

// Static range-minimum structure over an integer array (1-based). Ties always
// resolve to the leftmost minimum. Immutable after construction.
//
// Internally a block decomposition with a sparse table over block minima, so
// memory stays linear while queries scan at most two partial blocks.
class Rmq {
 public:
  Rmq() = default;
  explicit Rmq(std::vector<index_t> values);

  [[nodiscard]] index_t size() const { return static_cast<index_t>(values_.size()) - 1; }

  // Leftmost position of the minimum value in [i, j].
  [[nodiscard]] index_t argmin(index_t i, index_t j) const;

  // Minimum value in [i, j].
  [[nodiscard]] index_t min_value(index_t i, index_t j) const { return values_[argmin(i, j)]; }

  [[nodiscard]] index_t value_at(index_t pos) const { return values_[pos]; }

  // All positions p in [i, j] with value < bound, ascending. The optional
  // counter reports how many argmin calls the recursion issued.
  [[nodiscard]] std::vector<index_t> bounded_report(index_t i, index_t j, index_t bound,
                                                    std::uint64_t* argmin_calls = nullptr) const;

 private:
  static constexpr index_t kBlock = 32;

  void check_range(index_t i, index_t j) const;
  [[nodiscard]] index_t scan_argmin(index_t i, index_t j) const;

  std::vector<index_t> values_;                   // values_[0] unused
  std::vector<index_t> block_argmin_;             // per block, absolute position
  std::vector<std::vector<index_t>> table_;       // sparse table over blocks
};

}  // namespace orsti
