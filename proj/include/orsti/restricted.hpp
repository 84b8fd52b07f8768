#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "orsti/grid.hpp"
#include "orsti/suffix_index.hpp"
#include "orsti/text.hpp"

namespace orsti {

// Window-restricted pattern search plus occurrence rank, select, successor
// and non-overlapping enumeration, all answered on one (rank, position)
// plane. The empty pattern behaves like a unit-length match at every
// position.
class RestrictedIndex {
 public:
  explicit RestrictedIndex(Text text);

  [[nodiscard]] const Text& text() const { return sidx_.text(); }
  [[nodiscard]] const SuffixIndex& suffix_index() const { return sidx_; }
  [[nodiscard]] const RankGrid2& grid() const { return grid_; }

  // Occurrence starts p of q with i <= p and p + |q| - 1 <= j, ascending.
  [[nodiscard]] std::vector<index_t> pri_report(std::string_view q, index_t i,
                                                index_t j) const;
  [[nodiscard]] std::int64_t pri_count(std::string_view q, index_t i, index_t j) const;

  // Number of occurrence starts at positions <= k.
  [[nodiscard]] std::int64_t substring_rank(std::string_view q, index_t k) const;

  // The k-th smallest occurrence start, absent when there are fewer than k.
  [[nodiscard]] std::optional<index_t> substring_select(std::string_view q,
                                                        std::int64_t k) const;

  // Smallest occurrence start >= i, absent when none remains.
  [[nodiscard]] std::optional<index_t> successive(std::string_view q, index_t i) const;

  // Greedy leftmost maximal set of pairwise non-overlapping occurrences.
  [[nodiscard]] std::vector<index_t> non_overlapping(std::string_view q) const;

 private:
  // The window [i, j] as a start-position interval for a match of length
  // max(|q|, 1); empty when the window is too short.
  [[nodiscard]] static std::pair<index_t, index_t> start_window(std::string_view q,
                                                                index_t i, index_t j);

  SuffixIndex sidx_;
  RankGrid2 grid_;  // x: suffix rank, y: position
};

}  // namespace orsti
