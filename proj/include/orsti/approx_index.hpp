#pragma once

#include <string_view>
#include <vector>

#include "orsti/grid.hpp"
#include "orsti/suffix_index.hpp"
#include "orsti/text.hpp"

namespace orsti {

// Single-mismatch index over forward and reversed suffix universes that both
// include the empty suffix at rank 1. Point i (for i in [2, n+1]) couples the
// suffix starting at i with the reversed prefix ending at i-2, leaving text
// position i-1 as the mismatch slot; its symbol is the third coordinate.
class OneErrorIndex {
 public:
  explicit OneErrorIndex(Text text);

  [[nodiscard]] const Text& text() const { return text_; }
  [[nodiscard]] const SuffixIndex& fwd() const { return fwd_; }
  [[nodiscard]] const SuffixIndex& rev() const { return rev_; }
  [[nodiscard]] const RankGrid2& grid2() const { return grid2_; }
  [[nodiscard]] const RankGrid3& grid3() const { return grid3_; }

  // Start positions matching q with exactly one mismatch, ascending.
  [[nodiscard]] std::vector<index_t> query_one_mismatch(std::string_view q) const;
  // Start positions with Hamming distance <= 1, ascending.
  [[nodiscard]] std::vector<index_t> query_at_most_one(std::string_view q) const;
  // Positions found with the mismatch pinned at each pattern index in turn;
  // element l-1 lists the hits whose single mismatch sits at pattern index l.
  [[nodiscard]] std::vector<std::vector<index_t>> one_mismatch_by_pivot(
      std::string_view q) const;

 private:
  // Rank range over the extended universe [1, n+1] of suffixes carrying
  // `part` as a prefix; the empty part covers everything.
  [[nodiscard]] SaRange extended_range(const SuffixIndex& side, std::string_view part) const;
  // Rank of byte c among the distinct bytes of the text, or the insertion
  // rank when absent; `present` reports which case holds.
  [[nodiscard]] index_t symbol_rank(unsigned char c, bool& present) const;

  Text text_;
  SuffixIndex fwd_, rev_;
  RankGrid2 grid2_;
  RankGrid3 grid3_;
  std::vector<unsigned char> alphabet_;  // distinct bytes, ascending
};

// Fixed-gap two-part pattern index: occurrences of q1, then exactly `gap`
// arbitrary symbols, then q2.
class GapIndex {
 public:
  GapIndex(Text text, index_t gap);

  [[nodiscard]] const Text& text() const { return text_; }
  [[nodiscard]] index_t gap() const { return gap_; }
  [[nodiscard]] const RankGrid2& grid() const { return grid_; }

  // Start positions of q1 such that q2 follows after the gap, ascending.
  [[nodiscard]] std::vector<index_t> query(std::string_view q1, std::string_view q2) const;

 private:
  Text text_;
  index_t gap_;
  SuffixIndex fwd_, rev_;
  RankGrid2 grid_;
};

}  // namespace orsti
