#pragma once

#include <string_view>
#include <vector>

#include "orsti/suffix_table.hpp"
#include "orsti/text.hpp"

namespace orsti {

// Suffix array, inverse, adjacent LCP array and an LCP range-minimum
// structure over a single text. Ranks and positions are 1-based; the internal
// construction sentinel is excluded from the sorted view.
class SuffixIndex {
 public:
  explicit SuffixIndex(Text text);

  [[nodiscard]] index_t size() const { return text_.size(); }
  [[nodiscard]] const Text& text() const { return text_; }

  [[nodiscard]] const std::vector<index_t>& sa() const { return table_.sa; }
  [[nodiscard]] const std::vector<index_t>& isa() const { return table_.isa; }
  [[nodiscard]] const std::vector<index_t>& lcp() const { return table_.lcp; }
  [[nodiscard]] const Rmq& lcp_rmq() const { return table_.lcp_rmq; }

  // Rank range of suffixes with `pattern` as a prefix; [1, n] for "".
  [[nodiscard]] SaRange sa_range(std::string_view pattern) const;

  // Common prefix length of the suffixes starting at positions i and j.
  [[nodiscard]] index_t lcp_len(index_t i, index_t j) const;

  // Start positions of `pattern`, ascending.
  [[nodiscard]] std::vector<index_t> occurrences(std::string_view pattern) const;

  [[nodiscard]] const SuffixTable& table() const { return table_; }

 private:
  Text text_;
  SuffixTable table_;
};

// Shared helper: widen pattern bytes to symbol values, applying `shift`.
std::vector<index_t> map_pattern(std::string_view pattern, index_t shift = 0);

}  // namespace orsti
