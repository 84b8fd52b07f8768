#pragma once

#include <span>
#include <vector>

#include "orsti/rmq.hpp"
#include "orsti/text.hpp"

namespace orsti {

// Sorted range of suffix-array ranks. Empty is encoded as hi < lo.
struct SaRange {
  index_t lo = 1;
  index_t hi = 0;

  [[nodiscard]] bool empty() const { return hi < lo; }
  [[nodiscard]] index_t length() const { return empty() ? 0 : hi - lo + 1; }
  [[nodiscard]] static SaRange none() { return {1, 0}; }

  friend bool operator==(const SaRange&, const SaRange&) = default;
};

// Suffix-array engine over an integer sequence. Callers append a trailing
// zero sentinel themselves; symbols below `first_real` (separators and the
// sentinel) have their suffixes dropped from the sorted view, which is valid
// because those suffixes sort strictly below every real-symbol suffix.
//
// All arrays are 1-based; slot 0 is unused.
struct SuffixTable {
  std::vector<index_t> seq;   // full sequence including sentinel
  std::vector<index_t> sa;    // retained ranks -> positions in seq
  std::vector<index_t> isa;   // positions -> retained ranks (0 for dropped)
  std::vector<index_t> lcp;   // lcp[h] = common prefix of ranks h and h+1
  Rmq lcp_rmq;

  static SuffixTable build(std::vector<index_t> seq_with_sentinel, index_t first_real);

  [[nodiscard]] index_t suffix_count() const { return static_cast<index_t>(sa.size()) - 1; }
  [[nodiscard]] index_t seq_size() const { return static_cast<index_t>(seq.size()) - 1; }

  // Common prefix length of the suffixes at ranks a and b.
  [[nodiscard]] index_t lcp_between_ranks(index_t a, index_t b) const;

  // Rank range of suffixes having `pattern` (mapped symbols) as a prefix.
  // Empty pattern covers every retained suffix.
  [[nodiscard]] SaRange find_range(std::span<const index_t> pattern) const;

  // Maximal rank interval containing `rank` whose members share a prefix of
  // at least `min_len` symbols with the suffix at `rank`.
  [[nodiscard]] std::pair<index_t, index_t> rank_band(index_t rank, index_t min_len) const;

 private:
  // -1 / 0 / +1 comparison of the suffix at `rank` against the pattern, where
  // 0 means the pattern is a prefix of the suffix. Maintains the best match
  // seen so far to skip already-compared symbols.
  struct SearchState {
    index_t best_rank = 0;
    index_t best_match = 0;
  };
  [[nodiscard]] int compare_rank(index_t rank, std::span<const index_t> pattern,
                                 SearchState& state) const;
};

}  // namespace orsti
