#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "orsti/grid.hpp"
#include "orsti/suffix_index.hpp"
#include "orsti/text.hpp"

namespace orsti {

// One phrase of a greedy left-to-right parse: copy `l` symbols starting `f`
// positions back, then append the literal `c` when present. A fresh symbol
// is encoded as f = l = 0 with a literal; the final phrase omits its literal
// when the copy runs to the end of the source.
struct LzPhrase {
  index_t f = 0;
  index_t l = 0;
  bool has_c = false;
  char c = '\0';

  friend bool operator==(const LzPhrase&, const LzPhrase&) = default;
};

struct LzParse {
  std::vector<LzPhrase> phrases;
  index_t source_length = 0;

  friend bool operator==(const LzParse&, const LzParse&) = default;
};

// Greedy parse; the longest copy wins, and among equally long copies the
// nearest source. Copies may overlap the position being written.
[[nodiscard]] LzParse lz_parse(const Text& s);

// Inverse of lz_parse. Rejects malformed parses: a copy reaching before the
// start, a phrase overrunning the declared length, or a final length
// mismatch.
[[nodiscard]] Text lz_decompress(const LzParse& parse);

// Parse of s with `context` prepended as referenceable history, equal to the
// tail of parsing context + separator + s; f values may reach across into
// the context. An empty context reproduces lz_parse(s).
[[nodiscard]] LzParse lz_conditional(const Text& s, std::string_view context);

// 1-based phrase start positions u(1..c+1); the final entry is n+1.
[[nodiscard]] std::vector<index_t> phrase_starts(const LzParse& parse);

// Substring compression: parse any window of a fixed text without
// extracting it, phrase-identical to extract-then-parse.
class ScqIndex {
 public:
  explicit ScqIndex(Text s);

  [[nodiscard]] const Text& text() const { return sidx_.text(); }
  [[nodiscard]] const SuffixIndex& suffix_index() const { return sidx_; }
  [[nodiscard]] const RankGrid2& grid() const { return grid_; }

  // (t, len): the t in [l, r] whose suffix shares the longest prefix with
  // the suffix at k, and that length. A tie between the rank-below and
  // rank-above neighbours goes to the below (lexicographically smaller)
  // one. When k itself lies in [l, r] it wins with its full length.
  [[nodiscard]] std::pair<index_t, index_t> ilcp(index_t k, index_t l, index_t r) const;

  // Greedy parse of the window [i, j].
  [[nodiscard]] LzParse scq(index_t i, index_t j) const;

 private:
  SuffixIndex sidx_;
  RankGrid2 grid_;
};

// Phrase-boundary occurrence search: finds the occurrences of a pattern
// whose window covers a phrase end of the greedy parse.
class Lz77Index {
 public:
  explicit Lz77Index(Text t);

  [[nodiscard]] const Text& text() const { return sidx_.text(); }
  [[nodiscard]] const SuffixIndex& suffix_index() const { return sidx_; }
  [[nodiscard]] const LzParse& parse() const { return parse_; }
  // u(1..c+1), as phrase_starts.
  [[nodiscard]] const std::vector<index_t>& starts() const { return starts_; }
  [[nodiscard]] const RankGrid2& grid() const { return grid_; }

  // Occurrence starts p of q whose window [p, p+|q|-1] covers a phrase end,
  // ascending, each exactly once.
  [[nodiscard]] std::vector<index_t> primary_occurrences(std::string_view q) const;

 private:
  // A phrase read backwards, as a slice of the reversed text.
  struct RevKey {
    index_t pos = 0;  // start in the reversed text
    index_t len = 0;  // phrase length
  };
  // -1 / 0 / +1 of the slice against w, where 0 means w is a prefix of it.
  [[nodiscard]] int prefix_compare(const RevKey& key, std::string_view w) const;

  SuffixIndex sidx_;
  SuffixIndex rev_;
  LzParse parse_;
  std::vector<index_t> starts_;
  std::vector<RevKey> sorted_keys_;  // reversed phrases in lexicographic order
  RankGrid2 grid_;  // x: rank of the suffix after a phrase (0 for the end), y: reversed-phrase rank
};

}  // namespace orsti
