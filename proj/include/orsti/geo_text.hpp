#pragma once

#include <string>
#include <vector>

#include "orsti/grid.hpp"
#include "orsti/suffix_index.hpp"

namespace orsti {

// Node of a compressed binary trie. bits holds the branch prefix in its low
// len bits, most significant first; first/last delimit the node's values in
// the sorted distinct-value array, 1-based inclusive. Child ids are 0 when
// absent; every internal node has both.
struct TrieNode {
  index_t bits = 0;
  index_t len = 0;
  index_t first = 0;
  index_t last = 0;
  index_t left = 0;
  index_t right = 0;

  friend bool operator==(const TrieNode&, const TrieNode&) = default;
};

// Compressed binary trie over the fixed-width encodings (value - 1) of a
// value set. Duplicates collapse, so d distinct values produce at most
// 2d - 1 nodes. Node ids are 1-based with the root at 1.
class PrefixTrie {
 public:
  PrefixTrie() = default;
  PrefixTrie(std::vector<index_t> values, index_t width);

  [[nodiscard]] index_t width() const { return width_; }
  [[nodiscard]] index_t node_count() const {
    return static_cast<index_t>(nodes_.size()) - 1;
  }
  [[nodiscard]] index_t root() const { return node_count() == 0 ? 0 : 1; }
  [[nodiscard]] const TrieNode& node(index_t v) const { return nodes_[v]; }
  [[nodiscard]] const std::vector<index_t>& values() const { return values_; }

  // Maximal nodes whose subtrees partition the stored values lying in
  // [q, r]; at most 2 * width() of them, emitted in ascending value order.
  [[nodiscard]] std::vector<index_t> decompose(index_t q, index_t r) const;

 private:
  index_t build_node(index_t first, index_t last);

  index_t width_ = 0;
  std::vector<index_t> values_;
  std::vector<TrieNode> nodes_;
};

// Two-dimensional range reporting answered purely by pattern matching on a
// constructed text. Each point contributes a block of its reversed x bits,
// '#', then its y bits, and blocks are joined by '$'. A rectangle query
// decomposes both coordinate ranges into trie prefixes and runs one pattern
// per prefix pair, so a report costs at most (2 * width)^2 pattern matches.
// Coordinates live on [1, side]^2 where side is the number of points.
class GeoTextIndex {
 public:
  explicit GeoTextIndex(std::vector<Point2> points);

  [[nodiscard]] index_t point_count() const { return side_; }
  [[nodiscard]] index_t side() const { return side_; }
  [[nodiscard]] index_t width() const { return width_; }
  [[nodiscard]] const Text& text() const { return sidx_.text(); }
  [[nodiscard]] const SuffixIndex& suffix_index() const { return sidx_; }
  [[nodiscard]] const PrefixTrie& x_trie() const { return xtrie_; }
  [[nodiscard]] const PrefixTrie& y_trie() const { return ytrie_; }

  // Points inside the rectangle in ascending (x, y, label) order. When
  // pattern_queries is given it receives the number of pattern matches run.
  [[nodiscard]] std::vector<Point2> report(
      index_t x1, index_t x2, index_t y1, index_t y2,
      index_t* pattern_queries = nullptr) const;

 private:
  std::vector<Point2> points_;
  index_t side_ = 0;
  index_t width_ = 0;
  SuffixIndex sidx_;
  PrefixTrie xtrie_, ytrie_;
};

}  // namespace orsti
