#pragma once

#include <cstdint>
#include <vector>

#include "orsti/grid.hpp"
#include "orsti/suffix_index.hpp"
#include "orsti/tree_view.hpp"

namespace orsti {

// Rooted tree with positive integer edge weights supporting weighted
// ancestor queries. The build appends a weight-1 dummy leaf under every
// single-child node, so each internal node keeps at least two children and
// the weights of adjacent-leaf lcas mark every subtree boundary. Node ids
// are 1-based; dummies take the ids after the input nodes.
class WeightedTree {
 public:
  WeightedTree() = default;

  // parent[v] is the parent of node v (0 exactly for the root) and weight[v]
  // the weight of the edge towards it, ignored for the root. Both arrays are
  // 1-based with slot 0 unused. Cycles, multiple roots, and non-positive
  // edge weights are rejected.
  static WeightedTree build(const std::vector<index_t>& parent,
                            const std::vector<std::int64_t>& weight);

  [[nodiscard]] index_t node_count() const { return node_count_; }
  [[nodiscard]] index_t input_count() const { return input_count_; }
  [[nodiscard]] index_t leaf_count() const {
    return static_cast<index_t>(leaves_.size()) - 1;
  }
  [[nodiscard]] index_t root() const { return root_; }
  [[nodiscard]] index_t parent(index_t v) const { return parent_[v]; }
  [[nodiscard]] std::int64_t node_weight(index_t v) const { return wsum_[v]; }
  [[nodiscard]] bool is_leaf(index_t v) const {
    return child_start_[v] == child_start_[v + 1];
  }
  // Node id of the i-th leaf in depth-first order, i in [1, leaf_count()].
  [[nodiscard]] index_t leaf_at(index_t i) const { return leaves_[i]; }
  // Inverse of leaf_at; 0 for internal nodes.
  [[nodiscard]] index_t leaf_index(index_t v) const { return leaf_index_[v]; }
  // Leaf index of the leftmost leaf below v.
  [[nodiscard]] index_t first_leaf(index_t v) const { return first_leaf_[v]; }
  // Weights of the lcas of adjacent leaf pairs, 1-based with leaf_count()-1
  // entries; entry i belongs to the pair (i, i+1).
  [[nodiscard]] const std::vector<std::int64_t>& adjacent_lca_weights() const {
    return nw_;
  }

  // Unique ancestor v of u with node_weight(v) >= t and the parent of v
  // strictly lighter. Requires 1 <= t <= node_weight(u).
  [[nodiscard]] index_t weighted_ancestor(index_t u, std::int64_t t) const;

 private:
  index_t input_count_ = 0;
  index_t node_count_ = 0;
  index_t root_ = 0;
  std::vector<index_t> parent_;
  std::vector<std::int64_t> wsum_;
  std::vector<index_t> child_start_;
  std::vector<index_t> child_list_;
  std::vector<index_t> first_leaf_;
  std::vector<index_t> leaves_;
  std::vector<index_t> leaf_index_;
  std::vector<std::int64_t> nw_;
  std::vector<index_t> nw_lca_;
  std::vector<std::int64_t> nw_values_;
  RankGrid2 grid_;
};

// Substring locus queries over the suffix tree of a text, answered by a
// weighted ancestor search with string depths as node weights.
class LocusIndex {
 public:
  explicit LocusIndex(Text text);

  [[nodiscard]] const SuffixIndex& suffix_index() const { return sidx_; }
  [[nodiscard]] const SuffixTreeView& tree() const { return view_; }
  [[nodiscard]] const WeightedTree& weighted() const { return tree_; }

  // Rank interval of the suffixes prefixed by text[i..j].
  [[nodiscard]] SaRange locus_range(index_t i, index_t j) const;

 private:
  SuffixIndex sidx_;
  SuffixTreeView view_;
  WeightedTree tree_;
};

}  // namespace orsti
