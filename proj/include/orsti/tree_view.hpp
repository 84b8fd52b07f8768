#pragma once

#include <vector>

#include "orsti/suffix_table.hpp"
#include "orsti/text.hpp"

namespace orsti {

// Hierarchy of the distinct lcp-intervals of a suffix table, one node per
// interval plus one leaf per retained rank. Node ids are preorder numbers
// with children ordered by interval start; the root is node 0. When the
// sorted order starts with a lone maximal repeat the interval tree would give
// the root a single child spanning every rank; that child is merged into the
// root so intervals stay pairwise distinct.
struct SuffixTreeView {
  index_t node_count = 0;
  std::vector<index_t> lo, hi;       // per node, rank interval [lo, hi]
  std::vector<index_t> parent;       // -1 for the root
  std::vector<index_t> str_depth;    // symbols matched from the root
  std::vector<index_t> depth;        // edges from the root
  std::vector<index_t> child_start;  // CSR offsets into child_list
  std::vector<index_t> child_list;
  std::vector<index_t> leaf_node;    // rank -> its leaf node id
  std::vector<index_t> adj_lca;      // h -> lca of the leaves at ranks h, h+1

  static SuffixTreeView build(const SuffixTable& table);

  [[nodiscard]] bool is_leaf(index_t v) const {
    return child_start[v] == child_start[v + 1];
  }
  [[nodiscard]] index_t child_count(index_t v) const {
    return child_start[v + 1] - child_start[v];
  }
  // Deepest node whose interval contains both ranks. `table` must be the one
  // this view was built from.
  [[nodiscard]] index_t lca(const SuffixTable& table, index_t rank_a,
                            index_t rank_b) const;
  // Deepest node whose interval equals the given non-empty range.
  [[nodiscard]] index_t locus(const SuffixTable& table, const SaRange& range) const;
};

}  // namespace orsti
