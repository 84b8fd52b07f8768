#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "orsti/document_index.hpp"
#include "orsti/grid.hpp"
#include "orsti/text.hpp"
#include "orsti/tree_view.hpp"

namespace orsti {

enum class MeasureKind { tf, docrank };

// Positions-based relevance: tf counts occurrences in the document, docrank
// rates every occurrence set of a document by a static per-document score.
struct RelevanceMeasure {
  MeasureKind kind = MeasureKind::tf;
  std::vector<std::int64_t> docrank_table;  // 1-based by doc id for docrank
};

// Ids of the documents containing `pattern`, ascending. Runs one range
// search plus one bounded report on the predecessor array, so the work is
// proportional to the number of reported documents.
std::vector<index_t> list_documents(const DocumentIndex& idx, std::string_view pattern);

// Weighted top-k document retrieval. Every document's leaf set is closed
// under pairwise lca into its marked nodes; each marked node owns one slot in
// a flattened array laid out by tree preorder and, within one node, by
// ascending document id. A weighted grid over (slot, nearest marked
// ancestor's depth + 1) turns a top-k query at the pattern locus v into a
// three-sided search on [slots under v] x [0, depth(v)].
class TopKIndex {
 public:
  TopKIndex(std::vector<Text> docs, RelevanceMeasure measure);

  [[nodiscard]] const DocumentIndex& docidx() const { return docidx_; }
  [[nodiscard]] const SuffixTreeView& tree() const { return tree_; }
  [[nodiscard]] const RelevanceMeasure& measure() const { return measure_; }

  // The min(k, matching docs) documents with the heaviest weights for
  // `pattern`, by decreasing weight; equal weights list the smaller doc id
  // first. Pairs are (doc id, weight).
  [[nodiscard]] std::vector<std::pair<index_t, std::int64_t>> topk(
      std::string_view pattern, std::int64_t k) const;

  // Flattened-slot accessors (1-based slot indexes).
  [[nodiscard]] index_t slot_count() const { return static_cast<index_t>(slot_doc_.size()) - 1; }
  [[nodiscard]] const std::vector<index_t>& slot_doc() const { return slot_doc_; }
  [[nodiscard]] const std::vector<index_t>& slot_node() const { return slot_node_; }
  [[nodiscard]] const std::vector<index_t>& slot_parent_depth() const {
    return slot_parent_depth_;
  }
  [[nodiscard]] const std::vector<std::int64_t>& slot_weight() const { return slot_weight_; }
  // Slot range [first, last] owned by the subtree of node v; empty as {1, 0}.
  [[nodiscard]] std::pair<index_t, index_t> subtree_slots(index_t v) const;

 private:
  DocumentIndex docidx_;
  SuffixTreeView tree_;
  RelevanceMeasure measure_;
  std::vector<index_t> slot_doc_, slot_node_, slot_parent_depth_;
  std::vector<std::int64_t> slot_weight_;
  std::vector<index_t> node_slot_start_;  // per node, CSR offset into slots
  std::vector<index_t> subtree_end_;      // per node, last preorder id in its subtree
  WeightedGrid wgrid_;
};

}  // namespace orsti
