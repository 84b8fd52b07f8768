#include "orsti/doc_retrieval.hpp"

#include <algorithm>
#include <stdexcept>

namespace orsti {

std::vector<index_t> list_documents(const DocumentIndex& idx, std::string_view pattern) {
  const SaRange range = idx.find_range(pattern);
  std::vector<index_t> out;
  if (range.empty()) return out;
  // Ranks whose predecessor lies before the range are each document's first
  // hit inside it, so every matching document surfaces exactly once.
  for (const index_t r : idx.psi_rmq().bounded_report(range.lo, range.hi, range.lo))
    out.push_back(idx.da()[r]);
  std::sort(out.begin(), out.end());
  return out;
}

TopKIndex::TopKIndex(std::vector<Text> docs, RelevanceMeasure measure)
    : docidx_(std::move(docs)),
      tree_(SuffixTreeView::build(docidx_.table())),
      measure_(std::move(measure)) {
  const index_t k = docidx_.doc_count();
  if (measure_.kind == MeasureKind::docrank &&
      static_cast<index_t>(measure_.docrank_table.size()) != k + 1)
    throw std::invalid_argument("docrank table must hold one entry per document");

  const index_t m = docidx_.suffix_count();
  std::vector<std::vector<index_t>> doc_ranks(k + 1);
  for (index_t r = 1; r <= m; ++r) doc_ranks[docidx_.da()[r]].push_back(r);

  struct Slot {
    index_t node, doc, parent_depth;
    std::int64_t weight;
  };
  std::vector<Slot> slots;
  slots.reserve(static_cast<std::size_t>(m) * 2);

  std::vector<index_t> marked;
  std::vector<index_t> stack;
  for (index_t d = 1; d <= k; ++d) {
    const std::vector<index_t>& ranks = doc_ranks[d];
    marked.clear();
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      marked.push_back(tree_.leaf_node[ranks[i]]);
      if (i + 1 < ranks.size())
        marked.push_back(tree_.lca(docidx_.table(), ranks[i], ranks[i + 1]));
    }
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

    // Preorder stack walk: the nearest marked proper ancestor of each marked
    // node, or the dummy parent (depth -1) when none exists.
    stack.clear();
    for (const index_t x : marked) {
      while (!stack.empty() &&
             !(tree_.lo[stack.back()] <= tree_.lo[x] && tree_.hi[x] <= tree_.hi[stack.back()]))
        stack.pop_back();
      const index_t parent_depth = stack.empty() ? -1 : tree_.depth[stack.back()];
      std::int64_t weight;
      if (measure_.kind == MeasureKind::tf) {
        weight = std::upper_bound(ranks.begin(), ranks.end(), tree_.hi[x]) -
                 std::lower_bound(ranks.begin(), ranks.end(), tree_.lo[x]);
      } else {
        weight = measure_.docrank_table[d];
      }
      slots.push_back({x, d, parent_depth, weight});
      stack.push_back(x);
    }
  }

  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.node != b.node) return a.node < b.node;
    return a.doc < b.doc;
  });

  const index_t total = static_cast<index_t>(slots.size());
  slot_doc_.assign(total + 1, 0);
  slot_node_.assign(total + 1, 0);
  slot_parent_depth_.assign(total + 1, 0);
  slot_weight_.assign(total + 1, 0);
  node_slot_start_.assign(tree_.node_count + 1, 0);
  std::vector<WeightedPoint> points;
  points.reserve(slots.size());
  for (index_t i = 1; i <= total; ++i) {
    const Slot& s = slots[i - 1];
    slot_doc_[i] = s.doc;
    slot_node_[i] = s.node;
    slot_parent_depth_[i] = s.parent_depth;
    slot_weight_[i] = s.weight;
    ++node_slot_start_[s.node + 1];
    points.push_back({i, s.parent_depth + 1, s.weight, i});
  }
  for (index_t v = 0; v < tree_.node_count; ++v)
    node_slot_start_[v + 1] += node_slot_start_[v];
  wgrid_ = WeightedGrid(std::move(points));

  subtree_end_.assign(tree_.node_count, 0);
  for (index_t v = tree_.node_count - 1; v >= 0; --v) {
    if (tree_.is_leaf(v))
      subtree_end_[v] = v;
    else
      subtree_end_[v] =
          subtree_end_[tree_.child_list[tree_.child_start[v + 1] - 1]];
  }
}

std::pair<index_t, index_t> TopKIndex::subtree_slots(index_t v) const {
  const index_t first = node_slot_start_[v] + 1;
  const index_t last = node_slot_start_[subtree_end_[v] + 1];
  if (last < first) return {1, 0};
  return {first, last};
}

std::vector<std::pair<index_t, std::int64_t>> TopKIndex::topk(
    std::string_view pattern, std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative k");
  std::vector<std::pair<index_t, std::int64_t>> out;
  if (k == 0) return out;
  const SaRange range = docidx_.find_range(pattern);
  if (range.empty()) return out;
  const index_t v = tree_.locus(docidx_.table(), range);
  const auto [first, last] = subtree_slots(v);
  if (last < first) return out;

  // Fetch every qualifying slot: by construction there is exactly one per
  // matching document, so the hit count equals the document count.
  const auto hits = wgrid_.topk(first, last, tree_.depth[v], last - first + 1);
  out.reserve(hits.size());
  for (const WeightedPoint& h : hits) out.emplace_back(slot_doc_[h.label], h.weight);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<std::int64_t>(out.size()) > k) out.resize(static_cast<std::size_t>(k));
  return out;
}

}  // namespace orsti
