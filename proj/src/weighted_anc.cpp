#include "orsti/weighted_anc.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace orsti {

WeightedTree WeightedTree::build(const std::vector<index_t>& parent,
                                 const std::vector<std::int64_t>& weight) {
  if (parent.size() < 2 || parent.size() != weight.size())
    throw std::invalid_argument("weighted tree: bad description arrays");
  const index_t n_in = static_cast<index_t>(parent.size()) - 1;

  WeightedTree t;
  t.input_count_ = n_in;
  for (index_t v = 1; v <= n_in; ++v) {
    const index_t p = parent[v];
    if (p < 0 || p > n_in || p == v)
      throw std::invalid_argument("weighted tree: bad parent id");
    if (p == 0) {
      if (t.root_ != 0) throw std::invalid_argument("weighted tree: two roots");
      t.root_ = v;
    } else if (weight[v] <= 0) {
      throw std::invalid_argument("weighted tree: edge weight must be positive");
    }
  }
  if (t.root_ == 0) throw std::invalid_argument("weighted tree: no root");

  t.wsum_.assign(n_in + 1, -1);
  t.wsum_[t.root_] = 0;
  std::vector<index_t> path;
  for (index_t v = 1; v <= n_in; ++v) {
    if (t.wsum_[v] >= 0) continue;
    path.clear();
    index_t u = v;
    while (t.wsum_[u] < 0) {
      path.push_back(u);
      if (path.size() > static_cast<std::size_t>(n_in))
        throw std::invalid_argument("weighted tree: cycle");
      u = parent[u];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      t.wsum_[*it] = t.wsum_[parent[*it]] + weight[*it];
  }

  t.parent_ = parent;
  std::vector<index_t> degree(n_in + 1, 0);
  for (index_t v = 1; v <= n_in; ++v)
    if (parent[v] != 0) ++degree[parent[v]];
  for (index_t v = 1; v <= n_in; ++v) {
    if (degree[v] != 1) continue;
    t.parent_.push_back(v);
    t.wsum_.push_back(t.wsum_[v] + 1);
  }
  t.node_count_ = static_cast<index_t>(t.parent_.size()) - 1;

  const index_t m = t.node_count_;
  std::vector<index_t> count(m + 2, 0);
  for (index_t v = 1; v <= m; ++v)
    if (t.parent_[v] != 0) ++count[t.parent_[v] + 1];
  t.child_start_.assign(m + 2, 0);
  for (index_t v = 1; v <= m + 1; ++v)
    t.child_start_[v] = t.child_start_[v - 1] + count[v];
  t.child_list_.assign(t.child_start_[m + 1], 0);
  std::vector<index_t> fill(t.child_start_.begin(), t.child_start_.end());
  for (index_t v = 1; v <= m; ++v)
    if (t.parent_[v] != 0) t.child_list_[fill[t.parent_[v]]++] = v;

  t.first_leaf_.assign(m + 1, 0);
  t.leaf_index_.assign(m + 1, 0);
  t.leaves_.assign(1, 0);
  t.nw_.assign(1, 0);
  t.nw_lca_.assign(1, 0);
  std::vector<index_t> pending;
  std::vector<std::pair<index_t, index_t>> walk{{t.root_, 0}};
  while (!walk.empty()) {
    const auto [v, h] = walk.back();
    const index_t base = t.child_start_[v];
    const index_t arity = t.child_start_[v + 1] - base;
    if (h == 0) {
      if (arity == 0) {
        const index_t i = static_cast<index_t>(t.leaves_.size());
        t.leaves_.push_back(v);
        t.leaf_index_[v] = i;
        t.first_leaf_[v] = i;
        for (const index_t w : pending) t.first_leaf_[w] = i;
        pending.clear();
        walk.pop_back();
        continue;
      }
      pending.push_back(v);
    }
    if (h == arity) {
      walk.pop_back();
      continue;
    }
    if (h > 0) {
      t.nw_.push_back(t.wsum_[v]);
      t.nw_lca_.push_back(v);
    }
    walk.back().second = h + 1;
    walk.emplace_back(t.child_list_[base + h], 0);
  }

  t.nw_values_.assign(t.nw_.begin() + 1, t.nw_.end());
  std::sort(t.nw_values_.begin(), t.nw_values_.end());
  t.nw_values_.erase(
      std::unique(t.nw_values_.begin(), t.nw_values_.end()),
      t.nw_values_.end());
  std::vector<Point2> pts;
  pts.reserve(t.nw_.size() - 1);
  for (index_t i = 1; i < static_cast<index_t>(t.nw_.size()); ++i) {
    const auto at = std::lower_bound(t.nw_values_.begin(), t.nw_values_.end(),
                                     t.nw_[i]);
    const index_t x =
        static_cast<index_t>(at - t.nw_values_.begin()) + 1;
    pts.push_back({x, i, i});
  }
  t.grid_ = RankGrid2(std::move(pts),
                      {.require_distinct_x = false, .require_distinct_y = true});
  return t;
}

index_t WeightedTree::weighted_ancestor(index_t u, std::int64_t t) const {
  if (u < 1 || u > node_count_)
    throw std::invalid_argument("weighted ancestor: node out of range");
  if (t < 1 || t > wsum_[u])
    throw std::invalid_argument("weighted ancestor: threshold out of range");

  const index_t i = first_leaf_[u];
  const index_t k = leaf_count();
  const index_t below_t = static_cast<index_t>(
      std::lower_bound(nw_values_.begin(), nw_values_.end(), t) -
      nw_values_.begin());

  std::optional<Point2> left, right;
  if (i > 1) left = grid_.successor_y(1, below_t, i - 1, Dir::below);
  if (i <= k - 1) right = grid_.successor_y(1, below_t, i, Dir::above);
  index_t anc;
  if (left && (!right || nw_[left->y] >= nw_[right->y]))
    anc = nw_lca_[left->y];
  else
    anc = nw_lca_[right->y];

  index_t lo = child_start_[anc];
  index_t hi = child_start_[anc + 1];
  while (hi - lo > 1) {
    const index_t mid = lo + (hi - lo) / 2;
    if (first_leaf_[child_list_[mid]] <= i)
      lo = mid;
    else
      hi = mid;
  }
  return child_list_[lo];
}

LocusIndex::LocusIndex(Text text) : sidx_(std::move(text)) {
  view_ = SuffixTreeView::build(sidx_.table());
  std::vector<index_t> parent(view_.node_count + 1, 0);
  std::vector<std::int64_t> weight(view_.node_count + 1, 0);
  for (index_t v = 1; v < view_.node_count; ++v) {
    parent[v + 1] = view_.parent[v] + 1;
    weight[v + 1] = view_.str_depth[v] - view_.str_depth[view_.parent[v]];
  }
  tree_ = WeightedTree::build(parent, weight);
}

SaRange LocusIndex::locus_range(index_t i, index_t j) const {
  if (i < 1 || j < i || j > sidx_.size())
    throw std::invalid_argument("locus: invalid range");
  const index_t want = j - i + 1;
  if (want <= view_.str_depth[0]) return {view_.lo[0], view_.hi[0]};
  const index_t leaf = view_.leaf_node[sidx_.isa()[i]] + 1;
  const index_t v = tree_.weighted_ancestor(leaf, want - view_.str_depth[0]);
  return {view_.lo[v - 1], view_.hi[v - 1]};
}

}  // namespace orsti
