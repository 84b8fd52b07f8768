#include "orsti/tree_view.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace orsti {

namespace {

// Mutable node record used while the interval stack runs.
struct RawNode {
  index_t lo = 0, hi = 0;
  index_t str_depth = 0;
  index_t parent = -1;
  std::vector<index_t> children;
};

}  // namespace

SuffixTreeView SuffixTreeView::build(const SuffixTable& table) {
  const index_t m = table.suffix_count();
  const index_t nseq = table.seq_size();

  std::vector<RawNode> raw;
  raw.reserve(static_cast<std::size_t>(m) * 2 + 1);
  std::vector<index_t> adj_raw(std::max<index_t>(m, 1), -1);
  std::vector<index_t> leaf_raw(m + 1, -1);

  const auto make_node = [&raw](index_t lo, index_t hi, index_t sd) {
    raw.push_back({lo, hi, sd, -1, {}});
    return static_cast<index_t>(raw.size()) - 1;
  };
  const auto attach = [&raw](index_t child, index_t par) {
    raw[child].parent = par;
    raw[par].children.push_back(child);
  };

  std::vector<index_t> stack;
  stack.push_back(make_node(1, m, 0));

  for (index_t h = 1; h <= m; ++h) {
    if (h >= 2) {
      const index_t l = table.lcp[h - 1];
      index_t carry = -1;
      while (raw[stack.back()].str_depth > l) {
        const index_t x = stack.back();
        stack.pop_back();
        raw[x].hi = h - 1;
        if (raw[stack.back()].str_depth >= l)
          attach(x, stack.back());
        else
          carry = x;
      }
      if (raw[stack.back()].str_depth < l) {
        const index_t nid = make_node(raw[carry].lo, 0, l);
        attach(carry, nid);
        stack.push_back(nid);
      }
      adj_raw[h - 1] = stack.back();
    }
    const index_t leaf = make_node(h, h, nseq - table.sa[h] + 1);
    leaf_raw[h] = leaf;
    stack.push_back(leaf);
  }
  while (!stack.empty()) {
    const index_t x = stack.back();
    stack.pop_back();
    raw[x].hi = m;
    if (!stack.empty()) attach(x, stack.back());
  }

  // A root with a single child shares its interval with it; keep the child.
  index_t root = 0;
  while (raw[root].children.size() == 1 && raw[root].lo == raw[raw[root].children[0]].lo &&
         raw[root].hi == raw[raw[root].children[0]].hi) {
    root = raw[root].children[0];
    raw[root].parent = -1;
  }

  SuffixTreeView view;
  const index_t count = static_cast<index_t>(raw.size());
  std::vector<index_t> remap(count, -1);
  view.lo.reserve(count);

  // Iterative preorder walk; children were attached in ascending lo already.
  std::vector<std::pair<index_t, index_t>> frames;  // (raw id, depth in edges)
  frames.emplace_back(root, 0);
  while (!frames.empty()) {
    const auto [id, d] = frames.back();
    frames.pop_back();
    remap[id] = static_cast<index_t>(view.lo.size());
    view.lo.push_back(raw[id].lo);
    view.hi.push_back(raw[id].hi);
    view.str_depth.push_back(raw[id].str_depth);
    view.depth.push_back(d);
    view.parent.push_back(raw[id].parent);  // raw id, remapped below
    for (auto it = raw[id].children.rbegin(); it != raw[id].children.rend(); ++it)
      frames.emplace_back(*it, d + 1);
  }

  view.node_count = static_cast<index_t>(view.lo.size());
  view.child_start.assign(view.node_count + 1, 0);
  view.child_list.assign(view.node_count > 0 ? view.node_count - 1 : 0, 0);
  for (index_t v = 0; v < view.node_count; ++v) {
    if (view.parent[v] >= 0) view.parent[v] = remap[view.parent[v]];
    if (v > 0) ++view.child_start[view.parent[v] + 1];
  }
  for (index_t v = 0; v < view.node_count; ++v)
    view.child_start[v + 1] += view.child_start[v];
  std::vector<index_t> fill(view.child_start.begin(), view.child_start.end() - 1);
  for (index_t v = 1; v < view.node_count; ++v)
    view.child_list[fill[view.parent[v]]++] = v;

  view.leaf_node.assign(m + 1, -1);
  for (index_t h = 1; h <= m; ++h) view.leaf_node[h] = remap[leaf_raw[h]];
  view.adj_lca.assign(std::max<index_t>(m, 1), -1);
  for (index_t h = 1; h < m; ++h) view.adj_lca[h] = remap[adj_raw[h]];
  return view;
}

index_t SuffixTreeView::lca(const SuffixTable& table, index_t rank_a,
                            index_t rank_b) const {
  if (rank_a > rank_b) std::swap(rank_a, rank_b);
  if (rank_a < 1 || rank_b > static_cast<index_t>(leaf_node.size()) - 1)
    throw std::invalid_argument("rank out of range");
  if (rank_a == rank_b) return leaf_node[rank_a];
  return adj_lca[table.lcp_rmq.argmin(rank_a, rank_b - 1)];
}

index_t SuffixTreeView::locus(const SuffixTable& table, const SaRange& range) const {
  if (range.empty()) throw std::invalid_argument("empty range has no locus");
  return lca(table, range.lo, range.hi);
}

}  // namespace orsti
