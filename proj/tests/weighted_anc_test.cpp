#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orsti/weighted_anc.hpp"

using orsti::index_t;
using orsti::LocusIndex;
using orsti::SaRange;
using orsti::Text;
using orsti::WeightedTree;

namespace {

index_t walk_up(const WeightedTree& t, index_t u, std::int64_t thr) {
  index_t v = u;
  while (t.parent(v) != 0 && t.node_weight(t.parent(v)) >= thr)
    v = t.parent(v);
  return v;
}

index_t lca_by_paths(const WeightedTree& t, index_t a, index_t b) {
  std::vector<index_t> up;
  for (index_t v = a; v != 0; v = t.parent(v)) up.push_back(v);
  for (index_t v = b; v != 0; v = t.parent(v))
    if (std::find(up.begin(), up.end(), v) != up.end()) return v;
  return 0;
}

struct TreeSpec {
  std::vector<index_t> parent;
  std::vector<std::int64_t> weight;
};

TreeSpec random_tree(std::mt19937& rng, index_t nodes, std::int64_t max_w) {
  TreeSpec s;
  s.parent.assign(nodes + 1, 0);
  s.weight.assign(nodes + 1, 0);
  for (index_t v = 2; v <= nodes; ++v) {
    s.parent[v] = 1 + static_cast<index_t>(rng() % (v - 1));
    s.weight[v] = 1 + static_cast<std::int64_t>(rng() % max_w);
  }
  return s;
}

}  // namespace

TEST_CASE("build inserts dummies and records adjacent lca weights") {
  const std::vector<index_t> parent{0, 0, 1, 2};
  const std::vector<std::int64_t> weight{0, 0, 2, 3};
  const WeightedTree t = WeightedTree::build(parent, weight);

  CHECK(t.input_count() == 3);
  CHECK(t.node_count() == 5);
  CHECK(t.leaf_count() == 3);
  CHECK(t.root() == 1);
  CHECK(t.node_weight(1) == 0);
  CHECK(t.node_weight(2) == 2);
  CHECK(t.node_weight(3) == 5);
  CHECK(t.node_weight(4) == 1);
  CHECK(t.node_weight(5) == 3);
  CHECK(t.leaf_at(1) == 3);
  CHECK(t.leaf_at(2) == 5);
  CHECK(t.leaf_at(3) == 4);
  CHECK(t.leaf_index(3) == 1);
  CHECK(t.leaf_index(1) == 0);
  CHECK(t.first_leaf(1) == 1);
  CHECK(t.first_leaf(4) == 3);
  CHECK(t.adjacent_lca_weights() == std::vector<std::int64_t>{0, 2, 0});

  const WeightedTree cherry = WeightedTree::build({0, 0, 1, 1}, {0, 0, 4, 7});
  CHECK(cherry.node_count() == 3);
  CHECK(cherry.leaf_count() == 2);
  CHECK(cherry.adjacent_lca_weights() == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("build rejects malformed descriptions") {
  CHECK_THROWS_AS(WeightedTree::build({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 0, 0}, {0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 2, 1}, {0, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 0, 3, 2}, {0, 0, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 0, 9}, {0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 0, 2}, {0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 0, 1}, {0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree::build({0, 0, 1}, {0, 0, -4}),
                  std::invalid_argument);
}

TEST_CASE("weighted ancestor anchors on a small path") {
  const WeightedTree t = WeightedTree::build({0, 0, 1, 2}, {0, 0, 2, 3});

  CHECK(t.weighted_ancestor(3, 5) == 3);
  CHECK(t.weighted_ancestor(3, 3) == 3);
  CHECK(t.weighted_ancestor(3, 2) == 2);
  CHECK(t.weighted_ancestor(3, 1) == 2);
  CHECK(t.weighted_ancestor(5, 3) == 5);
  CHECK(t.weighted_ancestor(5, 2) == 2);
  CHECK(t.weighted_ancestor(5, 1) == 2);
  CHECK(t.weighted_ancestor(4, 1) == 4);
  CHECK(t.weighted_ancestor(2, 2) == 2);
  CHECK(t.weighted_ancestor(2, 1) == 2);

  CHECK_THROWS_AS((void)t.weighted_ancestor(3, 6), std::invalid_argument);
  CHECK_THROWS_AS((void)t.weighted_ancestor(3, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)t.weighted_ancestor(1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)t.weighted_ancestor(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)t.weighted_ancestor(99, 1), std::invalid_argument);
}

TEST_CASE("weighted ancestor matches the walk oracle") {
  std::mt19937 rng(20260816);

  for (int round = 0; round < 24; ++round) {
    const index_t nodes = 2 + static_cast<index_t>(rng() % 100);
    const TreeSpec s = random_tree(rng, nodes, 1 + rng() % 6);
    const WeightedTree t = WeightedTree::build(s.parent, s.weight);
    for (index_t u = 1; u <= t.node_count(); ++u)
      for (std::int64_t thr = 1; thr <= t.node_weight(u); ++thr)
        CHECK(t.weighted_ancestor(u, thr) == walk_up(t, u, thr));
  }

  for (int round = 0; round < 12; ++round) {
    const index_t nodes = 2 + static_cast<index_t>(rng() % 199);
    const TreeSpec s = random_tree(rng, nodes, 1000000);
    const WeightedTree t = WeightedTree::build(s.parent, s.weight);
    for (index_t u = 1; u <= t.node_count(); ++u) {
      const std::int64_t top = t.node_weight(u);
      if (top < 1) continue;
      for (index_t v = u; v != 0; v = t.parent(v)) {
        for (const std::int64_t thr :
             {t.node_weight(v) - 1, t.node_weight(v), t.node_weight(v) + 1})
          if (thr >= 1 && thr <= top)
            CHECK(t.weighted_ancestor(u, thr) == walk_up(t, u, thr));
      }
      for (int probe = 0; probe < 4; ++probe) {
        const std::int64_t thr = 1 + static_cast<std::int64_t>(rng() % top);
        CHECK(t.weighted_ancestor(u, thr) == walk_up(t, u, thr));
      }
    }
  }
}

TEST_CASE("adjacent lca weights satisfy the pairwise and interval oracles") {
  std::mt19937 rng(4711);

  for (int round = 0; round < 30; ++round) {
    const index_t nodes = 1 + static_cast<index_t>(rng() % 80);
    const TreeSpec s = random_tree(rng, nodes, 1 + rng() % 9);
    const WeightedTree t = WeightedTree::build(s.parent, s.weight);
    const index_t k = t.leaf_count();
    const auto& nw = t.adjacent_lca_weights();
    REQUIRE(static_cast<index_t>(nw.size()) == k);

    for (index_t i = 1; i + 1 <= k; ++i) {
      const index_t l = lca_by_paths(t, t.leaf_at(i), t.leaf_at(i + 1));
      CHECK(nw[i] == t.node_weight(l));
    }

    for (int probe = 0; probe < 40 && k >= 2; ++probe) {
      index_t a = 1 + static_cast<index_t>(rng() % k);
      index_t b = 1 + static_cast<index_t>(rng() % k);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      const index_t l = lca_by_paths(t, t.leaf_at(a), t.leaf_at(b));
      const std::int64_t low = *std::min_element(nw.begin() + a, nw.begin() + b);
      CHECK(t.node_weight(l) == low);
    }
  }
}

TEST_CASE("substring locus anchors") {
  const LocusIndex idx{Text("mississippi")};

  CHECK(idx.locus_range(2, 5) == SaRange{3, 4});
  CHECK(idx.locus_range(1, 11) ==
        SaRange{idx.suffix_index().isa()[1], idx.suffix_index().isa()[1]});
  for (index_t i = 1; i <= 11; ++i) {
    const std::string one(1, static_cast<char>(idx.suffix_index().text().at(i)));
    CHECK(idx.locus_range(i, i) == idx.suffix_index().sa_range(one));
  }

  CHECK_THROWS_AS((void)idx.locus_range(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)idx.locus_range(2, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)idx.locus_range(1, 12), std::invalid_argument);
}

TEST_CASE("substring locus equals pattern search") {
  std::mt19937 rng(99123);
  std::vector<std::string> texts{"a", "ab", "aaaaaaaa", "abababab",
                                 "aaaabaaaab"};
  for (int round = 0; round < 25; ++round)
    texts.push_back(
        oracle::random_text(rng, 1 + static_cast<index_t>(rng() % 60),
                            2 + static_cast<index_t>(rng() % 3)));

  for (const std::string& s : texts) {
    const LocusIndex idx{Text(s)};
    const index_t n = static_cast<index_t>(s.size());
    for (index_t i = 1; i <= n; ++i)
      for (index_t j = i; j <= n; ++j) {
        const std::string part = s.substr(i - 1, j - i + 1);
        CHECK(idx.locus_range(i, j) == idx.suffix_index().sa_range(part));
      }
  }
}
