#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"

namespace testing_helpers {

using namespace ballcomp;

inline Graph graph_of(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> list(edges);
  return Graph::from_edges(n, list);
}

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

/// Oracle: the set is one of the enumerated balls of the family.
inline bool is_enumerated(const BallFamily& family, const VertexSet& s) {
  const auto balls = enumerate_balls(family);
  return std::binary_search(balls.begin(), balls.end(), s);
}

}  // namespace testing_helpers

#include "ballcomp/generators.hpp"
#include "ballcomp/tree.hpp"

namespace testing_helpers {

/// Random ordered binary tree on n nodes: node i hangs from a random earlier
/// node with a free slot; node 0 is the root.
inline RootedBinaryTree random_tree(int n, SplitMix64& rng) {
  std::vector<std::optional<Node>> left(n), right(n);
  std::vector<std::pair<Node, bool>> free_slots{{0, true}, {0, false}};
  for (Node x = 1; x < n; ++x) {
    const std::size_t k = rng.below(free_slots.size());
    const auto [parent, is_left] = free_slots[k];
    free_slots.erase(free_slots.begin() + static_cast<std::ptrdiff_t>(k));
    (is_left ? left : right)[parent] = x;
    free_slots.push_back({x, true});
    free_slots.push_back({x, false});
  }
  return RootedBinaryTree::from_children(0, left, right);
}

/// Oracle: lca as the deepest common element of both root paths.
inline Node lca_by_ancestors(const RootedBinaryTree& t, Node x, Node y) {
  std::vector<Node> ax;
  for (std::optional<Node> a = x; a; a = t.parent(*a)) ax.push_back(*a);
  for (std::optional<Node> b = y; b; b = t.parent(*b)) {
    if (std::find(ax.begin(), ax.end(), *b) != ax.end()) return *b;
  }
  return t.root();
}

}  // namespace testing_helpers
