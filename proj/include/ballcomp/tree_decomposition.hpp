#pragma once

#include <utility>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/tree.hpp"

namespace ballcomp {

/// Unrooted tree decomposition: bags indexed by node, tree given as an edge list.
struct RawTreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<Node, Node>> edges;

  int width() const;
};

/// Tree decomposition over a rooted ordered binary tree.
struct TreeDecomposition {
  RootedBinaryTree tree;
  std::vector<VertexSet> bags;

  int width() const;
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Throws InputError naming the violated axiom (tree shape, bag contents,
/// edge coverage, or connectivity of a vertex's bags).
void validate_decomposition(const Graph& g, const RawTreeDecomposition& d);
void validate_decomposition(const Graph& g, const TreeDecomposition& d);

/// Roots the decomposition at `root` and splits nodes with more than two
/// children into chains of copies of their bag. Width is unchanged.
TreeDecomposition make_binary(const Graph& g, const RawTreeDecomposition& d, Node root = 0);

RawTreeDecomposition to_raw(const TreeDecomposition& d);

/// Elimination-order decomposition using the min-fill heuristic (ties: fewest
/// neighbours, then least id). Valid, but its width is only an upper bound.
RawTreeDecomposition min_fill_decomposition(const Graph& g);

/// Intersects every bag with the subgraph's vertex set and renames vertices.
TreeDecomposition restrict_decomposition(const TreeDecomposition& d, const InducedSubgraph& sub);

/// h(v): the shallowest node whose bag contains v, ties to the least node id.
std::vector<Node> home_nodes(const TreeDecomposition& d, int num_vertices);

}  // namespace ballcomp
