#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"
#include "ballcomp/tree.hpp"

namespace ballcomp {

using Label = int;

/// NLC decomposition. Leaves of `tree` are the graph vertices; labels are
/// 0..num_labels-1. The relabelling map of the edge between a node and its
/// parent is stored at the node, so path compositions are always coherent.
struct NlcDecomposition {
  RootedBinaryTree tree;
  int num_labels = 1;
  /// Vertex -> its leaf node.
  std::vector<Node> leaf_of;
  /// Vertex -> initial label.
  std::vector<Label> alpha;
  /// Node -> relabelling towards its parent (empty at the root).
  std::vector<std::vector<Label>> beta;
  /// Internal node -> pairs (left label, right label) joined by an edge.
  std::vector<std::vector<std::pair<Label, Label>>> relation;

  /// The label of vertex v seen at its ancestor y: the edge maps from v's
  /// leaf up to y applied to alpha(v).
  Label label_at(Vertex v, Node y) const;
  /// Leaf node -> vertex.
  std::optional<Vertex> vertex_at(Node x) const;
  /// Vertices whose leaves lie in the subtree of y, sorted.
  VertexSet leaves_below(Node y) const;
};

/// Structural check (throws InputError) followed by the adjacency law over all
/// leaf pairs. Returns the first pair (u < v) where the law and G disagree.
std::optional<std::pair<Vertex, Vertex>> find_nlc_violation(const Graph& g, const NlcDecomposition& d);
/// Throws InputError on any structural problem or adjacency violation.
void validate_nlc(const Graph& g, const NlcDecomposition& d);

/// Which side of the cut at y comes first in the ordered bipartition.
enum class CutSide { Below, Above };

struct TwinCut {
  VertexSet first;
  VertexSet second;
  /// Classes indexed by label; they partition the leaves below y.
  std::vector<VertexSet> classes;
};

/// Cut of the tree edge above y: `Below` gives (leaves under y, rest),
/// `Above` gives (rest, leaves under y). Classes group the leaves under y by
/// their label at y, which makes them twins with respect to the other side.
TwinCut twin_partition_at(const NlcDecomposition& d, int num_vertices, Node y, CutSide side = CutSide::Below);

/// True when every class has identical neighbourhoods in `other`.
bool is_twin_partition(const Graph& g, const std::vector<VertexSet>& classes, const VertexSet& other);

/// min over classes V_i of dist_G(c0, V_i) + dist_{G[V_i + D]}(V_i, d0), where
/// the classes partition C = V(G) - D.
ExtInt dist_via_twin(const Graph& g, const VertexSet& d, const std::vector<VertexSet>& classes, Vertex c0, Vertex d0);

class CwContext {
 public:
  /// Requires t >= 1 and a valid decomposition with at most t labels.
  CwContext(Graph g, NlcDecomposition d, int t);

  const Graph& graph() const { return graph_; }
  const NlcDecomposition& decomposition() const { return decomposition_; }
  int t() const { return t_; }
  std::size_t code_length() const { return 4 * static_cast<std::size_t>(t_) + 3; }

 private:
  Graph graph_;
  NlcDecomposition decomposition_;
  int t_;
};

/// The two cuts around a subtree C of the decomposition tree. An absent cut
/// is (V(G), empty) with all classes empty.
struct CwCuts {
  Subtree subtree;
  std::optional<Node> y1;
  std::optional<Node> y2;
  VertexSet c1, d1, c2, d2;
  /// U_i partitions D1, V_j partitions C2; t classes each.
  std::vector<VertexSet> u;
  std::vector<VertexSet> v;
};

CwCuts cw_cuts(const CwContext& ctx, const Subtree& c);

struct BoundWithWitness {
  ExtInt value;
  CodeEntry witness;
  friend bool operator==(const BoundWithWitness&, const BoundWithWitness&) = default;
};

struct CwBounds {
  std::vector<BoundWithWitness> u_plus, u_minus, v_plus, v_minus;
};

/// The four bound families of the instance (G, sample, ball) for the given cuts.
/// The V-side lower bounds range over negatives in D2 only.
CwBounds r_bounds_cw(const Graph& g, const Sample& sample, const Ball& ball, const CwCuts& cuts);

/// The two inclusion chains of the main case, decoded from a code.
struct CwConstraints {
  CwCuts cuts;
  std::vector<ExtInt> u_plus, u_minus, v_plus, v_minus;
  VertexSet lower1, upper1, lower2, upper2;

  bool accepts(const VertexSet& ball) const;
  /// Centers are restricted to C1 and C2.
  bool accepts(const Graph& g, const Ball& b) const;
};

CwConstraints cw_constraints(const CwContext& ctx, const ArrayCode& code);

enum class CwCase { Empty, NoNegatives, CenterInSample, Main };

struct CwCompression {
  ArrayCode code;
  Ball ball;
  CwCase which = CwCase::Empty;
  std::optional<CwConstraints> constraints;
};

ArrayCode compress_cw(const CwContext& ctx, const Sample& sample);
ArrayCode compress_cw(const CwContext& ctx, const Sample& sample, const Ball& ball);
CwCompression compress_cw_detailed(const CwContext& ctx, const Sample& sample, const std::optional<Ball>& ball = {});

/// Branches in order: all blank -> empty ball; equal non-blank last pair ->
/// that vertex's component; equal non-blank fourth and fifth entries ->
/// B(w1, dist(w1, x) - 1); otherwise the first accepted B(c', s) with c' in
/// C1 and C2 ascending and s ascending; else the empty ball.
Hypothesis reconstruct_cw(const CwContext& ctx, const ArrayCode& code);

}  // namespace ballcomp
