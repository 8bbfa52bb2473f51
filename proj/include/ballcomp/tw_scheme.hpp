#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"
#include "ballcomp/tree.hpp"
#include "ballcomp/tree_decomposition.hpp"

namespace ballcomp {

/// Shared state of the treewidth scheme: graph, binary decomposition, the
/// claimed width bound t and the home node of every vertex.
class TwContext {
 public:
  /// Validates the decomposition and requires width <= t. `radius_cap` bounds
  /// the radius of the ball the compressor fixes.
  TwContext(Graph g, TreeDecomposition d, int t, ExtInt radius_cap = kInfinity);

  const Graph& graph() const { return graph_; }
  const TreeDecomposition& decomposition() const { return decomposition_; }
  int t() const { return t_; }
  ExtInt radius_cap() const { return radius_cap_; }
  std::size_t code_length() const { return 4 * static_cast<std::size_t>(t_) + 7; }
  std::size_t separator_limit() const { return 2 * static_cast<std::size_t>(t_) + 2; }
  Node home(Vertex v) const { return home_.at(v); }

 private:
  Graph graph_;
  TreeDecomposition decomposition_;
  int t_;
  ExtInt radius_cap_;
  std::vector<Node> home_;
};

struct RBounds {
  ExtInt r_plus = -1;
  CodeEntry witness_plus;
  ExtInt r_minus = kInfinity;
  CodeEntry witness_minus;
  friend bool operator==(const RBounds&, const RBounds&) = default;
};

/// r+(v) = max dist(v, x) over x in X within r - dist(c, v) of v (-1 if none);
/// r-(v) = min dist(v, x) over x in X- (+inf if none). Witnesses attain the
/// extremum and are the least such vertex.
RBounds r_bounds(const Graph& g, const Sample& sample, const Ball& ball, Vertex v);

/// A separation (A1, A2) chosen from a subtree C of the decomposition tree.
struct TwSeparation {
  Subtree subtree;
  VertexSet a1;
  VertexSet a2;
  VertexSet separator;
};

TwSeparation tw_separation(const TwContext& ctx, const Subtree& c);

/// The two inclusions a reconstructed ball B must satisfy:
/// lower <= A2 & B <= upper.
struct TwConstraints {
  TwSeparation separation;
  std::vector<ExtInt> r_plus;
  std::vector<ExtInt> r_minus;
  VertexSet lower;
  VertexSet upper;
  /// False when the separator exceeds 2t+2; nothing is accepted then.
  bool usable = true;

  bool accepts(const VertexSet& ball) const;
  /// Centers are restricted to A1.
  bool accepts(const Graph& g, const Ball& b) const;
};

/// Constraints decoded from a code, exactly as the reconstructor sees them.
TwConstraints tw_constraints(const TwContext& ctx, const ArrayCode& code);

struct TwCompression {
  ArrayCode code;
  Ball ball;
  TwConstraints constraints;
};

/// Compresses with the least-center, least-radius realising ball within the
/// context's radius cap. Throws InputError on unrealisable samples.
ArrayCode compress_tw(const TwContext& ctx, const Sample& sample);
/// Same, with an explicitly chosen realising ball.
ArrayCode compress_tw(const TwContext& ctx, const Sample& sample, const Ball& ball);
TwCompression compress_tw_detailed(const TwContext& ctx, const Sample& sample, const std::optional<Ball>& ball = {});

/// First ball B(c', s), c' in A1 ascending then s in -1..n ascending, that
/// satisfies the constraints; the empty ball if none does.
Hypothesis reconstruct_tw(const TwContext& ctx, const ArrayCode& code);
/// As reconstruct_tw with s in the outer loop: the accepted ball of least radius.
Hypothesis reconstruct_tw_min_radius(const TwContext& ctx, const ArrayCode& code);

}  // namespace ballcomp
