#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"
#include "ballcomp/tree_decomposition.hpp"
#include "ballcomp/tw_scheme.hpp"

namespace ballcomp {

/// Balls of radius at most r compressed through the treewidth scheme of each
/// local graph G[B(v, 2r)].
class LocalTwContext {
 public:
  /// With `global`, each local decomposition is its restriction; otherwise
  /// each local graph gets a min-fill decomposition.
  LocalTwContext(Graph g, int r, const std::optional<TreeDecomposition>& global = std::nullopt);

  const Graph& graph() const { return graph_; }
  int radius() const { return r_; }
  /// Largest width among the local decompositions.
  int max_width() const { return max_width_; }
  /// 4 * max_width + 7.
  std::size_t inner_length() const { return 4 * static_cast<std::size_t>(max_width_) + 7; }
  std::size_t code_length() const { return inner_length() + 1; }

  const InducedSubgraph& local_graph(Vertex v) const { return locals_.at(v); }
  const TwContext& local_context(Vertex v) const { return contexts_.at(v); }

 private:
  Graph graph_;
  int r_;
  int max_width_ = 0;
  std::vector<InducedSubgraph> locals_;
  std::vector<TwContext> contexts_;
};

/// Throws InputError when no ball of radius <= r realises the sample.
ArrayCode compress_local_tw(const LocalTwContext& ctx, const Sample& sample);
Hypothesis reconstruct_local_tw(const LocalTwContext& ctx, const ArrayCode& code);

struct DegeneracyOrder {
  /// Vertices from first to last.
  std::vector<Vertex> order;
  /// Largest number of earlier neighbours.
  int t = 0;
};

/// Repeatedly removes a vertex of least remaining degree (ties: least id) and
/// reverses the removal sequence.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Largest number of earlier neighbours over the given ordering.
int back_degree(const Graph& g, const std::vector<Vertex>& order);

/// Closed neighbourhoods B(c, 1) under a degeneracy ordering.
class DegeneracyContext {
 public:
  explicit DegeneracyContext(Graph g);
  /// Uses `order` (a permutation of the vertices) as the witness ordering.
  DegeneracyContext(Graph g, std::vector<Vertex> order);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& order() const { return order_; }
  int t() const { return t_; }
  /// Position of v in the ordering.
  int rank(Vertex v) const { return rank_.at(v); }
  int index_bits() const;
  std::size_t bit_length() const { return 1 + static_cast<std::size_t>(index_bits()); }
  /// {u in N(x) + x : u precedes or equals x}, sorted by the ordering.
  std::vector<Vertex> earlier_closed_neighborhood(Vertex x) const;

  /// The reconstructor may return a set that is not a closed neighbourhood.
  static constexpr bool kProper = false;

 private:
  Graph graph_;
  std::vector<Vertex> order_;
  std::vector<int> rank_;
  int t_ = 0;
};

/// Centers are taken in the context's ordering unless given explicitly.
LabeledCode compress_degeneracy(const DegeneracyContext& ctx, const Sample& sample);
LabeledCode compress_degeneracy(const DegeneracyContext& ctx, const Sample& sample, Vertex center);
Hypothesis reconstruct_degeneracy(const DegeneracyContext& ctx, const LabeledCode& code);

}  // namespace ballcomp
