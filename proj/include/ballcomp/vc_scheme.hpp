#pragma once

#include <cstddef>
#include <optional>

#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"

namespace ballcomp {

/// A minimum vertex cover if one of size <= k exists, else nullopt. Exact
/// bounded search tree, branching on the least uncovered edge; deterministic.
std::optional<VertexSet> find_vertex_cover(const Graph& g, int k);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

class VcContext {
 public:
  /// `cover` must be a vertex cover; its sorted order fixes r_1..r_t.
  VcContext(Graph g, VertexSet cover);

  const Graph& graph() const { return graph_; }
  const VertexSet& cover() const { return cover_; }
  int t() const { return static_cast<int>(cover_.size()); }
  std::size_t bit_length() const { return cover_.size() + 2; }

 private:
  Graph graph_;
  VertexSet cover_;
};

struct VcCompression {
  LabeledCode code;
  Ball ball;
  /// 1..4.
  int which = 1;
  /// True when the negative witness was picked as the cyclic predecessor of
  /// the center among its false twins.
  bool twin_rule = false;
};

/// Fixes the realising ball of greatest radius in -1..n (ties: least center).
LabeledCode compress_vc(const VcContext& ctx, const Sample& sample);
VcCompression compress_vc_detailed(const VcContext& ctx, const Sample& sample);

/// Throws InputError on codes of the wrong shape; inconsistent codes give the empty ball.
Hypothesis reconstruct_vc(const VcContext& ctx, const LabeledCode& code);

}  // namespace ballcomp
