#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"
#include "ballcomp/nlc_scheme.hpp"
#include "ballcomp/tree_decomposition.hpp"

namespace ballcomp {

/// SplitMix64. Each step adds 0x9E3779B97F4A7C15 to the state, then mixes:
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   out = z ^ (z >> 31)
/// below(b) is next() % b.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
  /// True with probability permille / 1000.
  bool chance_permille(int permille) { return below_int(1000) < permille; }
  /// Fisher-Yates from the back.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::uint64_t state_;
};

struct TwInstance {
  Graph graph;
  TreeDecomposition decomposition;
};

/// Random t-tree on n vertices with each edge kept with probability
/// keep_permille / 1000, vertices shuffled; certificate of width <= t.
TwInstance gen_partial_ktree(int n, int t, int keep_permille, std::uint64_t seed);

struct NlcInstance {
  Graph graph;
  NlcDecomposition decomposition;
};

/// Random binary merge tree over n leaves with random initial labels,
/// relabellings and relations over t labels; the graph is what they define.
NlcInstance gen_nlc_graph(int n, int t, std::uint64_t seed);

/// The graph defined by an NLC decomposition on n vertices.
Graph graph_from_nlc(int n, const NlcDecomposition& d);

/// Bipartite graph on [t] and its subsets: ids 0..t-1 are the elements, id
/// t + mask is the subset with that bitmask, adjacent to its members. t <= 4.
Graph gen_shattering_gadget(int t);

struct GeneratedSample {
  Sample sample;
  Ball witness;
};

/// Random ball of the family, then each inside vertex is kept as positive and
/// each outside vertex as negative with one random probability.
GeneratedSample gen_sample(const BallFamily& family, std::uint64_t seed);
/// Same with a fixed ball.
GeneratedSample gen_sample_for_ball(const Graph& g, const Ball& b, std::uint64_t seed);

/// w x h grid; vertex (x, y) has id y * w + x.
Graph gen_grid(int w, int h);

struct VcInstance {
  Graph graph;
  VertexSet cover;
};

/// t cover vertices with random edges among them, plus n - t independent
/// vertices whose neighbourhoods come from a small pool of cover subsets (so
/// false twins are common). Vertices are shuffled.
VcInstance gen_vc_graph(int n, int t, std::uint64_t seed);

/// Each vertex joins up to t random earlier vertices; shuffled. Degeneracy <= t.
Graph gen_degenerate_graph(int n, int t, std::uint64_t seed);

}  // namespace ballcomp
