#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ballcomp/ext_int.hpp"

namespace ballcomp {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place, returning the canonical set.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& sub, const VertexSet& super);

/// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  /// Builds a graph from an edge list. Duplicate edges are merged; loops and
  /// out-of-range endpoints throw InputError.
  static Graph from_edges(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// A ball B(center, radius). Radius -1 (or any negative value) is the empty ball.
struct Ball {
  Vertex center = 0;
  ExtInt radius = -1;

  friend bool operator==(const Ball&, const Ball&) = default;
};

/// Multi-source BFS: dist(sources, v) for every v, +inf when unreachable or
/// when `sources` is empty.
std::vector<ExtInt> bfs_distances(const Graph& g, std::span<const Vertex> sources);
std::vector<ExtInt> bfs_distances(const Graph& g, Vertex source);

/// {v : distances[v] <= radius}.
VertexSet ball_from_distances(std::span<const ExtInt> distances, ExtInt radius);

VertexSet ball(const Graph& g, Vertex center, ExtInt radius);
VertexSet ball(const Graph& g, const Ball& b);
VertexSet ball_of_set(const Graph& g, std::span<const Vertex> centers, ExtInt radius);

/// Minimum distance between the two sets; +inf if either is empty.
ExtInt dist_sets(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to);

struct InducedSubgraph {
  Graph graph;
  /// New id -> original id.
  std::vector<Vertex> to_original;
  /// Original id -> new id, or nullopt when outside the subset.
  std::vector<std::optional<Vertex>> from_original;

  VertexSet map_to_original(std::span<const Vertex> local) const;
  VertexSet map_from_original(std::span<const Vertex> global) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

/// Vertex set of the connected component containing v.
VertexSet component_of(const Graph& g, Vertex v);

void check_vertex(const Graph& g, Vertex v);
void check_vertices(const Graph& g, std::span<const Vertex> vs);

}  // namespace ballcomp
