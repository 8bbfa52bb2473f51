#include "ballcomp/graph.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <string>

namespace ballcomp {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
}

Graph Graph::from_edges(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(num_vertices);
  for (auto [u, v] : edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(num_vertices - 1));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range for a graph on " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
}

void check_vertices(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) check_vertex(g, v);
}

std::vector<ExtInt> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<ExtInt> dist(static_cast<std::size_t>(g.num_vertices()), kInfinity);
  std::queue<Vertex> frontier;
  for (Vertex s : sources) {
    check_vertex(g, s);
    if (dist[s] != 0) {
      dist[s] = 0;
      frontier.push(s);
    }
  }
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    const ExtInt next = dist[u] + 1;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w].is_pos_inf()) {
        dist[w] = next;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<ExtInt> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

VertexSet ball_from_distances(std::span<const ExtInt> distances, ExtInt radius) {
  VertexSet out;
  if (radius < 0) return out;
  for (std::size_t v = 0; v < distances.size(); ++v) {
    if (distances[v].is_finite() && distances[v] <= radius) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet ball(const Graph& g, Vertex center, ExtInt radius) {
  check_vertex(g, center);
  if (radius < 0) return {};
  return ball_from_distances(bfs_distances(g, center), radius);
}

VertexSet ball(const Graph& g, const Ball& b) { return ball(g, b.center, b.radius); }

VertexSet ball_of_set(const Graph& g, std::span<const Vertex> centers, ExtInt radius) {
  check_vertices(g, centers);
  if (centers.empty() || radius < 0) return {};
  return ball_from_distances(bfs_distances(g, centers), radius);
}

ExtInt dist_sets(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
  check_vertices(g, to);
  if (from.empty() || to.empty()) return kInfinity;
  const auto dist = bfs_distances(g, from);
  ExtInt best = kInfinity;
  for (Vertex d : to) best = std::min(best, dist[d]);
  return best;
}

VertexSet InducedSubgraph::map_to_original(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_original.at(v));
  return make_vertex_set(std::move(out));
}

VertexSet InducedSubgraph::map_from_original(std::span<const Vertex> global) const {
  std::vector<Vertex> out;
  for (Vertex v : global) {
    if (v >= 0 && static_cast<std::size_t>(v) < from_original.size() && from_original[v]) {
      out.push_back(*from_original[v]);
    }
  }
  return make_vertex_set(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  check_vertices(g, subset);
  InducedSubgraph sub;
  sub.to_original = subset;
  sub.from_original.assign(static_cast<std::size_t>(g.num_vertices()), std::nullopt);
  for (std::size_t i = 0; i < subset.size(); ++i) sub.from_original[subset[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Vertex w : g.neighbors(subset[i])) {
      if (auto j = sub.from_original[w]; j && static_cast<Vertex>(i) < *j) {
        edges.emplace_back(static_cast<Vertex>(i), *j);
      }
    }
  }
  sub.graph = Graph::from_edges(static_cast<int>(subset.size()), edges);
  return sub;
}

VertexSet component_of(const Graph& g, Vertex v) { return ball(g, v, kInfinity); }

}  // namespace ballcomp
