#include "ballcomp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ballcomp/errors.hpp"

namespace ballcomp {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("SplitMix64::below(0)");
  return next() % bound;
}

namespace {

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TwInstance gen_partial_ktree(int n, int t, int keep_permille, std::uint64_t seed) {
  if (t < 0 || n < t + 1) throw InputError("partial k-tree needs n >= t + 1 >= 1");
  if (keep_permille < 0 || keep_permille > 1000) throw InputError("edge keep rate must be in 0..1000");
  SplitMix64 rng(seed);
  RawTreeDecomposition raw;
  std::vector<std::pair<Vertex, Vertex>> edges;
  raw.bags.push_back(identity(t + 1));
  for (Vertex a = 0; a <= t; ++a) {
    for (Vertex b = a + 1; b <= t; ++b) edges.emplace_back(a, b);
  }
  for (Vertex v = t + 1; v < n; ++v) {
    const Node host = rng.below_int(static_cast<int>(raw.bags.size()));
    VertexSet clique = raw.bags[host];
    clique.erase(clique.begin() + rng.below_int(static_cast<int>(clique.size())));
    for (Vertex u : clique) edges.emplace_back(u, v);
    clique.push_back(v);
    raw.bags.push_back(make_vertex_set(std::move(clique)));
    raw.edges.emplace_back(host, static_cast<Node>(raw.bags.size() - 1));
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto e : edges) {
    if (rng.chance_permille(keep_permille)) kept.push_back(e);
  }
  std::vector<Vertex> perm = identity(n);
  rng.shuffle(perm);
  for (auto& [a, b] : kept) {
    a = perm[a];
    b = perm[b];
  }
  for (auto& bag : raw.bags) {
    for (Vertex& v : bag) v = perm[v];
    bag = make_vertex_set(std::move(bag));
  }
  Graph g = Graph::from_edges(n, kept);
  TreeDecomposition d = make_binary(g, raw, 0);
  return {std::move(g), std::move(d)};
}

Graph graph_from_nlc(int n, const NlcDecomposition& d) {
  const int q = d.num_labels;
  std::vector<std::vector<std::pair<Vertex, Label>>> from_left(d.tree.size()), from_right(d.tree.size());
  for (Vertex v = 0; v < n; ++v) {
    Node x = d.leaf_of[v];
    Label l = d.alpha[v];
    while (auto p = d.tree.parent(x)) {
      l = d.beta[x][l];
      (d.tree.left(*p) == x ? from_left : from_right)[*p].emplace_back(v, l);
      x = *p;
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<char> rel(static_cast<std::size_t>(q * q));
  for (Node u = 0; u < d.tree.size(); ++u) {
    std::fill(rel.begin(), rel.end(), 0);
    for (auto [a, b] : d.relation[u]) rel[a * q + b] = 1;
    for (auto [x, lx] : from_left[u]) {
      for (auto [y, ly] : from_right[u]) {
        if (rel[lx * q + ly]) edges.emplace_back(x, y);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

NlcInstance gen_nlc_graph(int n, int t, std::uint64_t seed) {
  if (n < 1 || t < 1) throw InputError("NLC generator needs n >= 1 and t >= 1");
  SplitMix64 rng(seed);
  const int m = 2 * n - 1;
  std::vector<std::optional<Node>> left(m), right(m);
  std::vector<Node> pool = identity(n);
  Node next = n;
  while (pool.size() > 1) {
    const std::size_t i = rng.below(pool.size());
    const Node a = pool[i];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    const std::size_t j = rng.below(pool.size());
    const Node b = pool[j];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    left[next] = a;
    right[next] = b;
    pool.push_back(next++);
  }
  NlcDecomposition d;
  d.tree = RootedBinaryTree::from_children(pool.front(), std::move(left), std::move(right));
  d.num_labels = t;
  d.leaf_of = identity(n);
  for (int v = 0; v < n; ++v) d.alpha.push_back(rng.below_int(t));
  d.beta.assign(static_cast<std::size_t>(m), {});
  d.relation.assign(static_cast<std::size_t>(m), {});
  // Relation density varies per instance so both sparse and dense graphs occur.
  const int density = 150 + rng.below_int(500);
  for (Node x = 0; x < m; ++x) {
    if (x != d.tree.root()) {
      for (int l = 0; l < t; ++l) d.beta[x].push_back(rng.below_int(t));
    }
    if (x >= n) {
      for (Label a = 0; a < t; ++a) {
        for (Label b = 0; b < t; ++b) {
          if (rng.chance_permille(density)) d.relation[x].emplace_back(a, b);
        }
      }
    }
  }
  Graph g = graph_from_nlc(n, d);
  return {std::move(g), std::move(d)};
}

Graph gen_shattering_gadget(int t) {
  if (t < 1 || t > 4) throw InputError("gadget size t must be in 1..4");
  const int subsets = 1 << t;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int mask = 0; mask < subsets; ++mask) {
    for (int e = 0; e < t; ++e) {
      if (mask >> e & 1) edges.emplace_back(e, t + mask);
    }
  }
  return Graph::from_edges(t + subsets, edges);
}

GeneratedSample gen_sample_for_ball(const Graph& g, const Ball& b, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const VertexSet inside = ball(g, b);
  const int keep = 200 + rng.below_int(600);
  GeneratedSample out{{}, b};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!rng.chance_permille(keep)) continue;
    (contains(inside, v) ? out.sample.positive : out.sample.negative).push_back(v);
  }
  return out;
}

GeneratedSample gen_sample(const BallFamily& family, std::uint64_t seed) {
  const Graph& g = family.graph();
  SplitMix64 rng(seed);
  Ball b;
  if (g.num_vertices() > 0) {
    b.center = rng.below_int(g.num_vertices());
    b.radius = rng.below_int(family.max_radius() + 2) - 1;
  }
  return gen_sample_for_ball(g, b, rng.next());
}

Graph gen_grid(int w, int h) {
  if (w < 1 || h < 1) throw InputError("grid dimensions must be positive");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) edges.emplace_back(y * w + x, y * w + x + 1);
      if (y + 1 < h) edges.emplace_back(y * w + x, (y + 1) * w + x);
    }
  }
  return Graph::from_edges(w * h, edges);
}

VcInstance gen_vc_graph(int n, int t, std::uint64_t seed) {
  if (t < 0 || n < t) throw InputError("vertex cover generator needs 0 <= t <= n");
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < t; ++a) {
    for (Vertex b = a + 1; b < t; ++b) {
      if (rng.chance_permille(500)) edges.emplace_back(a, b);
    }
  }
  if (t > 0) {
    const int pool_size = std::max(1, (n - t) / 3);
    std::vector<std::uint64_t> pool;
    for (int i = 0; i < pool_size; ++i) pool.push_back(rng.below(std::uint64_t{1} << t));
    for (Vertex v = t; v < n; ++v) {
      const std::uint64_t mask = pool[rng.below(pool.size())];
      for (int j = 0; j < t; ++j) {
        if (mask >> j & 1) edges.emplace_back(j, v);
      }
    }
  }
  std::vector<Vertex> perm = identity(n);
  rng.shuffle(perm);
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
  }
  VertexSet cover;
  for (Vertex j = 0; j < t; ++j) cover.push_back(perm[j]);
  return {Graph::from_edges(n, edges), make_vertex_set(std::move(cover))};
}

Graph gen_degenerate_graph(int n, int t, std::uint64_t seed) {
  if (n < 0 || t < 0) throw InputError("degenerate graph generator needs n, t >= 0");
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> earlier = identity(v);
    rng.shuffle(earlier);
    const int k = rng.below_int(std::min(v, t) + 1);
    for (int i = 0; i < k; ++i) edges.emplace_back(earlier[i], v);
  }
  std::vector<Vertex> perm = identity(n);
  rng.shuffle(perm);
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
  }
  return Graph::from_edges(n, edges);
}

}  // namespace ballcomp
