#include "ballcomp/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "ballcomp/errors.hpp"

namespace ballcomp {

namespace {

int bags_width(const std::vector<VertexSet>& bags) {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<std::vector<Node>> tree_adjacency(const RawTreeDecomposition& d) {
  std::vector<std::vector<Node>> adj(d.bags.size());
  for (auto [a, b] : d.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace

int RawTreeDecomposition::width() const { return bags_width(bags); }
int TreeDecomposition::width() const { return bags_width(bags); }

void validate_decomposition(const Graph& g, const RawTreeDecomposition& d) {
  const int m = static_cast<int>(d.bags.size());
  if (m == 0) throw InputError("tree decomposition: no bags");
  if (static_cast<int>(d.edges.size()) != m - 1) {
    throw InputError("tree decomposition: " + std::to_string(d.edges.size()) + " tree edges for " +
                     std::to_string(m) + " bags is not a tree");
  }
  for (auto [a, b] : d.edges) {
    if (a < 0 || a >= m || b < 0 || b >= m || a == b) {
      throw InputError("tree decomposition: bad tree edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  const auto adj = tree_adjacency(d);
  {
    std::vector<char> seen(m, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
      Node x = stack.back();
      stack.pop_back();
      ++reached;
      for (Node y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (reached != m) throw InputError("tree decomposition: tree is not connected");
  }
  for (int x = 0; x < m; ++x) {
    const auto& bag = d.bags[x];
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      throw InputError("tree decomposition: bag " + std::to_string(x) + " is not a sorted duplicate-free set");
    }
    check_vertices(g, bag);
  }
  // Edge coverage.
  std::vector<std::vector<Node>> trace(static_cast<std::size_t>(g.num_vertices()));
  for (int x = 0; x < m; ++x) {
    for (Vertex v : d.bags[x]) trace[v].push_back(x);
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (Node x : trace[u]) {
      if (contains(d.bags[x], v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw InputError("tree decomposition: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") lies in no bag");
    }
  }
  // Each vertex's bags induce a non-empty connected subtree.
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (trace[v].empty()) throw InputError("tree decomposition: vertex " + std::to_string(v) + " lies in no bag");
    std::vector<char> in_trace(m, 0), seen(m, 0);
    for (Node x : trace[v]) in_trace[x] = 1;
    std::vector<Node> stack{trace[v][0]};
    seen[trace[v][0]] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      Node x = stack.back();
      stack.pop_back();
      ++reached;
      for (Node y : adj[x]) {
        if (in_trace[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (reached != trace[v].size()) {
      throw InputError("tree decomposition: bags containing vertex " + std::to_string(v) + " are not connected");
    }
  }
}

void validate_decomposition(const Graph& g, const TreeDecomposition& d) {
  if (static_cast<int>(d.bags.size()) != d.tree.size()) {
    throw InputError("tree decomposition: bag count differs from tree size");
  }
  validate_decomposition(g, to_raw(d));
}

RawTreeDecomposition to_raw(const TreeDecomposition& d) {
  RawTreeDecomposition raw{d.bags, {}};
  for (Node x = 0; x < d.tree.size(); ++x) {
    if (auto p = d.tree.parent(x)) raw.edges.emplace_back(*p, x);
  }
  std::sort(raw.edges.begin(), raw.edges.end());
  return raw;
}

TreeDecomposition make_binary(const Graph& g, const RawTreeDecomposition& d, Node root) {
  validate_decomposition(g, d);
  const int m = static_cast<int>(d.bags.size());
  if (root < 0 || root >= m) throw InputError("tree decomposition: root out of range");
  const auto adj = tree_adjacency(d);

  std::vector<VertexSet> bags = d.bags;
  std::vector<std::optional<Node>> left(m), right(m);
  std::vector<int> parent(m, -1);
  std::vector<Node> order{root};
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Node x = order[i];
    std::vector<Node> kids;
    for (Node y : adj[x]) {
      if (parent[y] == -1) {
        parent[y] = x;
        kids.push_back(y);
        order.push_back(y);
      }
    }
    Node slot = x;
    std::size_t k = 0;
    while (kids.size() - k > 2) {
      const Node copy = static_cast<Node>(bags.size());
      bags.push_back(d.bags[x]);
      left.emplace_back();
      right.emplace_back();
      left[slot] = kids[k++];
      right[slot] = copy;
      slot = copy;
    }
    if (k < kids.size()) left[slot] = kids[k++];
    if (k < kids.size()) right[slot] = kids[k++];
  }
  TreeDecomposition out{RootedBinaryTree::from_children(root, std::move(left), std::move(right)), std::move(bags)};
  validate_decomposition(g, out);
  return out;
}

RawTreeDecomposition min_fill_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  RawTreeDecomposition d;
  if (n == 0) {
    d.bags.push_back({});
    return d;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> eliminated(n, 0);
  std::vector<int> position(n, -1);
  std::vector<Vertex> order;
  std::vector<VertexSet> bag_of(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = std::numeric_limits<long>::max();
    std::size_t best_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      long fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
        for (auto b = std::next(a); b != adj[v].end(); ++b) {
          if (!adj[*a].count(*b)) ++fill;
        }
      }
      if (fill < best_fill || (fill == best_fill && adj[v].size() < best_degree)) {
        best = v;
        best_fill = fill;
        best_degree = adj[v].size();
      }
    }
    const std::vector<Vertex> nbrs(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[nbrs[i]].insert(nbrs[j]);
        adj[nbrs[j]].insert(nbrs[i]);
      }
    }
    for (Vertex w : nbrs) adj[w].erase(best);
    std::vector<Vertex> bag = nbrs;
    bag.push_back(best);
    bag_of[best] = make_vertex_set(std::move(bag));
    eliminated[best] = 1;
    position[best] = step;
    order.push_back(best);
  }
  // Node i holds the bag of the i-th eliminated vertex; its parent is the bag of
  // the earliest-eliminated later neighbour. Roots of separate components are chained.
  d.bags.resize(n);
  std::vector<Node> roots;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    d.bags[i] = bag_of[v];
    int parent = n;
    for (Vertex w : bag_of[v]) {
      if (w != v) parent = std::min(parent, position[w]);
    }
    if (parent == n) {
      roots.push_back(i);
    } else {
      d.edges.emplace_back(i, parent);
    }
  }
  for (std::size_t i = 1; i < roots.size(); ++i) d.edges.emplace_back(roots[i - 1], roots[i]);
  return d;
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& d, const InducedSubgraph& sub) {
  TreeDecomposition out{d.tree, {}};
  out.bags.reserve(d.bags.size());
  for (const auto& bag : d.bags) out.bags.push_back(sub.map_from_original(bag));
  return out;
}

std::vector<Node> home_nodes(const TreeDecomposition& d, int num_vertices) {
  std::vector<Node> home(static_cast<std::size_t>(num_vertices), -1);
  for (Node x = 0; x < d.tree.size(); ++x) {
    for (Vertex v : d.bags[x]) {
      if (v < 0 || v >= num_vertices) continue;
      Node& h = home[v];
      if (h == -1 || d.tree.depth(x) < d.tree.depth(h) || (d.tree.depth(x) == d.tree.depth(h) && x < h)) h = x;
    }
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (home[v] == -1) throw InputError("vertex " + std::to_string(v) + " lies in no bag");
  }
  return home;
}

}  // namespace ballcomp
