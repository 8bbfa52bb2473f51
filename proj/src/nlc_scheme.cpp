#include "ballcomp/nlc_scheme.hpp"

#include <algorithm>
#include <string>

#include "ballcomp/errors.hpp"

namespace ballcomp {

namespace {

std::vector<std::optional<Vertex>> inverse_leaves(const NlcDecomposition& d) {
  std::vector<std::optional<Vertex>> at(static_cast<std::size_t>(d.tree.size()));
  for (Vertex v = 0; v < static_cast<Vertex>(d.leaf_of.size()); ++v) at[d.leaf_of[v]] = v;
  return at;
}

// BFS from `sources` inside the vertices where allowed[v] is set; +inf elsewhere.
std::vector<ExtInt> restricted_bfs(const Graph& g, const std::vector<char>& allowed, const VertexSet& sources) {
  std::vector<ExtInt> dist(static_cast<std::size_t>(g.num_vertices()), kInfinity);
  std::vector<Vertex> frontier;
  for (Vertex s : sources) {
    if (allowed[s] && !dist[s].is_finite()) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Vertex u = frontier[i];
    for (Vertex w : g.neighbors(u)) {
      if (allowed[w] && !dist[w].is_finite()) {
        dist[w] = dist[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<char> mask_of(int n, std::initializer_list<const VertexSet*> sets) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (const VertexSet* s : sets) {
    for (Vertex v : *s) m[v] = 1;
  }
  return m;
}

ExtInt min_over(const std::vector<ExtInt>& dist, const VertexSet& set) {
  ExtInt best = kInfinity;
  for (Vertex v : set) best = std::min(best, dist[v]);
  return best;
}

}  // namespace

Label NlcDecomposition::label_at(Vertex v, Node y) const {
  Node x = leaf_of.at(v);
  if (!tree.is_ancestor(y, x)) throw ContractViolation("label_at: node is not an ancestor of the leaf");
  Label l = alpha.at(v);
  while (x != y) {
    l = beta[x][l];
    x = *tree.parent(x);
  }
  return l;
}

std::optional<Vertex> NlcDecomposition::vertex_at(Node x) const {
  for (Vertex v = 0; v < static_cast<Vertex>(leaf_of.size()); ++v) {
    if (leaf_of[v] == x) return v;
  }
  return std::nullopt;
}

VertexSet NlcDecomposition::leaves_below(Node y) const {
  const auto at = inverse_leaves(*this);
  VertexSet out;
  for (Node x : tree.subtree(y)) {
    if (at[x]) out.push_back(*at[x]);
  }
  return make_vertex_set(std::move(out));
}

std::optional<std::pair<Vertex, Vertex>> find_nlc_violation(const Graph& g, const NlcDecomposition& d) {
  const int n = g.num_vertices();
  const int m = d.tree.size();
  const int q = d.num_labels;
  if (n == 0) throw InputError("NLC decomposition: graph has no vertices");
  if (q < 1) throw InputError("NLC decomposition: needs at least one label");
  if (static_cast<int>(d.leaf_of.size()) != n || static_cast<int>(d.alpha.size()) != n) {
    throw InputError("NLC decomposition: leaf or initial-label list does not match the vertex count");
  }
  if (static_cast<int>(d.beta.size()) != m || static_cast<int>(d.relation.size()) != m) {
    throw InputError("NLC decomposition: relabelling or relation list does not match the node count");
  }
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (Vertex v = 0; v < n; ++v) {
    const Node x = d.leaf_of[v];
    if (!d.tree.has_node(x) || !d.tree.is_leaf(x)) {
      throw InputError("NLC decomposition: vertex " + std::to_string(v) + " is not mapped to a leaf");
    }
    if (owner[x] != -1) throw InputError("NLC decomposition: two vertices share leaf " + std::to_string(x));
    owner[x] = v;
    if (d.alpha[v] < 0 || d.alpha[v] >= q) {
      throw InputError("NLC decomposition: initial label of vertex " + std::to_string(v) + " out of range");
    }
  }
  for (Node x = 0; x < m; ++x) {
    const auto kids = d.tree.children(x);
    if (kids.empty() && owner[x] == -1) throw InputError("NLC decomposition: leaf " + std::to_string(x) + " has no vertex");
    if (kids.size() == 1) throw InputError("NLC decomposition: node " + std::to_string(x) + " has one child");
    if (x != d.tree.root()) {
      if (static_cast<int>(d.beta[x].size()) != q) {
        throw InputError("NLC decomposition: relabelling at node " + std::to_string(x) + " has wrong size");
      }
      for (Label l : d.beta[x]) {
        if (l < 0 || l >= q) throw InputError("NLC decomposition: relabelling at node " + std::to_string(x) + " out of range");
      }
    }
    if (kids.empty() && !d.relation[x].empty()) {
      throw InputError("NLC decomposition: leaf " + std::to_string(x) + " carries a relation");
    }
    for (auto [a, b] : d.relation[x]) {
      if (a < 0 || a >= q || b < 0 || b >= q) {
        throw InputError("NLC decomposition: relation at node " + std::to_string(x) + " out of range");
      }
    }
  }

  // For every ancestor p of each leaf: (vertex, label at p), split by the child side.
  struct Entry {
    Vertex v;
    Label l;
  };
  std::vector<std::vector<Entry>> from_left(m), from_right(m);
  for (Vertex v = 0; v < n; ++v) {
    Node x = d.leaf_of[v];
    Label l = d.alpha[v];
    while (auto p = d.tree.parent(x)) {
      l = d.beta[x][l];
      (d.tree.left(*p) == x ? from_left : from_right)[*p].push_back({v, l});
      x = *p;
    }
  }
  std::optional<std::pair<Vertex, Vertex>> worst;
  std::vector<char> rel(static_cast<std::size_t>(q * q));
  for (Node u = 0; u < m; ++u) {
    if (from_left[u].empty()) continue;
    std::fill(rel.begin(), rel.end(), 0);
    for (auto [a, b] : d.relation[u]) rel[a * q + b] = 1;
    for (const Entry& a : from_left[u]) {
      for (const Entry& b : from_right[u]) {
        if (static_cast<bool>(rel[a.l * q + b.l]) != g.adjacent(a.v, b.v)) {
          const std::pair<Vertex, Vertex> p{std::min(a.v, b.v), std::max(a.v, b.v)};
          if (!worst || p < *worst) worst = p;
        }
      }
    }
  }
  return worst;
}

void validate_nlc(const Graph& g, const NlcDecomposition& d) {
  if (auto bad = find_nlc_violation(g, d)) {
    throw InputError("NLC decomposition: adjacency of vertices " + std::to_string(bad->first) + " and " +
                     std::to_string(bad->second) + " disagrees with the relation at their common ancestor");
  }
}

TwinCut twin_partition_at(const NlcDecomposition& d, int num_vertices, Node y, CutSide side) {
  if (!d.tree.has_node(y)) throw InputError("twin partition: node out of range");
  if (y == d.tree.root()) throw InputError("twin partition: the root has no parent edge");
  TwinCut cut;
  const VertexSet below = d.leaves_below(y);
  VertexSet rest;
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (!contains(below, v)) rest.push_back(v);
  }
  cut.classes.assign(static_cast<std::size_t>(d.num_labels), {});
  for (Vertex v : below) cut.classes[d.label_at(v, y)].push_back(v);
  if (side == CutSide::Below) {
    cut.first = below;
    cut.second = std::move(rest);
  } else {
    cut.first = std::move(rest);
    cut.second = below;
  }
  return cut;
}

bool is_twin_partition(const Graph& g, const std::vector<VertexSet>& classes, const VertexSet& other) {
  auto trace = [&](Vertex v) {
    VertexSet out;
    for (Vertex w : g.neighbors(v)) {
      if (contains(other, w)) out.push_back(w);
    }
    return out;
  };
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    const VertexSet first = trace(cls.front());
    for (Vertex v : cls) {
      if (trace(v) != first) return false;
    }
  }
  return true;
}

ExtInt dist_via_twin(const Graph& g, const VertexSet& d, const std::vector<VertexSet>& classes, Vertex c0, Vertex d0) {
  check_vertex(g, c0);
  check_vertex(g, d0);
  if (contains(d, c0) || !contains(d, d0)) throw ContractViolation("dist_via_twin: needs c0 outside D and d0 in D");
  const auto from_c0 = bfs_distances(g, c0);
  ExtInt best = kInfinity;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    const auto inside = restricted_bfs(g, mask_of(g.num_vertices(), {&cls, &d}), cls);
    const ExtInt a = min_over(from_c0, cls);
    const ExtInt b = inside[d0];
    if (a.is_finite() && b.is_finite()) best = std::min(best, a + b);
  }
  return best;
}

CwContext::CwContext(Graph g, NlcDecomposition d, int t)
    : graph_(std::move(g)), decomposition_(std::move(d)), t_(t) {
  if (t_ < 1) throw InputError("NLC-width bound must be at least 1");
  validate_nlc(graph_, decomposition_);
  if (decomposition_.num_labels > t_) {
    throw InputError("decomposition uses " + std::to_string(decomposition_.num_labels) + " labels, more than t = " +
                     std::to_string(t_));
  }
}

namespace {

// Cuts for C; nullopt when C has more than one boundary edge of either kind.
std::optional<CwCuts> try_cuts(const CwContext& ctx, const Subtree& c) {
  const auto& d = ctx.decomposition();
  const auto& tree = d.tree;
  const int n = ctx.graph().num_vertices();
  const int t = ctx.t();
  std::vector<char> in_c(static_cast<std::size_t>(tree.size()), 0);
  for (Node x : c.nodes) in_c[x] = 1;
  CwCuts cuts;
  cuts.subtree = c;
  for (Node x : c.nodes) {
    for (Node ch : tree.children(x)) {
      if (in_c[ch]) continue;
      if (cuts.y1) return std::nullopt;
      cuts.y1 = ch;
    }
    if (auto p = tree.parent(x); p && !in_c[*p]) {
      if (cuts.y2) return std::nullopt;
      cuts.y2 = x;
    }
  }
  VertexSet all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  cuts.u.assign(static_cast<std::size_t>(t), {});
  cuts.v.assign(static_cast<std::size_t>(t), {});
  if (cuts.y1) {
    TwinCut cut = twin_partition_at(d, n, *cuts.y1, CutSide::Above);
    cuts.c1 = std::move(cut.first);
    cuts.d1 = std::move(cut.second);
    for (std::size_t i = 0; i < cut.classes.size(); ++i) cuts.u[i] = std::move(cut.classes[i]);
  } else {
    cuts.c1 = all;
  }
  if (cuts.y2) {
    TwinCut cut = twin_partition_at(d, n, *cuts.y2, CutSide::Below);
    cuts.c2 = std::move(cut.first);
    cuts.d2 = std::move(cut.second);
    for (std::size_t j = 0; j < cut.classes.size(); ++j) cuts.v[j] = std::move(cut.classes[j]);
  } else {
    cuts.c2 = all;
  }
  return cuts;
}

void check_code(const CwContext& ctx, const ArrayCode& code) {
  if (code.size() != ctx.code_length()) {
    throw InputError("cliquewidth code has length " + std::to_string(code.size()) + ", expected " +
                     std::to_string(ctx.code_length()));
  }
  for (const auto& e : code.entries) {
    if (e) check_vertex(ctx.graph(), *e);
  }
}

CwConstraints constraints_from(const Graph& g, CwCuts cuts, const ArrayCode& code) {
  const int n = g.num_vertices();
  const std::size_t t = cuts.u.size();
  CwConstraints k;
  std::vector<Vertex> lower1, upper1, lower2, upper2;
  for (std::size_t i = 0; i < t; ++i) {
    const CodeEntry xp = code.entries[3 + 2 * i];
    const CodeEntry xm = code.entries[4 + 2 * i];
    const auto dist = bfs_distances(g, cuts.u[i]);
    const ExtInt rp = xp ? dist[*xp] : ExtInt(-1);
    const ExtInt rm = xm ? dist[*xm] : kInfinity;
    k.u_plus.push_back(rp);
    k.u_minus.push_back(rm);
    for (Vertex w : cuts.d1) {
      if (dist[w].is_finite() && dist[w] <= rp) lower1.push_back(w);
      if (dist[w].is_finite() && dist[w] <= rm - 1) upper1.push_back(w);
    }
  }
  for (std::size_t j = 0; j < t; ++j) {
    const CodeEntry xp = code.entries[3 + 2 * (t + j)];
    const CodeEntry xm = code.entries[4 + 2 * (t + j)];
    const auto dist = restricted_bfs(g, mask_of(n, {&cuts.d2, &cuts.v[j]}), cuts.v[j]);
    const ExtInt rp = xp ? dist[*xp] : ExtInt(-1);
    const ExtInt rm = xm ? dist[*xm] : kInfinity;
    k.v_plus.push_back(rp);
    k.v_minus.push_back(rm);
    for (Vertex w : cuts.d2) {
      if (dist[w].is_finite() && dist[w] <= rp) lower2.push_back(w);
      if (dist[w].is_finite() && dist[w] <= rm - 1) upper2.push_back(w);
    }
  }
  k.lower1 = make_vertex_set(std::move(lower1));
  k.upper1 = make_vertex_set(std::move(upper1));
  k.lower2 = make_vertex_set(std::move(lower2));
  k.upper2 = make_vertex_set(std::move(upper2));
  k.cuts = std::move(cuts);
  return k;
}

Hypothesis clamped_ball(const Graph& g, Vertex c, ExtInt r) {
  if (r > g.num_vertices()) r = g.num_vertices();
  return ball_hypothesis(g, c, r);
}

}  // namespace

CwCuts cw_cuts(const CwContext& ctx, const Subtree& c) {
  auto cuts = try_cuts(ctx, c);
  if (!cuts) throw ContractViolation("subtree has more than one boundary edge of a kind");
  return std::move(*cuts);
}

CwBounds r_bounds_cw(const Graph& g, const Sample& sample, const Ball& b, const CwCuts& cuts) {
  const int n = g.num_vertices();
  const std::size_t t = cuts.u.size();
  CwBounds out;
  auto scan_plus = [&](const std::vector<ExtInt>& dist, ExtInt reach) {
    BoundWithWitness best{-1, std::nullopt};
    for (Vertex x : sample.positive) {
      if (dist[x] <= reach && (!best.witness || dist[x] > best.value)) best = {dist[x], x};
    }
    return best;
  };
  auto scan_minus = [&](const std::vector<ExtInt>& dist, const VertexSet* within) {
    BoundWithWitness best{kInfinity, std::nullopt};
    for (Vertex x : sample.negative) {
      if (within && !contains(*within, x)) continue;
      if (dist[x] < best.value) best = {dist[x], x};
    }
    return best;
  };
  const auto from_c = bfs_distances(g, b.center);
  for (std::size_t i = 0; i < t; ++i) {
    const VertexSet& cls = cuts.u[i];
    const auto dist = bfs_distances(g, cls);
    const auto in_c1 = restricted_bfs(g, mask_of(n, {&cuts.c1, &cls}), VertexSet{b.center});
    const ExtInt gap = min_over(in_c1, cls);
    const ExtInt reach = gap.is_finite() ? b.radius - gap : ExtInt(-1);
    out.u_plus.push_back(scan_plus(dist, reach));
    out.u_minus.push_back(scan_minus(dist, nullptr));
  }
  for (std::size_t j = 0; j < t; ++j) {
    const VertexSet& cls = cuts.v[j];
    const auto dist = restricted_bfs(g, mask_of(n, {&cuts.d2, &cls}), cls);
    const ExtInt gap = min_over(from_c, cls);
    const ExtInt reach = gap.is_finite() ? b.radius - gap : ExtInt(-1);
    out.v_plus.push_back(scan_plus(dist, reach));
    // Only negatives in D2: a negative inside V_j sits at distance 0 from V_j
    // without being close to c, so it would wrongly empty the upper bound.
    out.v_minus.push_back(scan_minus(dist, &cuts.d2));
  }
  return out;
}

bool CwConstraints::accepts(const VertexSet& ball) const {
  const VertexSet in1 = set_intersection(cuts.d1, ball);
  const VertexSet in2 = set_intersection(cuts.d2, ball);
  return is_subset(lower1, in1) && is_subset(in1, upper1) && is_subset(lower2, in2) && is_subset(in2, upper2);
}

bool CwConstraints::accepts(const Graph& g, const Ball& b) const {
  return contains(cuts.c1, b.center) && contains(cuts.c2, b.center) && accepts(ball(g, b));
}

CwConstraints cw_constraints(const CwContext& ctx, const ArrayCode& code) {
  check_code(ctx, code);
  NodeTriple triple;
  for (int i = 0; i < 3; ++i) {
    if (code.entries[i]) triple[i] = ctx.decomposition().leaf_of[*code.entries[i]];
  }
  return constraints_from(ctx.graph(), cw_cuts(ctx, phi(ctx.decomposition().tree, triple)), code);
}

CwCompression compress_cw_detailed(const CwContext& ctx, const Sample& sample, const std::optional<Ball>& chosen) {
  const Graph& g = ctx.graph();
  const BallFamily family(g);
  check_vertices(g, sample.positive);
  check_vertices(g, sample.negative);
  Ball b;
  if (chosen) {
    if (!family.admits(*chosen) || !realizes(ball(g, *chosen), sample)) {
      throw InputError("chosen ball does not realise the sample");
    }
    b = *chosen;
  } else {
    auto found = least_center_ball(family, sample);
    if (!found) throw InputError("sample is not realisable by a ball");
    b = *found;
  }
  if (b.radius < 0) b.radius = -1;
  if (b.radius > g.num_vertices()) b.radius = g.num_vertices();

  CwCompression out{blank_code(ctx.code_length()), b, CwCase::Empty, std::nullopt};
  const VertexSet x = sample.support();
  const std::size_t last = out.code.size() - 1;
  if (x.empty()) return out;
  if (sample.negative.empty()) {
    out.which = CwCase::NoNegatives;
    out.code.entries[last - 1] = sample.positive.front();
    out.code.entries[last] = sample.positive.front();
    return out;
  }
  if (contains(x, b.center)) {
    out.which = CwCase::CenterInSample;
    const auto dist = bfs_distances(g, b.center);
    Vertex nearest = sample.negative.front();
    for (Vertex v : sample.negative) {
      if (dist[v] < dist[nearest]) nearest = v;
    }
    out.code.entries[0] = b.center;
    out.code.entries[3] = nearest;
    out.code.entries[4] = nearest;
    return out;
  }

  out.which = CwCase::Main;
  const auto& d = ctx.decomposition();
  std::vector<Node> z;
  for (Vertex v : x) z.push_back(d.leaf_of[v]);
  std::sort(z.begin(), z.end());
  const auto closure = lca_closure(d.tree, z);
  const Subtree target{component_containing(d.tree, closure, d.leaf_of[b.center]).nodes, SubtreeKind::Component};
  const NodeTriple triple = phi_witness(d.tree, z, target);
  for (int i = 0; i < 3; ++i) {
    if (triple[i]) out.code.entries[i] = d.vertex_at(*triple[i]);
  }
  CwCuts cuts = cw_cuts(ctx, phi(d.tree, triple));
  const CwBounds bounds = r_bounds_cw(g, sample, b, cuts);
  const std::size_t t = static_cast<std::size_t>(ctx.t());
  for (std::size_t i = 0; i < t; ++i) {
    out.code.entries[3 + 2 * i] = bounds.u_plus[i].witness;
    out.code.entries[4 + 2 * i] = bounds.u_minus[i].witness;
    out.code.entries[3 + 2 * (t + i)] = bounds.v_plus[i].witness;
    out.code.entries[4 + 2 * (t + i)] = bounds.v_minus[i].witness;
  }
  out.constraints = constraints_from(g, std::move(cuts), out.code);
  return out;
}

ArrayCode compress_cw(const CwContext& ctx, const Sample& sample) { return compress_cw_detailed(ctx, sample).code; }

ArrayCode compress_cw(const CwContext& ctx, const Sample& sample, const Ball& b) {
  return compress_cw_detailed(ctx, sample, b).code;
}

Hypothesis reconstruct_cw(const CwContext& ctx, const ArrayCode& code) {
  check_code(ctx, code);
  const Graph& g = ctx.graph();
  const std::size_t last = code.size() - 1;
  if (code.all_blank()) return empty_hypothesis(g);
  if (code.entries[last] && code.entries[last - 1] == code.entries[last]) {
    return clamped_ball(g, *code.entries[last], g.num_vertices());
  }
  if (code.entries[3] && code.entries[3] == code.entries[4]) {
    if (!code.entries[0]) return empty_hypothesis(g);
    const Vertex w1 = *code.entries[0];
    return clamped_ball(g, w1, bfs_distances(g, w1)[*code.entries[3]] - 1);
  }
  NodeTriple triple;
  for (int i = 0; i < 3; ++i) {
    if (code.entries[i]) triple[i] = ctx.decomposition().leaf_of[*code.entries[i]];
  }
  auto cuts = try_cuts(ctx, phi(ctx.decomposition().tree, triple));
  if (!cuts) return empty_hypothesis(g);
  const CwConstraints k = constraints_from(g, std::move(*cuts), code);
  VertexSet outside;
  for (Vertex w : k.cuts.d1) {
    if (!contains(k.upper1, w)) outside.push_back(w);
  }
  for (Vertex w : k.cuts.d2) {
    if (!contains(k.upper2, w)) outside.push_back(w);
  }
  const VertexSet lower = set_union(k.lower1, k.lower2);
  for (Vertex c : set_intersection(k.cuts.c1, k.cuts.c2)) {
    const auto dist = bfs_distances(g, c);
    ExtInt lo = -1;
    for (Vertex w : lower) lo = std::max(lo, dist[w]);
    ExtInt hi = g.num_vertices();
    for (Vertex w : outside) hi = std::min(hi, dist[w] - 1);
    if (lo <= hi) return ball_hypothesis(g, c, lo);
  }
  return empty_hypothesis(g);
}

}  // namespace ballcomp
