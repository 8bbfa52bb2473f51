#include "ballcomp/tw_scheme.hpp"

#include <algorithm>
#include <string>

#include "ballcomp/errors.hpp"

namespace ballcomp {

TwContext::TwContext(Graph g, TreeDecomposition d, int t, ExtInt radius_cap)
    : graph_(std::move(g)), decomposition_(std::move(d)), t_(t), radius_cap_(radius_cap) {
  if (t_ < 0) throw InputError("treewidth bound must be non-negative");
  validate_decomposition(graph_, decomposition_);
  if (decomposition_.width() > t_) {
    throw InputError("decomposition width " + std::to_string(decomposition_.width()) + " exceeds t = " +
                     std::to_string(t_));
  }
  home_ = home_nodes(decomposition_, graph_.num_vertices());
}

RBounds r_bounds(const Graph& g, const Sample& sample, const Ball& ball, Vertex v) {
  const auto from_v = bfs_distances(g, v);
  const auto from_c = bfs_distances(g, ball.center);
  RBounds out;
  const ExtInt reach = from_c[v].is_finite() ? ball.radius - from_c[v] : ExtInt(-1);
  for (Vertex x : sample.support()) {
    const ExtInt d = from_v[x];
    if (d <= reach && (!out.witness_plus || d > out.r_plus)) {
      out.r_plus = d;
      out.witness_plus = x;
    }
  }
  for (Vertex x : sample.negative) {
    if (from_v[x] < out.r_minus) {
      out.r_minus = from_v[x];
      out.witness_minus = x;
    }
  }
  return out;
}

TwSeparation tw_separation(const TwContext& ctx, const Subtree& c) {
  const auto& d = ctx.decomposition();
  TwSeparation sep{c, {}, {}, {}};
  if (c.nodes.size() == 1) {
    sep.a1 = d.bags[c.nodes.front()];
    sep.a2.resize(ctx.graph().num_vertices());
    for (Vertex v = 0; v < ctx.graph().num_vertices(); ++v) sep.a2[v] = v;
  } else {
    std::vector<char> inside(d.tree.size(), 0);
    for (Node y : c.nodes) inside[y] = 1;
    std::vector<Vertex> a1, a2;
    for (Node y = 0; y < d.tree.size(); ++y) {
      auto& dst = inside[y] ? a1 : a2;
      dst.insert(dst.end(), d.bags[y].begin(), d.bags[y].end());
    }
    sep.a1 = make_vertex_set(std::move(a1));
    sep.a2 = make_vertex_set(std::move(a2));
  }
  sep.separator = set_intersection(sep.a1, sep.a2);
  return sep;
}

bool TwConstraints::accepts(const VertexSet& ball) const {
  if (!usable) return false;
  const VertexSet inner = set_intersection(separation.a2, ball);
  return is_subset(lower, inner) && is_subset(inner, upper);
}

bool TwConstraints::accepts(const Graph& g, const Ball& b) const {
  return contains(separation.a1, b.center) && accepts(ball(g, b));
}

namespace {

Subtree subtree_from_code(const TwContext& ctx, const ArrayCode& code) {
  NodeTriple triple;
  for (int i = 0; i < 3; ++i) {
    if (code.entries[i]) triple[i] = ctx.home(*code.entries[i]);
  }
  return phi(ctx.decomposition().tree, triple);
}

void check_code(const TwContext& ctx, const ArrayCode& code) {
  if (code.size() != ctx.code_length()) {
    throw InputError("treewidth code has length " + std::to_string(code.size()) + ", expected " +
                     std::to_string(ctx.code_length()));
  }
  for (const auto& e : code.entries) {
    if (e) check_vertex(ctx.graph(), *e);
  }
}

TwConstraints constraints_from(const TwContext& ctx, TwSeparation sep, const ArrayCode& code) {
  const Graph& g = ctx.graph();
  TwConstraints out{std::move(sep), {}, {}, {}, {}, true};
  const auto& s = out.separation.separator;
  if (s.size() > ctx.separator_limit()) {
    out.usable = false;
    return out;
  }
  std::vector<Vertex> lower, upper;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto dist = bfs_distances(g, s[i]);
    const CodeEntry xp = code.entries[3 + 2 * i];
    const CodeEntry xm = code.entries[4 + 2 * i];
    const ExtInt rp = xp ? dist[*xp] : ExtInt(-1);
    const ExtInt rm = xm ? dist[*xm] : kInfinity;
    out.r_plus.push_back(rp);
    out.r_minus.push_back(rm);
    for (Vertex u : out.separation.a2) {
      if (dist[u].is_finite() && dist[u] <= rp) lower.push_back(u);
      if (dist[u].is_finite() && dist[u] <= rm - 1) upper.push_back(u);
    }
  }
  out.lower = make_vertex_set(std::move(lower));
  out.upper = make_vertex_set(std::move(upper));
  return out;
}

// Feasible radius interval [lo, hi] for center c (lo > hi when none).
std::pair<ExtInt, ExtInt> radius_window(const Graph& g, const TwConstraints& k, Vertex c) {
  const auto dist = bfs_distances(g, c);
  ExtInt lo = -1;
  for (Vertex u : k.lower) lo = std::max(lo, dist[u]);
  ExtInt hi = g.num_vertices();
  for (Vertex u : k.separation.a2) {
    if (!contains(k.upper, u)) hi = std::min(hi, dist[u] - 1);
  }
  return {lo, hi};
}

Hypothesis search(const TwContext& ctx, const ArrayCode& code, bool min_radius) {
  check_code(ctx, code);
  const Graph& g = ctx.graph();
  const TwConstraints k = tw_constraints(ctx, code);
  if (!k.usable) return empty_hypothesis(g);
  std::optional<Ball> best;
  for (Vertex c : k.separation.a1) {
    const auto [lo, hi] = radius_window(g, k, c);
    if (lo > hi) continue;
    if (!min_radius) return ball_hypothesis(g, c, lo);
    if (!best || lo < best->radius) best = Ball{c, lo};
  }
  if (best) return ball_hypothesis(g, best->center, best->radius);
  return empty_hypothesis(g);
}

}  // namespace

TwConstraints tw_constraints(const TwContext& ctx, const ArrayCode& code) {
  check_code(ctx, code);
  return constraints_from(ctx, tw_separation(ctx, subtree_from_code(ctx, code)), code);
}

TwCompression compress_tw_detailed(const TwContext& ctx, const Sample& sample, const std::optional<Ball>& chosen) {
  const Graph& g = ctx.graph();
  const BallFamily family(g, ctx.radius_cap());
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

  const auto& tree = ctx.decomposition().tree;
  const VertexSet x = sample.support();
  std::vector<Node> z;
  for (Vertex v : x) z.push_back(ctx.home(v));
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  const auto closure = lca_closure(tree, z);
  const Node hc = ctx.home(b.center);
  Subtree target;
  if (std::binary_search(closure.begin(), closure.end(), hc)) {
    target = single_node(hc);
  } else {
    target = Subtree{component_containing(tree, closure, hc).nodes, SubtreeKind::Component};
  }
  const NodeTriple triple = phi_witness(tree, z, target);

  ArrayCode code = blank_code(ctx.code_length());
  for (int i = 0; i < 3; ++i) {
    if (!triple[i]) continue;
    for (Vertex v : x) {
      if (ctx.home(v) == *triple[i]) {
        code.entries[i] = v;
        break;
      }
    }
  }
  TwSeparation sep = tw_separation(ctx, phi(tree, triple));
  if (sep.separator.size() > ctx.separator_limit()) {
    throw ContractViolation("separator of size " + std::to_string(sep.separator.size()) + " exceeds 2t+2");
  }
  for (std::size_t i = 0; i < sep.separator.size(); ++i) {
    const RBounds rb = r_bounds(g, sample, b, sep.separator[i]);
    code.entries[3 + 2 * i] = rb.witness_plus;
    code.entries[4 + 2 * i] = rb.witness_minus;
  }
  TwConstraints k = constraints_from(ctx, std::move(sep), code);
  return TwCompression{std::move(code), b, std::move(k)};
}

ArrayCode compress_tw(const TwContext& ctx, const Sample& sample) {
  return compress_tw_detailed(ctx, sample).code;
}

ArrayCode compress_tw(const TwContext& ctx, const Sample& sample, const Ball& b) {
  return compress_tw_detailed(ctx, sample, b).code;
}

Hypothesis reconstruct_tw(const TwContext& ctx, const ArrayCode& code) { return search(ctx, code, false); }

Hypothesis reconstruct_tw_min_radius(const TwContext& ctx, const ArrayCode& code) {
  return search(ctx, code, true);
}

}  // namespace ballcomp
