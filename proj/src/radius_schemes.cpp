#include "ballcomp/radius_schemes.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ballcomp/errors.hpp"

namespace ballcomp {

LocalTwContext::LocalTwContext(Graph g, int r, const std::optional<TreeDecomposition>& global)
    : graph_(std::move(g)), r_(r) {
  if (r_ < 1) throw InputError("radius bound must be positive");
  if (global) validate_decomposition(graph_, *global);
  const int n = graph_.num_vertices();
  std::vector<TreeDecomposition> decompositions;
  for (Vertex v = 0; v < n; ++v) {
    locals_.push_back(induced_subgraph(graph_, ball(graph_, v, 2 * r_)));
    const InducedSubgraph& local = locals_.back();
    if (global) {
      decompositions.push_back(restrict_decomposition(*global, local));
    } else {
      decompositions.push_back(make_binary(local.graph, min_fill_decomposition(local.graph)));
    }
    max_width_ = std::max(max_width_, decompositions.back().width());
  }
  contexts_.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    contexts_.emplace_back(locals_[v].graph, std::move(decompositions[v]), max_width_, ExtInt(r_));
  }
}

ArrayCode compress_local_tw(const LocalTwContext& ctx, const Sample& sample) {
  const Graph& g = ctx.graph();
  check_vertices(g, sample.positive);
  check_vertices(g, sample.negative);
  if (!least_center_ball(BallFamily(g, ctx.radius()), sample)) {
    throw InputError("sample is not realisable by a ball of radius at most " + std::to_string(ctx.radius()));
  }
  ArrayCode code = blank_code(ctx.code_length());
  if (sample.positive.empty()) return code;
  const Vertex x = sample.positive.front();
  const InducedSubgraph& local = ctx.local_graph(x);
  Sample clipped{local.map_from_original(sample.positive), local.map_from_original(sample.negative)};
  if (clipped.positive.size() != sample.positive.size()) {
    throw ContractViolation("positive sample escapes the 2r-ball of its least element");
  }
  const ArrayCode inner = compress_tw(ctx.local_context(x), clipped);
  code.entries[0] = x;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner.entries[i]) code.entries[i + 1] = local.to_original[*inner.entries[i]];
  }
  return code;
}

Hypothesis reconstruct_local_tw(const LocalTwContext& ctx, const ArrayCode& code) {
  const Graph& g = ctx.graph();
  if (code.size() != ctx.code_length()) {
    throw InputError("local treewidth code has length " + std::to_string(code.size()) + ", expected " +
                     std::to_string(ctx.code_length()));
  }
  for (const auto& e : code.entries) {
    if (e) check_vertex(g, *e);
  }
  if (!code.entries[0]) return empty_hypothesis(g);
  const Vertex x = *code.entries[0];
  const InducedSubgraph& local = ctx.local_graph(x);
  ArrayCode inner = blank_code(ctx.inner_length());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const CodeEntry e = code.entries[i + 1];
    if (!e) continue;
    // Entries outside G_x cannot come from the compressor.
    if (!local.from_original[*e]) return empty_hypothesis(g);
    inner.entries[i] = *local.from_original[*e];
  }
  const Hypothesis h = reconstruct_tw_min_radius(ctx.local_context(x), inner);
  if (!h.ball || h.ball->radius < 0) return empty_hypothesis(g);
  return Hypothesis{local.map_to_original(h.vertices), Ball{local.to_original[h.ball->center], h.ball->radius}};
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  DegeneracyOrder out;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    out.order.push_back(v);
    out.t = std::max(out.t, d);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.insert({--degree[w], w});
    }
  }
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

int back_degree(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> rank(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  int t = 0;
  for (Vertex v : order) {
    int earlier = 0;
    for (Vertex w : g.neighbors(v)) earlier += rank[w] < rank[v];
    t = std::max(t, earlier);
  }
  return t;
}

DegeneracyContext::DegeneracyContext(Graph g) : DegeneracyContext(g, degeneracy_order(g).order) {}

DegeneracyContext::DegeneracyContext(Graph g, std::vector<Vertex> order)
    : graph_(std::move(g)), order_(std::move(order)) {
  const int n = graph_.num_vertices();
  if (static_cast<int>(order_.size()) != n) throw InputError("ordering does not list every vertex once");
  rank_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    check_vertex(graph_, order_[i]);
    if (rank_[order_[i]] != -1) throw InputError("ordering lists vertex " + std::to_string(order_[i]) + " twice");
    rank_[order_[i]] = static_cast<int>(i);
  }
  t_ = back_degree(graph_, order_);
}

int DegeneracyContext::index_bits() const { return position_bits(static_cast<std::size_t>(t_)); }

std::vector<Vertex> DegeneracyContext::earlier_closed_neighborhood(Vertex x) const {
  std::vector<Vertex> out{x};
  for (Vertex w : graph_.neighbors(x)) {
    if (rank_[w] < rank_[x]) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
  return out;
}

LabeledCode compress_degeneracy(const DegeneracyContext& ctx, const Sample& sample) {
  const Graph& g = ctx.graph();
  check_vertices(g, sample.positive);
  check_vertices(g, sample.negative);
  for (Vertex c : ctx.order()) {
    if (realizes(ball(g, c, 1), sample)) return compress_degeneracy(ctx, sample, c);
  }
  throw InputError("sample is not realisable by a closed neighbourhood");
}

LabeledCode compress_degeneracy(const DegeneracyContext& ctx, const Sample& sample, Vertex c) {
  const Graph& g = ctx.graph();
  check_vertex(g, c);
  if (!realizes(ball(g, c, 1), sample)) throw InputError("chosen center does not realise the sample");
  LabeledCode code;
  std::optional<Vertex> x;
  for (Vertex v : sample.positive) {
    if (ctx.rank(v) >= ctx.rank(c) && (!x || ctx.rank(v) < ctx.rank(*x))) x = v;
  }
  if (x) {
    const auto earlier = ctx.earlier_closed_neighborhood(*x);
    const auto pos = std::find(earlier.begin(), earlier.end(), c) - earlier.begin();
    code.y_plus = {*x};
    code.bits.push_back(true);
    // The ordinal j lies in 1..t+1 and is stored as j - 1.
    append_bits(code.bits, static_cast<std::uint64_t>(pos), ctx.index_bits());
  } else {
    code.y_plus = sample.positive;
    code.bits.push_back(false);
    append_bits(code.bits, 0, ctx.index_bits());
  }
  return code;
}

Hypothesis reconstruct_degeneracy(const DegeneracyContext& ctx, const LabeledCode& code) {
  const Graph& g = ctx.graph();
  if (code.bits.size() != ctx.bit_length()) {
    throw InputError("degeneracy code needs " + std::to_string(ctx.bit_length()) + " bits, got " +
                     std::to_string(code.bits.size()));
  }
  check_vertices(g, code.y_plus);
  check_vertices(g, code.y_minus);
  if (!code.bits[0]) return Hypothesis{code.y_plus, std::nullopt};
  if (code.y_plus.size() != 1) return Hypothesis{{}, std::nullopt};
  const auto earlier = ctx.earlier_closed_neighborhood(code.y_plus.front());
  const auto j = read_bits(code.bits, 1, ctx.index_bits());
  if (j >= earlier.size()) return Hypothesis{{}, std::nullopt};
  return ball_hypothesis(g, earlier[j], 1);
}

}  // namespace ballcomp
