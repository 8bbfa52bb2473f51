#include "ballcomp/vc_scheme.hpp"

#include <algorithm>
#include <string>

#include "ballcomp/errors.hpp"

namespace ballcomp {

namespace {

bool branch(const Graph& g, std::vector<char>& chosen, int budget) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (chosen[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (chosen[v]) continue;
      if (budget == 0) return false;
      for (Vertex pick : {u, v}) {
        chosen[pick] = 1;
        if (branch(g, chosen, budget - 1)) return true;
        chosen[pick] = 0;
      }
      return false;
    }
  }
  return true;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  return VertexSet(g.neighbors(v).begin(), g.neighbors(v).end());
}

Hypothesis clamped_ball(const Graph& g, Vertex c, ExtInt r) {
  if (r > g.num_vertices()) r = g.num_vertices();
  return ball_hypothesis(g, c, r);
}

}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (auto [u, v] : g.edges()) {
    if (!contains(cover, u) && !contains(cover, v)) return false;
  }
  return true;
}

std::optional<VertexSet> find_vertex_cover(const Graph& g, int k) {
  for (int budget = 0; budget <= k; ++budget) {
    std::vector<char> chosen(static_cast<std::size_t>(g.num_vertices()), 0);
    if (branch(g, chosen, budget)) {
      VertexSet cover;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (chosen[v]) cover.push_back(v);
      }
      return cover;
    }
  }
  return std::nullopt;
}

VcContext::VcContext(Graph g, VertexSet cover) : graph_(std::move(g)), cover_(make_vertex_set(std::move(cover))) {
  check_vertices(graph_, cover_);
  if (!is_vertex_cover(graph_, cover_)) throw InputError("the given set is not a vertex cover");
}

VcCompression compress_vc_detailed(const VcContext& ctx, const Sample& sample) {
  const Graph& g = ctx.graph();
  const int n = g.num_vertices();
  check_vertices(g, sample.positive);
  check_vertices(g, sample.negative);

  // Greatest feasible radius per center, capped at n.
  std::optional<Ball> best;
  for (Vertex c = 0; c < n; ++c) {
    const auto dist = bfs_distances(g, c);
    ExtInt lo = -1;
    for (Vertex x : sample.positive) lo = std::max(lo, dist[x]);
    ExtInt hi = n;
    for (Vertex x : sample.negative) hi = std::min(hi, dist[x] - 1);
    if (lo <= hi && (!best || hi > best->radius)) best = Ball{c, hi};
  }
  if (!best) throw InputError("sample is not realisable by a ball");
  const Vertex c = best->center;
  const ExtInt r = best->radius;

  VcCompression out;
  out.ball = *best;
  if (sample.positive.empty()) {
    out.which = 1;
  } else if (contains(sample.positive, c)) {
    out.which = 2;
  } else if (contains(ctx.cover(), c)) {
    out.which = 3;
  } else {
    out.which = 4;
  }

  std::optional<Vertex> x;
  if (!sample.negative.empty()) {
    const VertexSet nc = neighborhood(g, c);
    VertexSet twins;
    for (Vertex y : sample.negative) {
      if (!contains(ctx.cover(), y) && neighborhood(g, y) == nc) twins.push_back(y);
    }
    if (r == 1 && !contains(ctx.cover(), c) && !twins.empty()) {
      // Cyclic predecessor of c in twins + {c}.
      auto it = std::lower_bound(twins.begin(), twins.end(), c);
      x = it == twins.begin() ? twins.back() : *std::prev(it);
      out.twin_rule = true;
    } else {
      const auto dist = bfs_distances(g, c);
      x = sample.negative.front();
      for (Vertex y : sample.negative) {
        if (dist[y] < dist[*x]) x = y;
      }
    }
  }

  LabeledCode& code = out.code;
  switch (out.which) {
    case 1:
      break;
    case 2:
      code.y_plus = {c};
      break;
    default:
      code.y_plus = {sample.positive.front()};
      break;
  }
  if (out.which != 1 && x) code.y_minus = {*x};
  append_bits(code.bits, static_cast<std::uint64_t>(out.which - 1), 2);
  std::vector<bool> tail(ctx.cover().size(), false);
  for (std::size_t j = 0; j < ctx.cover().size(); ++j) {
    const Vertex rj = ctx.cover()[j];
    if (out.which == 3) tail[j] = rj == c;
    if (out.which == 4) tail[j] = g.adjacent(rj, c);
  }
  code.bits.insert(code.bits.end(), tail.begin(), tail.end());
  return out;
}

LabeledCode compress_vc(const VcContext& ctx, const Sample& sample) { return compress_vc_detailed(ctx, sample).code; }

Hypothesis reconstruct_vc(const VcContext& ctx, const LabeledCode& code) {
  const Graph& g = ctx.graph();
  if (code.bits.size() != ctx.bit_length()) {
    throw InputError("vertex cover code needs " + std::to_string(ctx.bit_length()) + " bits, got " +
                     std::to_string(code.bits.size()));
  }
  if (code.y_plus.size() > 1 || code.y_minus.size() > 1) {
    throw InputError("vertex cover code carries more than one vertex per side");
  }
  check_vertices(g, code.y_plus);
  check_vertices(g, code.y_minus);
  const int which = static_cast<int>(read_bits(code.bits, 0, 2)) + 1;
  if (which == 1) return empty_hypothesis(g);
  if (code.y_plus.empty()) return empty_hypothesis(g);
  const Vertex cp = code.y_plus.front();
  if (code.y_minus.empty()) return clamped_ball(g, cp, g.num_vertices());
  const Vertex x = code.y_minus.front();

  if (which == 2) return clamped_ball(g, cp, bfs_distances(g, cp)[x] - 1);
  const VertexSet& cover = ctx.cover();
  if (which == 3) {
    std::optional<Vertex> rj;
    for (std::size_t j = 0; j < cover.size(); ++j) {
      if (!code.bits[2 + j]) continue;
      if (rj) return empty_hypothesis(g);
      rj = cover[j];
    }
    if (!rj) return empty_hypothesis(g);
    return clamped_ball(g, *rj, bfs_distances(g, *rj)[x] - 1);
  }
  VertexSet r_prime;
  for (std::size_t j = 0; j < cover.size(); ++j) {
    if (code.bits[2 + j]) r_prime.push_back(cover[j]);
  }
  VertexSet s;
  for (Vertex y = 0; y < g.num_vertices(); ++y) {
    if (!contains(cover, y) && neighborhood(g, y) == r_prime) s.push_back(y);
  }
  if (s.empty()) return empty_hypothesis(g);
  if (!contains(s, x)) return clamped_ball(g, s.front(), bfs_distances(g, s.front())[x] - 1);
  // Cyclic successor of x in s.
  auto it = std::upper_bound(s.begin(), s.end(), x);
  return ball_hypothesis(g, it == s.end() ? s.front() : *it, 1);
}

}  // namespace ballcomp
