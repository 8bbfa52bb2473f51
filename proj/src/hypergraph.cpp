#include "ballcomp/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace ballcomp {

Sample make_sample(const Graph& g, std::vector<Vertex> positive, std::vector<Vertex> negative) {
  Sample s{make_vertex_set(std::move(positive)), make_vertex_set(std::move(negative))};
  check_vertices(g, s.positive);
  check_vertices(g, s.negative);
  if (!set_intersection(s.positive, s.negative).empty()) {
    throw InputError("sample labels a vertex both positive and negative");
  }
  return s;
}

bool realizes(const VertexSet& s, const Sample& sample) {
  return is_subset(sample.positive, s) && set_intersection(s, sample.negative).empty();
}

BallFamily::BallFamily(const Graph& g, ExtInt radius_cap) : graph_(&g), radius_cap_(radius_cap) {}

int BallFamily::max_radius() const {
  const ExtInt cap = std::min(radius_cap_, ExtInt(graph_->num_vertices()));
  return cap < -1 ? -1 : static_cast<int>(cap.value());
}

bool BallFamily::admits(const Ball& b) const {
  return graph_->has_vertex(b.center) && b.radius <= radius_cap_;
}

std::vector<VertexSet> enumerate_balls(const BallFamily& family) {
  const Graph& g = family.graph();
  std::set<VertexSet> seen;
  seen.insert(VertexSet{});
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    const auto dist = bfs_distances(g, c);
    for (int s = 0; s <= family.max_radius(); ++s) seen.insert(ball_from_distances(dist, s));
  }
  return {seen.begin(), seen.end()};
}

bool is_hyperedge(const BallFamily& family, const VertexSet& s) {
  const auto balls = enumerate_balls(family);
  return std::binary_search(balls.begin(), balls.end(), s);
}

bool is_sample(const BallFamily& family, const Sample& sample) {
  for (const auto& e : enumerate_balls(family)) {
    if (realizes(e, sample)) return true;
  }
  return false;
}

std::optional<Ball> least_center_ball(const BallFamily& family, const Sample& sample) {
  const Graph& g = family.graph();
  check_vertices(g, sample.positive);
  check_vertices(g, sample.negative);
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    const auto dist = bfs_distances(g, c);
    ExtInt lowest = -1;
    for (Vertex x : sample.positive) lowest = std::max(lowest, dist[x]);
    ExtInt highest = family.max_radius();
    for (Vertex x : sample.negative) highest = std::min(highest, dist[x] - 1);
    if (lowest <= highest) return Ball{c, lowest};
  }
  return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> ball_masks(const BallFamily& family) {
  if (family.graph().num_vertices() > kMaxOracleVertices) {
    throw InputError("exact dimension oracles need at most " + std::to_string(kMaxOracleVertices) +
                     " vertices; got " + std::to_string(family.graph().num_vertices()));
  }
  std::vector<Mask> masks;
  for (const auto& e : enumerate_balls(family)) {
    Mask m = 0;
    for (Vertex v : e) m |= Mask{1} << v;
    masks.push_back(m);
  }
  return masks;
}

struct StopSearch {};

// Depth-first search over a downward-closed family of vertex sets, extending
// each member by larger vertex ids only.
template <class Predicate>
int largest_closed_set(int n, const Predicate& accepts, std::optional<int> stop_at) {
  int best = 0;
  auto dfs = [&](auto&& self, Mask current, int size, int next) -> void {
    for (int v = next; v < n; ++v) {
      const Mask candidate = current | (Mask{1} << v);
      if (!accepts(candidate, size + 1)) continue;
      best = std::max(best, size + 1);
      if (stop_at && best >= *stop_at) throw StopSearch{};
      self(self, candidate, size + 1, v + 1);
    }
  };
  try {
    dfs(dfs, 0, 0, 0);
  } catch (const StopSearch&) {
  }
  return best;
}

}  // namespace

int vc_dimension(const BallFamily& family, const DimensionOptions& options) {
  const auto masks = ball_masks(family);
  auto shattered = [&](Mask set, int size) {
    if (size >= 63 || (std::size_t{1} << size) > masks.size()) return false;
    std::vector<Mask> traces;
    traces.reserve(masks.size());
    for (Mask e : masks) traces.push_back(e & set);
    std::sort(traces.begin(), traces.end());
    const auto distinct = std::unique(traces.begin(), traces.end()) - traces.begin();
    return distinct == static_cast<std::ptrdiff_t>(std::size_t{1} << size);
  };
  return largest_closed_set(family.graph().num_vertices(), shattered, options.stop_at);
}

int two_vc_dimension(const BallFamily& family, const DimensionOptions& options) {
  const auto masks = ball_masks(family);
  auto two_shattered = [&](Mask set, int size) {
    if (size < 2) return true;
    std::vector<Mask> pairs;
    for (Mask e : masks) {
      const Mask trace = e & set;
      if (std::popcount(trace) == 2) pairs.push_back(trace);
    }
    std::sort(pairs.begin(), pairs.end());
    const auto distinct = std::unique(pairs.begin(), pairs.end()) - pairs.begin();
    return distinct == static_cast<std::ptrdiff_t>(size) * (size - 1) / 2;
  };
  return largest_closed_set(family.graph().num_vertices(), two_shattered, options.stop_at);
}

bool ArrayCode::all_blank() const {
  return std::none_of(entries.begin(), entries.end(), [](const CodeEntry& e) { return e.has_value(); });
}

VertexSet ArrayCode::vertices() const {
  std::vector<Vertex> out;
  for (const auto& e : entries) {
    if (e) out.push_back(*e);
  }
  return make_vertex_set(std::move(out));
}

ArrayCode blank_code(std::size_t length) { return ArrayCode{std::vector<CodeEntry>(length)}; }

int position_bits(std::size_t k) {
  int width = 0;
  while ((std::size_t{1} << width) < k + 1) ++width;
  return width;
}

void append_bits(std::vector<bool>& bits, std::uint64_t value, int width) {
  for (int b = width - 1; b >= 0; --b) bits.push_back(((value >> b) & 1U) != 0);
}

std::uint64_t read_bits(const std::vector<bool>& bits, std::size_t offset, int width) {
  if (offset + static_cast<std::size_t>(width) > bits.size()) throw DecodeError("bitstring too short");
  std::uint64_t value = 0;
  for (int b = 0; b < width; ++b) value = (value << 1) | (bits[offset + b] ? 1U : 0U);
  return value;
}

LabeledCode array_to_labeled(const ArrayCode& code, const std::function<bool(Vertex)>& is_positive) {
  const VertexSet subsample = code.vertices();
  LabeledCode out;
  for (Vertex v : subsample) (is_positive(v) ? out.y_plus : out.y_minus).push_back(v);
  const int width = position_bits(code.size());
  for (const auto& e : code.entries) {
    std::uint64_t index = 0;
    if (e) index = static_cast<std::uint64_t>(std::lower_bound(subsample.begin(), subsample.end(), *e) - subsample.begin()) + 1;
    append_bits(out.bits, index, width);
  }
  return out;
}

LabeledCode array_to_labeled(const ArrayCode& code, const Sample& labelling) {
  return array_to_labeled(code, [&](Vertex v) { return contains(labelling.positive, v); });
}

ArrayCode labeled_to_array(const LabeledCode& code) {
  const auto is_canonical = [](const VertexSet& s) {
    return std::adjacent_find(s.begin(), s.end(), [](Vertex a, Vertex b) { return a >= b; }) == s.end();
  };
  if (!is_canonical(code.y_plus) || !is_canonical(code.y_minus)) throw DecodeError("subsample is not sorted");
  if (!set_intersection(code.y_plus, code.y_minus).empty()) throw DecodeError("subsample sides overlap");

  // k * ceil(log2(k + 1)) is strictly increasing in k, so the length fixes k.
  std::size_t k = 0;
  while (k * static_cast<std::size_t>(position_bits(k)) < code.bits.size()) ++k;
  const int width = position_bits(k);
  if (k * static_cast<std::size_t>(width) != code.bits.size()) {
    throw DecodeError("bitstring length " + std::to_string(code.bits.size()) + " matches no array length");
  }

  const VertexSet subsample = set_union(code.y_plus, code.y_minus);
  ArrayCode out = blank_code(k);
  std::vector<bool> used(subsample.size(), false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto index = read_bits(code.bits, i * width, width);
    if (index == 0) continue;
    if (index > subsample.size()) throw DecodeError("position index " + std::to_string(index) + " past the subsample");
    out.entries[i] = subsample[index - 1];
    used[index - 1] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw DecodeError("subsample contains a vertex no position refers to");
  }
  return out;
}

Hypothesis empty_hypothesis(const Graph& g) {
  Hypothesis h;
  if (g.num_vertices() > 0) h.ball = Ball{0, -1};
  return h;
}

Hypothesis ball_hypothesis(const Graph& g, Vertex center, ExtInt radius) {
  if (radius < 0) radius = -1;
  return Hypothesis{ball(g, center, radius), Ball{center, radius}};
}

}  // namespace ballcomp
