#include <algorithm>

#include "ballcomp/generators.hpp"
#include "ballcomp/vc_scheme.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ballcomp;
using namespace testing_helpers;

namespace {

// Oracle: least cover size over all subsets.
int min_cover_size(const Graph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (is_vertex_cover(g, s)) best = std::min(best, static_cast<int>(s.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("find_vertex_cover") {
  CHECK(find_vertex_cover(Graph(5), 0) == VertexSet{});
  CHECK(find_vertex_cover(graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 1) == VertexSet{0});
  CHECK(min_cover_size(cycle(5)) == 3);
  CHECK_FALSE(find_vertex_cover(cycle(5), 2));
  const auto c5 = find_vertex_cover(cycle(5), 3);
  REQUIRE(c5);
  CHECK(c5->size() == 3);
  CHECK(is_vertex_cover(cycle(5), *c5));
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    const Graph g = gen_degenerate_graph(10, 2, seed);
    const int k = min_cover_size(g);
    const auto found = find_vertex_cover(g, 10);
    REQUIRE(found);
    CHECK(static_cast<int>(found->size()) == k);
    CHECK_FALSE(find_vertex_cover(g, k - 1));
  }
}

TEST_CASE("VcContext rejects a non-cover") {
  CHECK_THROWS_AS(VcContext(path(3), {0}), InputError);
}

TEST_CASE("compress_vc examples") {
  SUBCASE("no positives") {
    const Graph g = path(3);
    const VcContext ctx(g, {1});
    const LabeledCode code = compress_vc(ctx, make_sample(g, {}, {0, 2}));
    CHECK(code.y_plus.empty());
    CHECK(code.y_minus.empty());
    CHECK(code.bits == std::vector<bool>{false, false, false});
    CHECK(reconstruct_vc(ctx, code).vertices.empty());
  }
  SUBCASE("K2 with cover {u}, sample ({u, v}, empty)") {
    const Graph g = complete(2);
    const VcContext ctx(g, {0});
    const VcCompression comp = compress_vc_detailed(ctx, make_sample(g, {0, 1}, {}));
    CHECK(comp.ball == Ball{0, 2});
    CHECK(comp.which == 2);
    CHECK(comp.code.y_plus == VertexSet{0});
    CHECK(comp.code.y_minus.empty());
    CHECK(comp.code.bits == std::vector<bool>{false, true, false});
    CHECK(reconstruct_vc(ctx, comp.code).vertices == VertexSet{0, 1});
  }
  SUBCASE("star, sample ({leaf}, {center})") {
    const Graph g = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
    const VcContext ctx(g, {0});
    const VcCompression comp = compress_vc_detailed(ctx, make_sample(g, {1}, {0}));
    CHECK(comp.ball == Ball{1, 0});
    CHECK(comp.which == 2);
    CHECK(comp.code.y_plus == VertexSet{1});
    CHECK(comp.code.y_minus == VertexSet{0});
    CHECK(reconstruct_vc(ctx, comp.code).vertices == VertexSet{1});
  }
}

TEST_CASE("twin cycle branch") {
  // Cover {0, 1}; vertices 2..5 all see exactly {0, 1}.
  const Graph g = graph_of(6, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}});
  const VcContext ctx(g, {0, 1});
  // B(4, 1) = {0, 1, 4}: 4 is the unique center of radius 1 avoiding 2, 3, 5.
  const Sample s = make_sample(g, {0, 1}, {2, 3, 5});
  const VcCompression comp = compress_vc_detailed(ctx, s);
  CHECK(comp.ball == Ball{4, 1});
  CHECK(comp.which == 4);
  CHECK(comp.twin_rule);
  CHECK(comp.code.y_minus == VertexSet{3});
  const Hypothesis h = reconstruct_vc(ctx, comp.code);
  CHECK(h.vertices == VertexSet{0, 1, 4});
}

TEST_CASE("reconstruct_vc shape checks") {
  const Graph g = path(3);
  const VcContext ctx(g, {1});
  CHECK_THROWS_AS(reconstruct_vc(ctx, LabeledCode{{}, {}, {false, false}}), InputError);
  CHECK_THROWS_AS(reconstruct_vc(ctx, LabeledCode{{0, 2}, {}, {false, true, false}}), InputError);
  // Case 3 with no cover bit set is inconsistent.
  CHECK(reconstruct_vc(ctx, LabeledCode{{0}, {2}, {true, false, false}}).vertices.empty());
}

TEST_CASE("vertex cover round trips") {
  int trials = 0, twin_hits = 0;
  for (std::uint64_t seed = 1; trials < 1200; ++seed) {
    const int t = static_cast<int>(seed % 5);
    const int n = t + 2 + static_cast<int>(seed * 3 % 16);
    const VcInstance inst = gen_vc_graph(n, t, seed);
    const VcContext ctx(inst.graph, inst.cover);
    const BallFamily family(inst.graph);
    const auto balls = enumerate_balls(family);
    for (int k = 0; k < 4; ++k, ++trials) {
      const GeneratedSample gs = gen_sample(family, seed * 13 + k);
      const VcCompression comp = compress_vc_detailed(ctx, gs.sample);
      twin_hits += comp.twin_rule;
      CHECK(comp.code.subsample_size() <= 2);
      CHECK(comp.code.bits.size() == ctx.bit_length());
      CHECK(is_subset(comp.code.y_plus, gs.sample.positive));
      CHECK(is_subset(comp.code.y_minus, gs.sample.negative));
      const Hypothesis h = reconstruct_vc(ctx, comp.code);
      CHECK(realizes(h.vertices, gs.sample));
      CHECK(std::binary_search(balls.begin(), balls.end(), h.vertices));
    }
  }
  CHECK(twin_hits > 0);
}
