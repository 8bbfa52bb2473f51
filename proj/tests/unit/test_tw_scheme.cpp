#include <algorithm>

#include "ballcomp/generators.hpp"
#include "ballcomp/tw_scheme.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ballcomp;
using namespace testing_helpers;

namespace {

TreeDecomposition path3_decomposition(const Graph& g) {
  RawTreeDecomposition raw{{{0, 1}, {1, 2}}, {{0, 1}}};
  return make_binary(g, raw, 0);
}

}  // namespace

TEST_CASE("r_bounds conventions") {
  const Graph g = path(3);
  SUBCASE("empty sample") {
    const RBounds b = r_bounds(g, Sample{}, Ball{0, 1}, 1);
    CHECK(b == RBounds{-1, std::nullopt, kInfinity, std::nullopt});
  }
  SUBCASE("path a-b-c, ({a},{c}), ball (a, 0), v = b") {
    const RBounds b = r_bounds(g, make_sample(g, {0}, {2}), Ball{0, 0}, 1);
    CHECK(b.r_plus == -1);
    CHECK_FALSE(b.witness_plus);
    CHECK(b.r_minus == 1);
    CHECK(b.witness_minus == 2);
  }
  SUBCASE("unreachable v") {
    const Graph h = graph_of(3, {{0, 1}});
    const RBounds b = r_bounds(h, make_sample(h, {0, 1}, {}), Ball{0, 3}, 2);
    CHECK(b.r_plus == -1);
  }
}

TEST_CASE("compress_tw on the path with bags {a,b},{b,c}") {
  const Graph g = path(3);
  const TwContext ctx(g, path3_decomposition(g), 1);
  SUBCASE("empty sample gives the blank code") {
    const ArrayCode code = compress_tw(ctx, Sample{});
    CHECK(code.size() == 11);
    CHECK(code.all_blank());
    CHECK(reconstruct_tw(ctx, code).vertices.empty());
    CHECK(reconstruct_tw_min_radius(ctx, code).vertices.empty());
  }
  SUBCASE("({a},{c})") {
    const Sample s = make_sample(g, {0}, {2});
    const ArrayCode code = compress_tw(ctx, s);
    CHECK(code.size() == 11);
    for (Vertex v : code.vertices()) CHECK((v == 0 || v == 2));
    const Hypothesis h = reconstruct_tw(ctx, code);
    CHECK(realizes(h.vertices, s));
    CHECK(is_enumerated(BallFamily(g), h.vertices));
  }
  SUBCASE("single positive point compressed from B(b, 0) comes back with radius 0") {
    const Sample s = make_sample(g, {1}, {});
    const Hypothesis h = reconstruct_tw_min_radius(ctx, compress_tw(ctx, s, Ball{1, 0}));
    REQUIRE(h.ball);
    CHECK(h.ball->radius == 0);
    CHECK(contains(h.vertices, 1));
  }
  SUBCASE("single positive point with the default ball B(a, 1)") {
    // The fixed ball's radius bounds the minimal radius, and here (A2 = V) the
    // lower constraint already contains a and b.
    const Sample s = make_sample(g, {1}, {});
    const TwCompression comp = compress_tw_detailed(ctx, s);
    CHECK(comp.ball == Ball{0, 1});
    const Hypothesis h = reconstruct_tw_min_radius(ctx, comp.code);
    REQUIRE(h.ball);
    CHECK(h.ball->radius == 1);
    CHECK(realizes(h.vertices, s));
  }
}

TEST_CASE("TwContext rejects a decomposition wider than t") {
  const Graph g = complete(3);
  const TreeDecomposition d = make_binary(g, RawTreeDecomposition{{{0, 1, 2}}, {}}, 0);
  CHECK_THROWS_AS(TwContext(g, d, 1), InputError);
  CHECK_NOTHROW(TwContext(g, d, 2));
}

TEST_CASE("compress_tw rejects unrealisable samples") {
  const Graph g = path(3);
  const TwContext ctx(g, path3_decomposition(g), 1);
  CHECK_THROWS_AS(compress_tw(ctx, make_sample(g, {0, 2}, {1})), InputError);
}

TEST_CASE("treewidth round trips on partial k-trees") {
  int trials = 0;
  for (std::uint64_t seed = 1; trials < 400; ++seed) {
    const int t = 1 + static_cast<int>(seed % 3);
    const int n = t + 1 + static_cast<int>(seed * 7 % 20);
    const TwInstance inst = gen_partial_ktree(n, t, 700, seed);
    const TwContext ctx(inst.graph, inst.decomposition, t);
    const BallFamily family(inst.graph);
    const auto balls = enumerate_balls(family);
    for (int k = 0; k < 4; ++k, ++trials) {
      const GeneratedSample gs = gen_sample(family, seed * 31 + k);
      const TwCompression comp = compress_tw_detailed(ctx, gs.sample);
      CHECK(comp.code.size() == 4 * t + 7);
      CHECK(is_subset(comp.code.vertices(), gs.sample.support()));
      CHECK(comp.constraints.accepts(inst.graph, comp.ball));
      for (bool min_radius : {false, true}) {
        const Hypothesis h = min_radius ? reconstruct_tw_min_radius(ctx, comp.code) : reconstruct_tw(ctx, comp.code);
        CHECK(realizes(h.vertices, gs.sample));
        CHECK(std::binary_search(balls.begin(), balls.end(), h.vertices));
        if (min_radius && h.ball) CHECK(h.ball->radius <= comp.ball.radius);
      }
    }
  }
}

TEST_CASE("every ball the treewidth constraints accept realises the sample") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const TwInstance inst = gen_partial_ktree(12, 2, 650, seed);
    const TwContext ctx(inst.graph, inst.decomposition, 2);
    const BallFamily family(inst.graph);
    const GeneratedSample gs = gen_sample(family, seed);
    const TwConstraints k = tw_constraints(ctx, compress_tw(ctx, gs.sample));
    for (Vertex c : k.separation.a1) {
      for (int s = -1; s <= inst.graph.num_vertices(); ++s) {
        if (k.accepts(inst.graph, Ball{c, s})) CHECK(realizes(ball(inst.graph, c, s), gs.sample));
      }
    }
  }
}

TEST_CASE("radius cap bounds the reconstructed radius") {
  for (std::uint64_t seed = 1; seed < 60; ++seed) {
    const TwInstance inst = gen_partial_ktree(14, 2, 800, seed);
    const int cap = 1 + static_cast<int>(seed % 2);
    const TwContext ctx(inst.graph, inst.decomposition, 2, cap);
    const BallFamily family(inst.graph, cap);
    const GeneratedSample gs = gen_sample(family, seed + 5);
    const Hypothesis h = reconstruct_tw_min_radius(ctx, compress_tw(ctx, gs.sample));
    CHECK(realizes(h.vertices, gs.sample));
    if (h.ball) CHECK(h.ball->radius <= cap);
  }
}
