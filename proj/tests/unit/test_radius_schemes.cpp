#include <algorithm>
#include <numeric>

#include "ballcomp/generators.hpp"
#include "ballcomp/radius_schemes.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ballcomp;
using namespace testing_helpers;

namespace {

// Oracle: least back-degree over all orderings.
int exhaustive_degeneracy(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
  std::iota(order.begin(), order.end(), 0);
  int best = g.num_vertices();
  do {
    best = std::min(best, back_degree(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("local treewidth on the 5x5 grid") {
  const Graph g = gen_grid(5, 5);
  const LocalTwContext ctx(g, 1);
  CHECK(ctx.code_length() == 4 * static_cast<std::size_t>(ctx.max_width()) + 8);
  SUBCASE("no positives") {
    const ArrayCode code = compress_local_tw(ctx, make_sample(g, {}, {3, 7}));
    CHECK(code.size() == ctx.code_length());
    CHECK(code.all_blank());
    CHECK(reconstruct_local_tw(ctx, code).vertices.empty());
  }
  SUBCASE("corner against a far vertex") {
    const Sample s = make_sample(g, {0}, {24});
    const Hypothesis h = reconstruct_local_tw(ctx, compress_local_tw(ctx, s));
    CHECK(realizes(h.vertices, s));
    REQUIRE(h.ball);
    CHECK(h.ball->radius <= 1);
    CHECK(ball(g, *h.ball) == h.vertices);
  }
  SUBCASE("samples needing radius above the bound are rejected") {
    CHECK_THROWS_AS(compress_local_tw(ctx, make_sample(g, {0, 12}, {})), InputError);
  }
}

TEST_CASE("local treewidth round trips") {
  for (std::uint64_t seed = 1; seed < 120; ++seed) {
    const int r = 1 + static_cast<int>(seed % 2);
    const bool grid = seed % 3 == 0;
    const Graph g = grid ? gen_grid(3 + static_cast<int>(seed % 4), 4) : gen_partial_ktree(16, 2, 700, seed).graph;
    const LocalTwContext ctx(g, r);
    const BallFamily family(g, r);
    const auto balls = enumerate_balls(family);
    for (int k = 0; k < 3; ++k) {
      const GeneratedSample gs = gen_sample(family, seed * 11 + k);
      const ArrayCode code = compress_local_tw(ctx, gs.sample);
      CHECK(code.size() == ctx.code_length());
      CHECK(is_subset(code.vertices(), gs.sample.support()));
      const Hypothesis h = reconstruct_local_tw(ctx, code);
      CHECK(realizes(h.vertices, gs.sample));
      CHECK(std::binary_search(balls.begin(), balls.end(), h.vertices));
      if (h.ball) CHECK(h.ball->radius <= r);
    }
  }
}

TEST_CASE("local treewidth with a supplied global decomposition") {
  const TwInstance inst = gen_partial_ktree(18, 2, 800, 5);
  const LocalTwContext ctx(inst.graph, 1, inst.decomposition);
  CHECK(ctx.max_width() <= 2);
  const BallFamily family(inst.graph, 1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GeneratedSample gs = gen_sample(family, seed);
    CHECK(realizes(reconstruct_local_tw(ctx, compress_local_tw(ctx, gs.sample)).vertices, gs.sample));
  }
}

TEST_CASE("degeneracy_order") {
  CHECK(degeneracy_order(path(6)).t == 1);
  CHECK(degeneracy_order(complete(4)).t == 3);
  CHECK(degeneracy_order(gen_shattering_gadget(4)).t == 3);
  CHECK(exhaustive_degeneracy(gen_shattering_gadget(2)) == degeneracy_order(gen_shattering_gadget(2)).t);
  for (std::uint64_t seed = 1; seed < 25; ++seed) {
    const Graph g = gen_degenerate_graph(7, 1 + static_cast<int>(seed % 3), seed);
    const DegeneracyOrder d = degeneracy_order(g);
    CHECK(back_degree(g, d.order) == d.t);
    CHECK(d.t == exhaustive_degeneracy(g));
  }
}

TEST_CASE("degeneracy star example with the id ordering") {
  // Star with center 0 and leaves 1..3; the id order witnesses degeneracy 1.
  const Graph g = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
  const DegeneracyContext ctx(g, {0, 1, 2, 3});
  CHECK(ctx.t() == 1);
  CHECK(ctx.bit_length() == 2);
  const LabeledCode code = compress_degeneracy(ctx, make_sample(g, {0, 1}, {}), 1);
  CHECK(code.y_plus == VertexSet{1});
  // Case bit 1, then ordinal 2 of {0, 1} stored as 2 - 1.
  CHECK(code.bits == std::vector<bool>{true, true});
  CHECK(reconstruct_degeneracy(ctx, code).vertices == VertexSet{0, 1});
}

TEST_CASE("degeneracy case 2 returns the positive set itself") {
  const Graph g = graph_of(4, {{0, 3}, {1, 3}, {0, 2}});
  const DegeneracyContext ctx(g, {0, 1, 2, 3});
  const LabeledCode code = compress_degeneracy(ctx, make_sample(g, {0, 1}, {2}), 3);
  CHECK(code.y_plus == VertexSet{0, 1});
  CHECK(code.bits.front() == false);
  const Hypothesis h = reconstruct_degeneracy(ctx, code);
  CHECK(h.vertices == VertexSet{0, 1});
  CHECK_FALSE(h.ball);
  const LabeledCode empty_case = compress_degeneracy(ctx, make_sample(g, {}, {1}));
  CHECK(empty_case.y_plus.empty());
  CHECK_FALSE(DegeneracyContext::kProper);
}

TEST_CASE("degeneracy round trips") {
  for (std::uint64_t seed = 1; seed < 400; ++seed) {
    const int t = 1 + static_cast<int>(seed % 3);
    const Graph g = gen_degenerate_graph(6 + static_cast<int>(seed % 15), t, seed);
    const DegeneracyContext ctx(g);
    CHECK(ctx.t() <= t);
    SplitMix64 rng(seed);
    const Ball b{rng.below_int(g.num_vertices()), 1};
    const GeneratedSample gs = gen_sample_for_ball(g, b, seed);
    const LabeledCode code = compress_degeneracy(ctx, gs.sample);
    CHECK(code.bits.size() == ctx.bit_length());
    // The size formula presumes t >= 1; an edgeless graph is measured at t = 1.
    const int t_eff = std::max(ctx.t(), 1);
    CHECK(code.size() <= static_cast<std::size_t>(t_eff + position_bits(t_eff) + 1));
    const Hypothesis h = reconstruct_degeneracy(ctx, code);
    CHECK(realizes(h.vertices, gs.sample));
    if (code.bits.front()) {
      REQUIRE(h.ball);
      CHECK(h.ball->radius == 1);
    }
  }
}
