#include <algorithm>
#include <bit>
#include <set>

#include "ballcomp/generators.hpp"
#include "ballcomp/hypergraph.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ballcomp;
using namespace testing_helpers;

TEST_CASE("realizes") {
  CHECK(realizes({}, Sample{{}, {0, 1}}));
  CHECK_FALSE(realizes({0}, Sample{{0}, {0}}));
  CHECK(realizes({0, 1}, Sample{{0}, {2}}));
}

TEST_CASE("make_sample validation") {
  CHECK_THROWS_AS(make_sample(path(3), {0}, {0}), InputError);
  CHECK_THROWS_AS(make_sample(path(3), {5}, {}), InputError);
  CHECK(make_sample(path(3), {2, 0, 2}, {}).positive == VertexSet{0, 2});
}

TEST_CASE("enumerate_balls") {
  const Graph k1(1), k2 = complete(2), p3 = path(3), p5 = path(5);
  CHECK(enumerate_balls(BallFamily(k2)) == std::vector<VertexSet>{{}, {0}, {0, 1}, {1}});
  CHECK(enumerate_balls(BallFamily(k1)) == std::vector<VertexSet>{{}, {0}});
  CHECK(enumerate_balls(BallFamily(p3)) ==
        std::vector<VertexSet>{{}, {0}, {0, 1}, {0, 1, 2}, {1}, {1, 2}, {2}});
  CHECK(enumerate_balls(BallFamily(p5, 1)).size() == 1 + 5 + 5);
}

TEST_CASE("is_sample") {
  const Graph p3 = path(3);
  const BallFamily f(p3);
  CHECK(is_sample(f, Sample{}));
  CHECK_FALSE(is_sample(f, Sample{{0, 2}, {1}}));
  CHECK(is_sample(f, Sample{{0}, {2}}));
}

TEST_CASE("least_center_ball agrees with the enumeration") {
  for (std::uint64_t seed = 1; seed < 60; ++seed) {
    const Graph g = gen_degenerate_graph(9, 2, seed);
    const BallFamily f(g, static_cast<int>(seed % 4));
    const auto balls = enumerate_balls(f);
    SplitMix64 rng(seed);
    Sample s;
    for (Vertex v = 0; v < 9; ++v) {
      const int roll = rng.below_int(4);
      if (roll == 0) s.positive.push_back(v);
      if (roll == 1) s.negative.push_back(v);
    }
    const bool oracle = std::any_of(balls.begin(), balls.end(), [&](const VertexSet& b) { return realizes(b, s); });
    const auto found = least_center_ball(f, s);
    CHECK(oracle == found.has_value());
    CHECK(oracle == is_sample(f, s));
    if (found) {
      CHECK(f.admits(*found));
      CHECK(realizes(ball(g, *found), s));
    }
  }
}

namespace {

// Oracle: shattering checked over the raw list of balls B(c, r), -1 <= r <= n.
int vc_oracle(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::uint32_t> traces;
  for (Vertex c = 0; c < n; ++c) {
    const auto dist = bfs_distances(g, c);
    for (int r = -1; r <= n; ++r) {
      std::uint32_t mask = 0;
      for (Vertex v = 0; v < n; ++v)
        if (dist[v].is_finite() && dist[v] <= r) mask |= 1u << v;
      traces.push_back(mask);
    }
  }
  int best = 0;
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    std::set<std::uint32_t> seen;
    for (auto t : traces) seen.insert(t & a);
    const int size = std::popcount(a);
    if (seen.size() == (std::size_t{1} << size)) best = std::max(best, size);
  }
  return best;
}

}  // namespace

TEST_CASE("vc_dimension") {
  const Graph k1(1), k3 = complete(3), g2 = gen_shattering_gadget(2), g3 = gen_shattering_gadget(3);
  CHECK(vc_dimension(BallFamily(k1)) == 1);
  // {a, b} in K_3 is shattered by the empty ball, two singletons and V.
  CHECK(vc_oracle(k3) == 2);
  CHECK(vc_dimension(BallFamily(k3)) == 2);
  CHECK(vc_dimension(BallFamily(g2)) >= 2);
  CHECK(vc_dimension(BallFamily(g3)) >= 3);
  for (std::uint64_t seed = 1; seed < 25; ++seed) {
    const Graph g = gen_degenerate_graph(9, 2, seed);
    CHECK(vc_dimension(BallFamily(g)) == vc_oracle(g));
  }
}

TEST_CASE("two_vc_dimension") {
  const Graph k1(1), k2 = complete(2), p3 = path(3);
  CHECK(two_vc_dimension(BallFamily(k2)) == 2);
  CHECK(two_vc_dimension(BallFamily(k1)) == 1);
  CHECK(two_vc_dimension(BallFamily(p3)) <= 8);
  for (std::uint64_t seed = 1; seed < 15; ++seed) {
    const Graph g = gen_degenerate_graph(9, 2, seed);
    const BallFamily f(g);
    const int vc = vc_dimension(f);
    if (vc >= 2) CHECK(vc <= two_vc_dimension(f));
  }
}

TEST_CASE("array and labelled codes") {
  SUBCASE("all blank") {
    const LabeledCode l = array_to_labeled(blank_code(3), Sample{});
    CHECK(l.y_plus.empty());
    CHECK(l.y_minus.empty());
    CHECK(l.bits == std::vector<bool>(3 * position_bits(3), false));
    CHECK(labeled_to_array(l) == blank_code(3));
  }
  SUBCASE("single element") {
    const ArrayCode a{{4, std::nullopt, 4}};
    const LabeledCode l = array_to_labeled(a, Sample{{4}, {}});
    CHECK(l.y_plus == VertexSet{4});
    CHECK(l.bits == std::vector<bool>{false, true, false, false, false, true});
    CHECK(labeled_to_array(l) == a);
  }
  SUBCASE("random round trips") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
      ArrayCode a = blank_code(7);
      for (auto& e : a.entries) {
        if (rng.below_int(3) != 0) e = rng.below_int(12);
      }
      const LabeledCode l = array_to_labeled(a, [](Vertex v) { return v % 2 == 0; });
      CHECK(labeled_to_array(l) == a);
    }
  }
  SUBCASE("malformed labelled codes") {
    CHECK_THROWS_AS(labeled_to_array(LabeledCode{{1}, {}, {true, true}}), DecodeError);
    CHECK_THROWS_AS(labeled_to_array(LabeledCode{{1}, {1}, {}}), DecodeError);
  }
}
