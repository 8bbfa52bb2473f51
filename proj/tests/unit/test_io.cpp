#include <sstream>

#include "ballcomp/generators.hpp"
#include "ballcomp/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ballcomp;
using namespace testing_helpers;

namespace {

template <class Render, class Parse>
auto round_trip(Render render, Parse parse) {
  std::ostringstream out;
  render(out);
  std::istringstream in(out.str());
  return parse(in);
}

int error_line(const std::string& text, auto parse) {
  std::istringstream in(text);
  try {
    parse(in);
  } catch (const ParseError& e) {
    CHECK(e.file() == "f.txt");
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("graph format") {
  std::istringstream in("c a path\np 3 2\n1 2\n\n2 3\n");
  CHECK(parse_graph(in, "g") == path(3));
  std::istringstream pace("p tw 2 1\n1 2\n");
  CHECK(parse_graph(pace, "g") == complete(2));
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const Graph g = gen_degenerate_graph(12, 3, seed);
    CHECK(round_trip([&](auto& o) { render_graph(o, g); }, [](auto& i) { return parse_graph(i, "g"); }) == g);
  }
  const auto parse = [](std::istream& i) { return parse_graph(i, "f.txt"); };
  CHECK(error_line("p 3 1\n1 4\n", parse) == 2);
  CHECK(error_line("p 3 2\n1 2\n", parse) == 2);
  CHECK(error_line("c x\nq 3 2\n", parse) == 2);
  CHECK(error_line("p 3 1\n1 x\n", parse) == 2);
  CHECK(error_line("p 3 1\n2 2\n", parse) == 2);
}

TEST_CASE("tree decomposition format") {
  SUBCASE("plain PACE input is binarised from bag 1") {
    std::istringstream in("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    const Graph g = path(3);
    const TreeDecomposition d = to_decomposition(g, parse_tree_decomposition(in, "td"));
    CHECK(d.tree.root() == 0);
    CHECK(d.bags == std::vector<VertexSet>{{0, 1}, {1, 2}});
  }
  SUBCASE("round trip keeps root and child order") {
    for (std::uint64_t seed = 1; seed < 20; ++seed) {
      const TwInstance inst = gen_partial_ktree(18, 3, 700, seed);
      const TreeDecomposition back = round_trip(
          [&](auto& o) { render_tree_decomposition(o, inst.decomposition, 18); },
          [&](auto& i) { return to_decomposition(inst.graph, parse_tree_decomposition(i, "td")); });
      CHECK(back == inst.decomposition);
    }
  }
  SUBCASE("errors") {
    const auto parse = [](std::istream& i) { return parse_tree_decomposition(i, "f.txt"); };
    CHECK(error_line("s td 2 2 3\nb 1 1 2\n", parse) == 2);
    CHECK(error_line("s td 1 2 3\nb 1 1 4\n", parse) == 2);
    CHECK(error_line("s td 1 2 3\nb 1 1\nb 1 2\n", parse) == 3);
    std::istringstream bad("s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n");
    CHECK_THROWS_AS(to_decomposition(path(3), parse_tree_decomposition(bad, "td")), InputError);
  }
}

TEST_CASE("NLC format") {
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const NlcInstance inst = gen_nlc_graph(n, 1 + seed % 3, seed);
    int parsed_n = 0;
    const NlcDecomposition back = round_trip([&](auto& o) { render_nlc(o, inst.decomposition, n); },
                                             [&](auto& i) { return parse_nlc(i, "nlc", &parsed_n); });
    CHECK(parsed_n == n);
    CHECK(back.tree == inst.decomposition.tree);
    CHECK(back.leaf_of == inst.decomposition.leaf_of);
    CHECK(back.alpha == inst.decomposition.alpha);
    CHECK(back.beta == inst.decomposition.beta);
    CHECK(back.relation == inst.decomposition.relation);
    CHECK_NOTHROW(validate_nlc(inst.graph, back));
  }
  const auto parse = [](std::istream& i) { return parse_nlc(i, "f.txt"); };
  CHECK(error_line("nlc 1 1 1 1\n1 _ _\n", parse) == 2);
  CHECK(error_line("nlc 1 1 1 1\nNODES\n1 _ _\nALPHA\n1 1 2\n", parse) == 5);
}

TEST_CASE("cover and sample formats") {
  const VertexSet cover{0, 4, 7};
  CHECK(round_trip([&](auto& o) { render_cover(o, cover); }, [](auto& i) { return parse_cover(i, "vc"); }) == cover);
  CHECK(round_trip([&](auto& o) { render_cover(o, VertexSet{}); }, [](auto& i) { return parse_cover(i, "vc"); }).empty());
  const Sample s{{1, 2}, {5}};
  CHECK(round_trip([&](auto& o) { render_sample(o, s); }, [](auto& i) { return parse_sample(i, "s"); }) == s);
  std::ostringstream out;
  render_sample(out, Sample{});
  CHECK(out.str() == "X+:\nX-:\n");
  const auto parse = [](std::istream& i) { return parse_sample(i, "f.txt"); };
  CHECK(error_line("X+: 1\nX+: 2\n", parse) == 2);
  CHECK(error_line("Z: 1\n", parse) == 1);
  CHECK(error_line("vc 2\n1\n", [](std::istream& i) { return parse_cover(i, "f.txt"); }) == 2);
}

TEST_CASE("code formats") {
  std::ostringstream blank;
  render_array_code(blank, blank_code(3));
  CHECK(blank.str() == "_ _ _\n");
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    ArrayCode a = blank_code(1 + rng.below_int(12));
    for (auto& e : a.entries)
      if (rng.below_int(2)) e = rng.below_int(30);
    CHECK(round_trip([&](auto& o) { render_array_code(o, a); }, [](auto& i) { return parse_array_code(i, "a"); }) == a);
    LabeledCode l{make_vertex_set({rng.below_int(9)}), {}, {}};
    for (int i = rng.below_int(6); i > 0; --i) l.bits.push_back(rng.below_int(2) == 1);
    CHECK(round_trip([&](auto& o) { render_labeled_code(o, l); }, [](auto& i) { return parse_labeled_code(i, "l"); }) == l);
  }
  std::ostringstream lab;
  render_labeled_code(lab, LabeledCode{{0}, {}, {true, false}});
  CHECK(lab.str() == "Y+: 1\nY-:\nbits: 10\n");
  const auto parse = [](std::istream& i) { return parse_labeled_code(i, "f.txt"); };
  CHECK(error_line("Y+: 1\nbits: 012\n", parse) == 2);
  CHECK(error_line("1 _\n2\n", [](std::istream& i) { return parse_array_code(i, "f.txt"); }) == 2);
}

TEST_CASE("hypothesis output") {
  std::ostringstream a, b;
  render_hypothesis(a, empty_hypothesis(path(3)));
  CHECK(a.str() == "empty\n");
  render_hypothesis(b, ball_hypothesis(path(3), 1, 0));
  CHECK(b.str() == "2 0\n2\n");
}
