#include <algorithm>
#include <set>

#include "ballcomp/tree.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ballcomp;
using namespace testing_helpers;

namespace {

// Complete binary tree of depth 2 (7 nodes) in heap order.
RootedBinaryTree heap7() {
  std::vector<std::optional<Node>> left(7), right(7);
  for (Node x = 0; x < 3; ++x) {
    left[x] = 2 * x + 1;
    right[x] = 2 * x + 2;
  }
  return RootedBinaryTree::from_children(0, left, right);
}

std::vector<Node> closure_oracle(const RootedBinaryTree& t, const std::vector<Node>& z) {
  std::set<Node> out;
  for (Node a : z)
    for (Node b : z) out.insert(lca_by_ancestors(t, a, b));
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("from_children validation") {
  CHECK_THROWS_AS(RootedBinaryTree::from_children(0, {1, 0}, {std::nullopt, std::nullopt}), InputError);
  CHECK_THROWS_AS(RootedBinaryTree::from_children(0, {1, std::nullopt, std::nullopt}, {std::nullopt, std::nullopt, std::nullopt}),
                  InputError);
}

TEST_CASE("lca") {
  const RootedBinaryTree t = heap7();
  CHECK(lca(t, 0, 5) == 0);
  CHECK(lca(t, 4, 4) == 4);
  CHECK(lca(t, 3, 4) == 1);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const RootedBinaryTree r = random_tree(1 + rng.below_int(20), rng);
    for (Node a = 0; a < r.size(); ++a)
      for (Node b = 0; b < r.size(); ++b) CHECK(lca(r, a, b) == lca_by_ancestors(r, a, b));
  }
}

TEST_CASE("lca_closure") {
  const RootedBinaryTree t = heap7();
  CHECK(lca_closure(t, std::vector<Node>{}).empty());
  CHECK(lca_closure(t, std::vector<Node>{3, 4}) == std::vector<Node>{1, 3, 4});
  SplitMix64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const RootedBinaryTree r = random_tree(1 + rng.below_int(25), rng);
    std::vector<Node> z;
    for (Node x = 0; x < r.size(); ++x)
      if (rng.below_int(4) == 0) z.push_back(x);
    const auto cl = lca_closure(r, z);
    CHECK(cl == closure_oracle(r, z));
    CHECK(lca_closure(r, cl) == cl);
    if (!z.empty()) CHECK(cl.size() <= 2 * z.size() - 1);
  }
}

TEST_CASE("components_minus") {
  const RootedBinaryTree three = RootedBinaryTree::from_children(0, {1, std::nullopt, std::nullopt}, {2, std::nullopt, std::nullopt});
  const auto whole = components_minus(three, std::vector<Node>{});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].nodes == std::vector<Node>{0, 1, 2});
  CHECK(whole[0].boundary.empty());
  const auto split = components_minus(three, std::vector<Node>{0});
  REQUIRE(split.size() == 2);
  CHECK(split[0] == TreeComponent{{1}, {0}});
  CHECK(split[1] == TreeComponent{{2}, {0}});
  SplitMix64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const RootedBinaryTree r = random_tree(1 + rng.below_int(30), rng);
    std::vector<Node> z;
    for (Node x = 0; x < r.size(); ++x)
      if (rng.below_int(5) == 0) z.push_back(x);
    const auto cl = lca_closure(r, z);
    std::size_t covered = cl.size();
    for (const auto& c : components_minus(r, cl)) {
      CHECK(c.boundary.size() <= 2);
      covered += c.nodes.size();
    }
    CHECK(covered == static_cast<std::size_t>(r.size()));
  }
}

TEST_CASE("phi fixed cases") {
  const RootedBinaryTree t = heap7();
  CHECK(phi(t, {std::nullopt, std::nullopt, std::nullopt}) == whole_tree(t));
  CHECK(phi(t, {4, 4, std::nullopt}) == single_node(4));
  CHECK(phi(t, {3, 4, std::nullopt}) == single_node(1));
  // (z, _, _): component of T - z holding z's left child.
  CHECK(phi(t, {1, std::nullopt, std::nullopt}).nodes == std::vector<Node>{3});
  CHECK(phi(t, {std::nullopt, std::nullopt, 2}).nodes == std::vector<Node>{6});
  // (_, z1, z2): component holding the root.
  CHECK(phi(t, {std::nullopt, 3, 4}).nodes == std::vector<Node>{0, 2, 5, 6});
  // Patterns outside the cases give the whole tree.
  CHECK(phi(t, {3, std::nullopt, 4}) == whole_tree(t));
}

TEST_CASE("phi_witness round trips") {
  const RootedBinaryTree t = heap7();
  CHECK(phi_witness(t, std::vector<Node>{}, whole_tree(t)) == NodeTriple{});
  CHECK(phi_witness(t, std::vector<Node>{5}, single_node(5)) == NodeTriple{5, 5, std::nullopt});
  SplitMix64 rng(1234);
  int checked = 0;
  while (checked < 1000) {
    const RootedBinaryTree r = random_tree(1 + rng.below_int(20), rng);
    std::vector<Node> z;
    for (Node x = 0; x < r.size(); ++x)
      if (rng.below_int(4) == 0) z.push_back(x);
    const auto cl = lca_closure(r, z);
    std::vector<Subtree> targets;
    for (Node y : cl) targets.push_back(single_node(y));
    for (const auto& c : components_minus(r, cl)) targets.push_back(Subtree{c.nodes, SubtreeKind::Component});
    for (const auto& target : targets) {
      const NodeTriple w = phi_witness(r, z, target);
      for (const auto& e : w)
        if (e) CHECK(std::binary_search(z.begin(), z.end(), *e));
      CHECK(phi(r, w) == target);
      ++checked;
    }
  }
}
