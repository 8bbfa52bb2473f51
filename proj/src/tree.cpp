#include "ballcomp/tree.hpp"

#include <algorithm>
#include <string>

#include "ballcomp/errors.hpp"

namespace ballcomp {

namespace {

constexpr int kNone = -1;

std::optional<Node> opt(int x) { return x == kNone ? std::nullopt : std::optional<Node>(x); }

bool in_sorted(std::span<const Node> s, Node x) { return std::binary_search(s.begin(), s.end(), x); }

std::vector<Node> sorted_copy(std::span<const Node> s) {
  std::vector<Node> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RootedBinaryTree::RootedBinaryTree() : parent_{kNone}, left_{kNone}, right_{kNone}, depth_{0} {}

RootedBinaryTree RootedBinaryTree::from_children(Node root, std::vector<std::optional<Node>> left,
                                                 std::vector<std::optional<Node>> right) {
  const int n = static_cast<int>(left.size());
  if (n == 0) throw InputError("a rooted tree needs at least one node");
  if (static_cast<int>(right.size()) != n) throw InputError("left/right child tables differ in size");
  if (root < 0 || root >= n) throw InputError("root " + std::to_string(root) + " out of range");

  RootedBinaryTree t;
  t.root_ = root;
  t.parent_.assign(n, kNone);
  t.left_.assign(n, kNone);
  t.right_.assign(n, kNone);
  t.depth_.assign(n, kNone);
  auto attach = [&](Node p, const std::optional<Node>& c, std::vector<int>& slot) {
    if (!c) return;
    if (*c < 0 || *c >= n) throw InputError("child " + std::to_string(*c) + " out of range");
    if (*c == root) throw InputError("the root cannot be a child");
    if (t.parent_[*c] != kNone) throw InputError("node " + std::to_string(*c) + " has two parents");
    t.parent_[*c] = p;
    slot[p] = *c;
  };
  for (Node x = 0; x < n; ++x) {
    attach(x, left[x], t.left_);
    attach(x, right[x], t.right_);
  }
  // Depths by traversal from the root; anything unreached is disconnected or on a cycle.
  std::vector<Node> stack{root};
  t.depth_[root] = 0;
  int reached = 0;
  while (!stack.empty()) {
    const Node x = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : {t.left_[x], t.right_[x]}) {
      if (c == kNone) continue;
      t.depth_[c] = t.depth_[x] + 1;
      stack.push_back(c);
    }
  }
  if (reached != n) throw InputError("child slots do not form a single tree");
  return t;
}

void RootedBinaryTree::check(Node x) const {
  if (!has_node(x)) throw InputError("tree node " + std::to_string(x) + " out of range");
}

std::optional<Node> RootedBinaryTree::parent(Node x) const {
  check(x);
  return opt(parent_[x]);
}

std::optional<Node> RootedBinaryTree::left(Node x) const {
  check(x);
  return opt(left_[x]);
}

std::optional<Node> RootedBinaryTree::right(Node x) const {
  check(x);
  return opt(right_[x]);
}

std::vector<Node> RootedBinaryTree::children(Node x) const {
  check(x);
  std::vector<Node> out;
  if (left_[x] != kNone) out.push_back(left_[x]);
  if (right_[x] != kNone) out.push_back(right_[x]);
  return out;
}

std::vector<Node> RootedBinaryTree::neighbors(Node x) const {
  auto out = children(x);
  if (parent_[x] != kNone) out.push_back(parent_[x]);
  return out;
}

int RootedBinaryTree::depth(Node x) const {
  check(x);
  return depth_[x];
}

bool RootedBinaryTree::is_ancestor(Node ancestor, Node x) const {
  check(ancestor);
  check(x);
  while (depth_[x] > depth_[ancestor]) x = parent_[x];
  return x == ancestor;
}

std::vector<Node> RootedBinaryTree::subtree(Node x) const {
  check(x);
  std::vector<Node> out;
  std::vector<Node> stack{x};
  while (!stack.empty()) {
    const Node y = stack.back();
    stack.pop_back();
    out.push_back(y);
    if (left_[y] != kNone) stack.push_back(left_[y]);
    if (right_[y] != kNone) stack.push_back(right_[y]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> RootedBinaryTree::preorder() const {
  std::vector<Node> out;
  std::vector<Node> stack{root_};
  while (!stack.empty()) {
    const Node y = stack.back();
    stack.pop_back();
    out.push_back(y);
    if (right_[y] != kNone) stack.push_back(right_[y]);
    if (left_[y] != kNone) stack.push_back(left_[y]);
  }
  return out;
}

Node lca(const RootedBinaryTree& t, Node x, Node y) {
  while (t.depth(x) > t.depth(y)) x = *t.parent(x);
  while (t.depth(y) > t.depth(x)) y = *t.parent(y);
  while (x != y) {
    x = *t.parent(x);
    y = *t.parent(y);
  }
  return x;
}

std::vector<Node> lca_closure(const RootedBinaryTree& t, std::span<const Node> z) {
  const auto base = sorted_copy(z);
  std::vector<Node> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) out.push_back(lca(t, base[i], base[j]));
  }
  return sorted_copy(out);
}

TreeComponent component_containing(const RootedBinaryTree& t, std::span<const Node> w, Node x) {
  const auto removed = sorted_copy(w);
  if (in_sorted(removed, x)) throw ContractViolation("component_containing: start node is removed");
  std::vector<char> seen(t.size(), 0);
  TreeComponent comp;
  std::vector<Node> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    const Node y = stack.back();
    stack.pop_back();
    comp.nodes.push_back(y);
    for (Node nb : t.neighbors(y)) {
      if (in_sorted(removed, nb)) {
        comp.boundary.push_back(nb);
      } else if (!seen[nb]) {
        seen[nb] = 1;
        stack.push_back(nb);
      }
    }
  }
  std::sort(comp.nodes.begin(), comp.nodes.end());
  comp.boundary = sorted_copy(comp.boundary);
  return comp;
}

std::vector<TreeComponent> components_minus(const RootedBinaryTree& t, std::span<const Node> w) {
  const auto removed = sorted_copy(w);
  std::vector<char> done(t.size(), 0);
  std::vector<TreeComponent> out;
  for (Node x = 0; x < t.size(); ++x) {
    if (done[x] || in_sorted(removed, x)) continue;
    auto comp = component_containing(t, removed, x);
    for (Node y : comp.nodes) done[y] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

Subtree whole_tree(const RootedBinaryTree& t) {
  Subtree s{std::vector<Node>(t.size()), SubtreeKind::WholeTree};
  for (Node x = 0; x < t.size(); ++x) s.nodes[x] = x;
  return s;
}

Subtree single_node(Node x) { return Subtree{{x}, SubtreeKind::SingleNode}; }

namespace {

std::optional<Subtree> bordered_by_both(const RootedBinaryTree& t, Node y1, Node y2) {
  const std::vector<Node> removed = sorted_copy(std::vector<Node>{y1, y2});
  const std::vector<Node> both = removed;
  std::optional<Subtree> found;
  int matches = 0;
  for (Node nb : t.neighbors(y1)) {
    if (nb == y2) continue;
    auto comp = component_containing(t, removed, nb);
    if (comp.boundary == both) {
      ++matches;
      found = Subtree{std::move(comp.nodes), SubtreeKind::Component};
    }
  }
  if (matches != 1) return std::nullopt;
  return found;
}

}  // namespace

Subtree phi(const RootedBinaryTree& t, const NodeTriple& triple) {
  const auto& [a, b, c] = triple;
  for (const auto& e : triple) {
    if (e && !t.has_node(*e)) return whole_tree(t);
  }
  if (a && b && c) {
    const Node y1 = lca(t, *a, *b);
    const Node y2 = lca(t, *a, *c);
    if (y1 != y2 && lca(t, *b, *c) == y2) {
      if (auto comp = bordered_by_both(t, y1, y2)) return *comp;
    }
    return whole_tree(t);
  }
  if (a && b && !c) return single_node(lca(t, *a, *b));
  if (!a && b && c) {
    const Node m = lca(t, *b, *c);
    const std::vector<Node> removed{*b, *c, m};
    if (m != t.root() && *b != t.root() && *c != t.root()) {
      return Subtree{component_containing(t, removed, t.root()).nodes, SubtreeKind::Component};
    }
    return whole_tree(t);
  }
  if (a && !b && !c) {
    if (auto l = t.left(*a)) return Subtree{component_containing(t, std::vector<Node>{*a}, *l).nodes, SubtreeKind::Component};
    return whole_tree(t);
  }
  if (!a && !b && c) {
    if (auto r = t.right(*c)) return Subtree{component_containing(t, std::vector<Node>{*c}, *r).nodes, SubtreeKind::Component};
    return whole_tree(t);
  }
  return whole_tree(t);
}

namespace {

std::optional<std::pair<Node, Node>> pair_with_lca(const RootedBinaryTree& t, std::span<const Node> z, Node target) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i; j < z.size(); ++j) {
      if (lca(t, z[i], z[j]) == target) return std::pair{z[i], z[j]};
    }
  }
  return std::nullopt;
}

std::optional<NodeTriple> constructive_witness(const RootedBinaryTree& t, std::span<const Node> z,
                                               const std::vector<Node>& closure, const Subtree& target) {
  if (target.nodes.size() == 1 && in_sorted(closure, target.nodes[0])) {
    if (auto p = pair_with_lca(t, z, target.nodes[0])) return NodeTriple{p->first, p->second, std::nullopt};
    return std::nullopt;
  }
  if (target.nodes.empty()) return std::nullopt;
  const auto comp = component_containing(t, closure, target.nodes[0]);
  if (comp.nodes != target.nodes) return std::nullopt;
  const auto& boundary = comp.boundary;
  if (boundary.empty()) return NodeTriple{};
  if (boundary.size() == 1) {
    const Node y = boundary[0];
    if (in_sorted(comp.nodes, t.root())) {
      if (auto p = pair_with_lca(t, z, y)) return NodeTriple{std::nullopt, p->first, p->second};
      return std::nullopt;
    }
    if (auto l = t.left(y); l && in_sorted(comp.nodes, *l)) return NodeTriple{y, std::nullopt, std::nullopt};
    return NodeTriple{std::nullopt, std::nullopt, y};
  }
  if (boundary.size() == 2) {
    Node low = boundary[0];
    Node high = boundary[1];
    if (t.depth(low) < t.depth(high)) std::swap(low, high);
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = i; j < z.size(); ++j) {
        if (lca(t, z[i], z[j]) != low) continue;
        for (Node z3 : z) {
          if (lca(t, z[i], z3) == high && lca(t, z[j], z3) == high) return NodeTriple{z[i], z[j], z3};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NodeTriple phi_witness(const RootedBinaryTree& t, std::span<const Node> z, const Subtree& target) {
  const auto base = sorted_copy(z);
  const auto closure = lca_closure(t, base);
  if (auto w = constructive_witness(t, base, closure, target); w && phi(t, *w) == target) return *w;

  std::vector<std::optional<Node>> symbols{std::nullopt};
  for (Node x : base) symbols.emplace_back(x);
  for (const auto& a : symbols) {
    for (const auto& b : symbols) {
      for (const auto& c : symbols) {
        const NodeTriple triple{a, b, c};
        if (phi(t, triple) == target) return triple;
      }
    }
  }
  throw ContractViolation("phi_witness: no triple over Z encodes the target subtree");
}

}  // namespace ballcomp
