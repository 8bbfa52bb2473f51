#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace ballcomp {

using Node = int;

/// Rooted tree in which every node has an optional left and an optional right child.
class RootedBinaryTree {
 public:
  /// Single node tree.
  RootedBinaryTree();

  /// Builds a tree from child slots; throws InputError unless the slots form
  /// one tree rooted at `root` covering every node exactly once.
  static RootedBinaryTree from_children(Node root, std::vector<std::optional<Node>> left,
                                        std::vector<std::optional<Node>> right);

  int size() const { return static_cast<int>(parent_.size()); }
  Node root() const { return root_; }
  bool has_node(Node x) const { return x >= 0 && x < size(); }

  std::optional<Node> parent(Node x) const;
  std::optional<Node> left(Node x) const;
  std::optional<Node> right(Node x) const;
  /// Present children, left first.
  std::vector<Node> children(Node x) const;
  /// Parent and children.
  std::vector<Node> neighbors(Node x) const;
  int depth(Node x) const;
  bool is_leaf(Node x) const { return children(x).empty(); }

  /// True when `ancestor` lies on the path from the root to `x` (inclusive).
  bool is_ancestor(Node ancestor, Node x) const;

  /// Nodes of the subtree rooted at x, sorted.
  std::vector<Node> subtree(Node x) const;

  /// Nodes in preorder (node, left subtree, right subtree).
  std::vector<Node> preorder() const;

  friend bool operator==(const RootedBinaryTree&, const RootedBinaryTree&) = default;

 private:
  void check(Node x) const;

  Node root_ = 0;
  std::vector<int> parent_;
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<int> depth_;
};

Node lca(const RootedBinaryTree& t, Node x, Node y);

/// {lca(x, y) : x, y in z}, sorted.
std::vector<Node> lca_closure(const RootedBinaryTree& t, std::span<const Node> z);

/// A connected piece of T - W together with its neighbours in W.
struct TreeComponent {
  std::vector<Node> nodes;
  std::vector<Node> boundary;

  friend bool operator==(const TreeComponent&, const TreeComponent&) = default;
};

/// All components of T - W, ordered by smallest node.
std::vector<TreeComponent> components_minus(const RootedBinaryTree& t, std::span<const Node> w);

/// Component of T - W containing `x` (x must not be in W).
TreeComponent component_containing(const RootedBinaryTree& t, std::span<const Node> w, Node x);

enum class SubtreeKind { WholeTree, SingleNode, Component };

/// A connected node set of a tree. Equality compares node sets only.
struct Subtree {
  std::vector<Node> nodes;
  SubtreeKind kind = SubtreeKind::Component;

  friend bool operator==(const Subtree& a, const Subtree& b) { return a.nodes == b.nodes; }
};

Subtree whole_tree(const RootedBinaryTree& t);
Subtree single_node(Node x);

/// Triple over nodes and the blank symbol (nullopt).
using NodeTriple = std::array<std::optional<Node>, 3>;

/// The subtree-encoding map. Total and deterministic. Cases, first match wins:
///  (z1, z2, z3): y1 = lca(z1, z2), y2 = lca(z1, z3) = lca(z2, z3), y1 != y2, and
///                T - {y1, y2} has exactly one component bordered by both -> it;
///  (z1, z2, _) : the single node lca(z1, z2);
///  (_, z1, z2) : the component of T - {z1, z2, lca(z1, z2)} containing the root,
///                when the root is not among those three;
///  (z, _, _)   : the component of T - z containing z's left child, if any;
///  (_, _, z)   : the component of T - z containing z's right child, if any;
///  otherwise the whole tree.
Subtree phi(const RootedBinaryTree& t, const NodeTriple& triple);

/// A triple over Z and blank that phi maps to `target`, where target is a
/// component of T - lca_closure(Z) or a single node of lca_closure(Z). Built
/// constructively, falling back to the lexicographically least triple (blank
/// first, then ascending nodes). Throws ContractViolation if none exists.
NodeTriple phi_witness(const RootedBinaryTree& t, std::span<const Node> z, const Subtree& target);

}  // namespace ballcomp
