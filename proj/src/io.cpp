#include "ballcomp/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "ballcomp/errors.hpp"

namespace ballcomp {
namespace {

// Splits the stream into non-comment lines of whitespace tokens.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens_.clear();
      for (std::string tok; ss >> tok;) tokens_.push_back(tok);
      if (tokens_.empty() || tokens_[0] == "c") continue;
      return true;
    }
    tokens_.clear();
    return false;
  }

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  const std::string& operator[](std::size_t i) const { return tokens_.at(i); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  long long integer(std::size_t i) const {
    if (i >= tokens_.size()) fail("missing field " + std::to_string(i + 1));
    const std::string& s = tokens_[i];
    long long v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) fail("expected an integer, got '" + s + "'");
    return v;
  }

  // 1-indexed id in 1..limit, returned 0-indexed.
  int id(std::size_t i, long long limit, const char* what) const {
    const long long v = integer(i);
    if (v < 1 || v > limit) fail(std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(limit));
    return static_cast<int>(v - 1);
  }

  std::optional<int> optional_id(std::size_t i, long long limit, const char* what) const {
    if (i < tokens_.size() && tokens_[i] == "_") return std::nullopt;
    return id(i, limit, what);
  }

  void expect_size(std::size_t n) const {
    if (tokens_.size() != n) fail("expected " + std::to_string(n) + " fields, got " + std::to_string(tokens_.size()));
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_ = 0;
  std::vector<std::string> tokens_;
};

// Vertices are unbounded here; the caller checks them against a graph.
constexpr long long kAnyId = 1LL << 30;

void render_ids(std::ostream& out, const std::vector<Vertex>& vs) {
  for (Vertex v : vs) out << ' ' << v + 1;
}

std::string id_or_blank(const std::optional<Node>& x) { return x ? std::to_string(*x + 1) : "_"; }

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  if (!r.next() || r[0] != "p") r.fail("expected header 'p <n> <m>'");
  const std::size_t off = r.size() == 4 ? 2 : 1;
  r.expect_size(off + 2);
  const long long n = r.integer(off), m = r.integer(off + 1);
  if (n < 0 || m < 0) r.fail("negative size in header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (r.next()) {
    r.expect_size(2);
    edges.emplace_back(r.id(0, n, "vertex"), r.id(1, n, "vertex"));
    if (edges.back().first == edges.back().second) r.fail("loop edge");
  }
  if (static_cast<long long>(edges.size()) != m) {
    r.fail("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

void render_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

ParsedTreeDecomposition parse_tree_decomposition(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  if (!r.next() || r[0] != "s" || r.size() != 5 || r[1] != "td") r.fail("expected header 's td <bags> <width+1> <n>'");
  const long long nb = r.integer(2), n = r.integer(4);
  if (nb < 1) r.fail("a decomposition needs at least one bag");
  ParsedTreeDecomposition p;
  p.raw.bags.resize(nb);
  std::vector<bool> seen(nb, false);
  std::vector<std::optional<Node>> left(nb), right(nb);
  bool ordered = false;
  while (r.next()) {
    if (r[0] == "b") {
      const Node x = r.id(1, nb, "bag");
      if (seen[x]) r.fail("bag " + std::to_string(x + 1) + " listed twice");
      seen[x] = true;
      std::vector<Vertex> vs;
      for (std::size_t i = 2; i < r.size(); ++i) vs.push_back(r.id(i, n, "vertex"));
      p.raw.bags[x] = make_vertex_set(std::move(vs));
    } else if (r[0] == "r") {
      r.expect_size(2);
      p.root = r.id(1, nb, "bag");
    } else if (r[0] == "o") {
      r.expect_size(4);
      const Node x = r.id(1, nb, "bag");
      left[x] = r.optional_id(2, nb, "bag");
      right[x] = r.optional_id(3, nb, "bag");
      ordered = true;
    } else {
      r.expect_size(2);
      p.raw.edges.emplace_back(r.id(0, nb, "bag"), r.id(1, nb, "bag"));
    }
  }
  for (long long x = 0; x < nb; ++x) {
    if (!seen[x]) r.fail("bag " + std::to_string(x + 1) + " missing");
  }
  if (ordered) p.children.emplace(std::move(left), std::move(right));
  return p;
}

TreeDecomposition to_decomposition(const Graph& g, const ParsedTreeDecomposition& p) {
  if (!p.children) return make_binary(g, p.raw, p.root.value_or(0));
  TreeDecomposition d{RootedBinaryTree::from_children(p.root.value_or(0), p.children->first, p.children->second), p.raw.bags};
  // The child order must describe the same tree as the edge lines.
  std::vector<std::pair<Node, Node>> tree_edges, listed;
  for (Node x = 0; x < d.tree.size(); ++x)
    for (Node y : d.tree.children(x)) tree_edges.emplace_back(std::min(x, y), std::max(x, y));
  for (auto [a, b] : p.raw.edges) listed.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(tree_edges.begin(), tree_edges.end());
  std::sort(listed.begin(), listed.end());
  if (tree_edges != listed) throw InputError("child order lines disagree with the tree edges");
  validate_decomposition(g, d);
  return d;
}

void render_tree_decomposition(std::ostream& out, const TreeDecomposition& d, int num_vertices) {
  out << "s td " << d.tree.size() << ' ' << d.width() + 1 << ' ' << num_vertices << '\n';
  for (Node x = 0; x < d.tree.size(); ++x) {
    out << "b " << x + 1;
    render_ids(out, d.bags[x]);
    out << '\n';
  }
  for (Node x = 0; x < d.tree.size(); ++x)
    for (Node y : d.tree.children(x)) out << x + 1 << ' ' << y + 1 << '\n';
  out << "r " << d.tree.root() + 1 << '\n';
  for (Node x = 0; x < d.tree.size(); ++x) {
    if (!d.tree.is_leaf(x)) out << "o " << x + 1 << ' ' << id_or_blank(d.tree.left(x)) << ' ' << id_or_blank(d.tree.right(x)) << '\n';
  }
}

NlcDecomposition parse_nlc(std::istream& in, const std::string& source, int* num_vertices) {
  LineReader r(in, source);
  if (!r.next() || r[0] != "nlc") r.fail("expected header 'nlc <n> <labels> <nodes> <root>'");
  r.expect_size(5);
  const long long n = r.integer(1), k = r.integer(2), nodes = r.integer(3);
  if (n < 1 || k < 1 || nodes < 1) r.fail("sizes in the header must be positive");
  const Node root = r.id(4, nodes, "node");
  NlcDecomposition d;
  d.num_labels = static_cast<int>(k);
  d.leaf_of.assign(n, -1);
  d.alpha.assign(n, -1);
  d.beta.assign(nodes, {});
  d.relation.assign(nodes, {});
  std::vector<std::optional<Node>> left(nodes), right(nodes);
  std::string section;
  while (r.next()) {
    if (r.size() == 1 && (r[0] == "NODES" || r[0] == "ALPHA" || r[0] == "BETA" || r[0] == "REL")) {
      section = r[0];
    } else if (section == "NODES") {
      r.expect_size(3);
      const Node x = r.id(0, nodes, "node");
      left[x] = r.optional_id(1, nodes, "node");
      right[x] = r.optional_id(2, nodes, "node");
    } else if (section == "ALPHA") {
      r.expect_size(3);
      const Vertex v = r.id(0, n, "vertex");
      d.leaf_of[v] = r.id(1, nodes, "node");
      d.alpha[v] = r.id(2, k, "label");
    } else if (section == "BETA") {
      r.expect_size(static_cast<std::size_t>(k) + 1);
      const Node x = r.id(0, nodes, "node");
      d.beta[x].clear();
      for (long long i = 1; i <= k; ++i) d.beta[x].push_back(r.id(i, k, "label"));
    } else if (section == "REL") {
      if (r.size() % 2 == 0) r.fail("relation lines hold a node and label pairs");
      const Node x = r.id(0, nodes, "node");
      for (std::size_t i = 1; i + 1 < r.size(); i += 2) d.relation[x].emplace_back(r.id(i, k, "label"), r.id(i + 1, k, "label"));
    } else {
      r.fail("line outside a NODES/ALPHA/BETA/REL section");
    }
  }
  for (long long v = 0; v < n; ++v) {
    if (d.leaf_of[v] < 0) r.fail("vertex " + std::to_string(v + 1) + " has no ALPHA line");
  }
  d.tree = RootedBinaryTree::from_children(root, left, right);
  if (num_vertices) *num_vertices = static_cast<int>(n);
  return d;
}

void render_nlc(std::ostream& out, const NlcDecomposition& d, int num_vertices) {
  out << "nlc " << num_vertices << ' ' << d.num_labels << ' ' << d.tree.size() << ' ' << d.tree.root() + 1 << '\n';
  out << "NODES\n";
  for (Node x = 0; x < d.tree.size(); ++x) {
    out << x + 1 << ' ' << id_or_blank(d.tree.left(x)) << ' ' << id_or_blank(d.tree.right(x)) << '\n';
  }
  out << "ALPHA\n";
  for (Vertex v = 0; v < num_vertices; ++v) out << v + 1 << ' ' << d.leaf_of[v] + 1 << ' ' << d.alpha[v] + 1 << '\n';
  out << "BETA\n";
  for (Node x = 0; x < d.tree.size(); ++x) {
    if (d.beta[x].empty()) continue;
    out << x + 1;
    render_ids(out, d.beta[x]);
    out << '\n';
  }
  out << "REL\n";
  for (Node x = 0; x < d.tree.size(); ++x) {
    if (d.relation[x].empty()) continue;
    out << x + 1;
    for (auto [a, b] : d.relation[x]) out << ' ' << a + 1 << ' ' << b + 1;
    out << '\n';
  }
}

VertexSet parse_cover(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  if (!r.next() || r[0] != "vc") r.fail("expected header 'vc <k>'");
  r.expect_size(2);
  const long long k = r.integer(1);
  std::vector<Vertex> vs;
  while (r.next()) {
    for (std::size_t i = 0; i < r.size(); ++i) vs.push_back(r.id(i, kAnyId, "vertex"));
  }
  if (static_cast<long long>(vs.size()) != k) r.fail("header announces " + std::to_string(k) + " cover vertices, found " + std::to_string(vs.size()));
  return make_vertex_set(std::move(vs));
}

void render_cover(std::ostream& out, const VertexSet& cover) {
  out << "vc " << cover.size() << '\n';
  for (std::size_t i = 0; i < cover.size(); ++i) out << (i ? " " : "") << cover[i] + 1;
  if (!cover.empty()) out << '\n';
}

namespace {

// Reads "<tag>: ids..." lines into the matching slot.
void read_tagged(LineReader& r, const std::vector<std::pair<std::string, VertexSet*>>& slots) {
  std::vector<bool> seen(slots.size(), false);
  while (r.next()) {
    std::size_t k = 0;
    while (k < slots.size() && slots[k].first != r[0]) ++k;
    if (k == slots.size()) r.fail("unexpected line '" + r[0] + "'");
    if (seen[k]) r.fail("duplicate '" + r[0] + "' line");
    seen[k] = true;
    std::vector<Vertex> vs;
    for (std::size_t i = 1; i < r.size(); ++i) vs.push_back(r.id(i, kAnyId, "vertex"));
    *slots[k].second = make_vertex_set(std::move(vs));
  }
}

void render_tagged(std::ostream& out, const char* tag, const VertexSet& vs) {
  out << tag;
  render_ids(out, vs);
  out << '\n';
}

}  // namespace

Sample parse_sample(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  Sample s;
  read_tagged(r, {{"X+:", &s.positive}, {"X-:", &s.negative}});
  return s;
}

void render_sample(std::ostream& out, const Sample& s) {
  render_tagged(out, "X+:", s.positive);
  render_tagged(out, "X-:", s.negative);
}

ArrayCode parse_array_code(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  if (!r.next()) r.fail("empty code file");
  ArrayCode code;
  for (std::size_t i = 0; i < r.size(); ++i) code.entries.push_back(r.optional_id(i, kAnyId, "vertex"));
  if (r.next()) r.fail("array codes are a single line");
  return code;
}

void render_array_code(std::ostream& out, const ArrayCode& code) {
  for (std::size_t i = 0; i < code.size(); ++i) out << (i ? " " : "") << id_or_blank(code.entries[i]);
  out << '\n';
}

LabeledCode parse_labeled_code(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  LabeledCode code;
  std::vector<bool> seen(3, false);
  while (r.next()) {
    int k = r[0] == "Y+:" ? 0 : r[0] == "Y-:" ? 1 : r[0] == "bits:" ? 2 : -1;
    if (k < 0) r.fail("unexpected line '" + r[0] + "'");
    if (seen[k]) r.fail("duplicate '" + r[0] + "' line");
    seen[k] = true;
    if (k == 2) {
      if (r.size() > 2) r.fail("bits are one token of 0/1 characters");
      if (r.size() == 2) {
        for (char ch : r[1]) {
          if (ch != '0' && ch != '1') r.fail("bits must be 0 or 1");
          code.bits.push_back(ch == '1');
        }
      }
      continue;
    }
    std::vector<Vertex> vs;
    for (std::size_t i = 1; i < r.size(); ++i) vs.push_back(r.id(i, kAnyId, "vertex"));
    (k == 0 ? code.y_plus : code.y_minus) = make_vertex_set(std::move(vs));
  }
  return code;
}

void render_labeled_code(std::ostream& out, const LabeledCode& code) {
  render_tagged(out, "Y+:", code.y_plus);
  render_tagged(out, "Y-:", code.y_minus);
  out << "bits:";
  if (!code.bits.empty()) out << ' ';
  for (bool b : code.bits) out << (b ? '1' : '0');
  out << '\n';
}

void render_hypothesis(std::ostream& out, const Hypothesis& h) {
  if (h.vertices.empty()) {
    out << "empty\n";
    return;
  }
  if (h.ball) out << h.ball->center + 1 << ' ' << h.ball->radius << '\n';
  for (std::size_t i = 0; i < h.vertices.size(); ++i) out << (i ? " " : "") << h.vertices[i] + 1;
  out << '\n';
}

void render_ball(std::ostream& out, const Ball& b) { out << "c witness " << b.center + 1 << ' ' << b.radius << '\n'; }

}  // namespace ballcomp
