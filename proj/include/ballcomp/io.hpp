#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"
#include "ballcomp/nlc_scheme.hpp"
#include "ballcomp/tree_decomposition.hpp"

// Text formats. Vertex and node ids are 1-indexed in files and 0-indexed in
// memory. Lines starting with 'c' are comments; blank lines are ignored.
// Every parser throws ParseError carrying the source name and line number.

namespace ballcomp {

/// "p <n> <m>" (a PACE "p tw <n> <m>" header is also accepted), then one
/// "u v" line per edge.
Graph parse_graph(std::istream& in, const std::string& source);
void render_graph(std::ostream& out, const Graph& g);

/// PACE td lines ("s td <bags> <width+1> <n>", "b <id> <vertices>", "<i> <j>")
/// plus optional "r <root>" and "o <node> <left|_> <right|_>" lines. Without
/// "o" lines the tree is binarised from the root (default: bag 1).
struct ParsedTreeDecomposition {
  RawTreeDecomposition raw;
  std::optional<Node> root;
  /// Child order per node; present when the file had "o" lines.
  std::optional<std::pair<std::vector<std::optional<Node>>, std::vector<std::optional<Node>>>> children;
};
ParsedTreeDecomposition parse_tree_decomposition(std::istream& in, const std::string& source);
/// Validates against g; throws InputError on any axiom failure.
TreeDecomposition to_decomposition(const Graph& g, const ParsedTreeDecomposition& parsed);
void render_tree_decomposition(std::ostream& out, const TreeDecomposition& d, int num_vertices);

/// "nlc <n> <labels> <nodes> <root>" header, then sections:
///   NODES  "<node> <left|_> <right|_>"   one line per node
///   ALPHA  "<vertex> <leaf> <label>"      one line per vertex
///   BETA   "<node> <image of label 1> ... <image of label k>"   every non-root node
///   REL    "<node> <a> <b> <a> <b> ..."  internal nodes with a non-empty relation
NlcDecomposition parse_nlc(std::istream& in, const std::string& source, int* num_vertices = nullptr);
void render_nlc(std::ostream& out, const NlcDecomposition& d, int num_vertices);

/// "vc <k>" then the k cover vertices, whitespace separated.
VertexSet parse_cover(std::istream& in, const std::string& source);
void render_cover(std::ostream& out, const VertexSet& cover);

/// "X+: <vertices>" and "X-: <vertices>" lines.
Sample parse_sample(std::istream& in, const std::string& source);
void render_sample(std::ostream& out, const Sample& s);

/// One line of tokens, "_" for a blank entry.
ArrayCode parse_array_code(std::istream& in, const std::string& source);
void render_array_code(std::ostream& out, const ArrayCode& code);

/// "Y+:", "Y-:" vertex lines and a "bits:" line of '0'/'1' characters, most significant first.
LabeledCode parse_labeled_code(std::istream& in, const std::string& source);
void render_labeled_code(std::ostream& out, const LabeledCode& code);

/// "center radius" and the vertex set on the next line, or "empty".
void render_hypothesis(std::ostream& out, const Hypothesis& h);

/// "c ..." comment line.
void render_ball(std::ostream& out, const Ball& b);

}  // namespace ballcomp
