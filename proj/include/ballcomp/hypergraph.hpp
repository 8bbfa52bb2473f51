#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ballcomp/graph.hpp"

namespace ballcomp {

/// A labelled vertex set (X+, X-). Both lists are canonical VertexSets.
struct Sample {
  VertexSet positive;
  VertexSet negative;

  /// X = X+ united with X-.
  VertexSet support() const { return set_union(positive, negative); }
  bool empty() const { return positive.empty() && negative.empty(); }

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Canonicalises both sides and rejects overlapping or out-of-range vertices.
Sample make_sample(const Graph& g, std::vector<Vertex> positive, std::vector<Vertex> negative);

/// X+ inside `s` and X- disjoint from `s`.
bool realizes(const VertexSet& s, const Sample& sample);

/// The hypergraph whose hyperedges are the balls B(c, s) with -1 <= s <= radius_cap.
class BallFamily {
 public:
  explicit BallFamily(const Graph& g, ExtInt radius_cap = kInfinity);
  BallFamily(Graph&&, ExtInt = kInfinity) = delete;

  const Graph& graph() const { return *graph_; }
  ExtInt radius_cap() const { return radius_cap_; }

  /// Largest radius worth scanning: min(radius_cap, n). B(c, s) is constant for s >= n.
  int max_radius() const;

  /// True when `b` is a ball of this family (center in range, radius within the cap).
  bool admits(const Ball& b) const;

 private:
  const Graph* graph_;
  ExtInt radius_cap_;
};

/// All distinct hyperedges, sorted lexicographically. Always contains the empty set.
std::vector<VertexSet> enumerate_balls(const BallFamily& family);

bool is_hyperedge(const BallFamily& family, const VertexSet& s);

/// Some enumerated hyperedge realises the sample.
bool is_sample(const BallFamily& family, const Sample& sample);

/// The realising ball with the least center, and for it the least radius,
/// among radii -1..max_radius(). nullopt when the sample is not realisable.
std::optional<Ball> least_center_ball(const BallFamily& family, const Sample& sample);

/// Options for the exact dimension oracles.
struct DimensionOptions {
  /// Stop as soon as a set of this size is found; the result is then a lower bound.
  std::optional<int> stop_at;
};

/// Largest shattered set size. Exact; requires n <= 64.
int vc_dimension(const BallFamily& family, const DimensionOptions& options = {});

/// Largest 2-shattered set size (every pair is cut out exactly by some hyperedge).
/// A one-vertex universe gives 1. Exact; requires n <= 64.
int two_vc_dimension(const BallFamily& family, const DimensionOptions& options = {});

/// Largest vertex count the exact oracles accept.
inline constexpr int kMaxOracleVertices = 64;

/// One entry of an array code; nullopt is the blank symbol.
using CodeEntry = std::optional<Vertex>;

struct ArrayCode {
  std::vector<CodeEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool all_blank() const;
  /// Distinct non-blank entries.
  VertexSet vertices() const;

  friend bool operator==(const ArrayCode&, const ArrayCode&) = default;
};

ArrayCode blank_code(std::size_t length);

/// Subsample plus bitstring.
struct LabeledCode {
  VertexSet y_plus;
  VertexSet y_minus;
  std::vector<bool> bits;

  std::size_t subsample_size() const { return y_plus.size() + y_minus.size(); }
  std::size_t size() const { return subsample_size() + bits.size(); }

  friend bool operator==(const LabeledCode&, const LabeledCode&) = default;
};

/// Bits per array position in the labelled translation: ceil(log2(k + 1)).
int position_bits(std::size_t k);

/// Translates an array code to a labelled one. Each position stores the index
/// of its entry in (blank, sorted subsample...) using position_bits(k) bits,
/// most significant bit first. `is_positive` decides which side of the
/// subsample a vertex goes to.
LabeledCode array_to_labeled(const ArrayCode& code, const std::function<bool(Vertex)>& is_positive);
LabeledCode array_to_labeled(const ArrayCode& code, const Sample& labelling);

/// Inverse of array_to_labeled; throws DecodeError on malformed input.
ArrayCode labeled_to_array(const LabeledCode& code);

/// Output of a reconstructor: a vertex set, and the ball it is when it is one.
struct Hypothesis {
  VertexSet vertices;
  std::optional<Ball> ball;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

Hypothesis empty_hypothesis(const Graph& g);
Hypothesis ball_hypothesis(const Graph& g, Vertex center, ExtInt radius);

/// Fixed-width unsigned integer helpers for bitstrings, most significant bit first.
void append_bits(std::vector<bool>& bits, std::uint64_t value, int width);
std::uint64_t read_bits(const std::vector<bool>& bits, std::size_t offset, int width);

}  // namespace ballcomp
