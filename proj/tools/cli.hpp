#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ballcomp/generators.hpp"
#include "ballcomp/graph.hpp"
#include "ballcomp/hypergraph.hpp"
#include "ballcomp/nlc_scheme.hpp"
#include "ballcomp/tree_decomposition.hpp"

namespace ballcomp::cli {

enum class Scheme { Tw, Cw, Vc, LocalTw, Degeneracy };

Scheme parse_scheme(const std::string& name);
std::string scheme_name(Scheme s);

/// A graph with whatever certificate its scheme needs.
struct Bundle {
  Scheme scheme = Scheme::Tw;
  Graph graph;
  std::optional<TreeDecomposition> decomposition;
  std::optional<NlcDecomposition> nlc;
  std::optional<VertexSet> cover;
  /// Width parameter handed to the scheme (tw, cw); 0 means "from the certificate".
  int t = 0;
  /// Radius bound (localtw).
  int r = 1;
};

/// Deterministic instance for (scheme, n, t, r, seed).
Bundle generate_bundle(Scheme scheme, int n, int t, int r, std::uint64_t seed);

/// A sample realised by the scheme's hypothesis class, with its witness.
GeneratedSample generate_sample(const Bundle& b, std::uint64_t seed);

using Code = std::variant<ArrayCode, LabeledCode>;

/// Compressor and reconstructor bound to one bundle.
class Runner {
 public:
  explicit Runner(const Bundle& b);
  ~Runner();
  Runner(Runner&&) noexcept;

  Code compress(const Sample& s) const;
  Hypothesis reconstruct(const Code& c) const;
  /// Empty when the code meets the size bound, otherwise a description.
  std::string size_violation(const Code& c) const;
  /// Empty when h is a hyperedge of the scheme's class or the scheme is improper.
  std::string properness_violation(const Hypothesis& h) const;
  bool proper() const;
  /// The t reported in CSV rows (achieved width for localtw).
  int reported_t() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct VerifyRow {
  std::string scheme;
  int n = 0;
  int t = 0;
  int trials = 0;
  int failures = 0;
  std::size_t max_code_len = 0;
  long long wall_ms = 0;
};

/// Round trip, properness and size checks. With `fixed`, every trial draws a
/// new sample on that bundle; otherwise trial i generates instance seed + i.
VerifyRow verify(Scheme scheme, const std::optional<Bundle>& fixed, int n, int t, int r, int trials, std::uint64_t seed,
                 std::ostream& log);

/// Exit codes: 0 success, 1 verification failures, 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ballcomp::cli
