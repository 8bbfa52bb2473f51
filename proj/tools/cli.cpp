#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ballcomp/errors.hpp"
#include "ballcomp/io.hpp"
#include "ballcomp/nlc_scheme.hpp"
#include "ballcomp/radius_schemes.hpp"
#include "ballcomp/tw_scheme.hpp"
#include "ballcomp/vc_scheme.hpp"

namespace ballcomp::cli {

namespace fs = std::filesystem;

Scheme parse_scheme(const std::string& name) {
  if (name == "tw") return Scheme::Tw;
  if (name == "cw") return Scheme::Cw;
  if (name == "vc") return Scheme::Vc;
  if (name == "localtw") return Scheme::LocalTw;
  if (name == "degeneracy") return Scheme::Degeneracy;
  throw InputError("unknown scheme '" + name + "' (tw, cw, vc, localtw, degeneracy)");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Tw: return "tw";
    case Scheme::Cw: return "cw";
    case Scheme::Vc: return "vc";
    case Scheme::LocalTw: return "localtw";
    case Scheme::Degeneracy: return "degeneracy";
  }
  return "?";
}

namespace {

int grid_side(int n) { return std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))))); }

}  // namespace

Bundle generate_bundle(Scheme scheme, int n, int t, int r, std::uint64_t seed) {
  if (n < 1) throw InputError("--n must be at least 1");
  if (t < 0) throw InputError("--t must be non-negative");
  if (r < 0) throw InputError("--r must be non-negative");
  Bundle b;
  b.scheme = scheme;
  b.r = r;
  switch (scheme) {
    case Scheme::Tw: {
      if (t < 1) throw InputError("tw instances need --t >= 1");
      TwInstance inst = gen_partial_ktree(n, t, 700, seed);
      b.graph = std::move(inst.graph);
      b.decomposition = std::move(inst.decomposition);
      b.t = t;
      break;
    }
    case Scheme::Cw: {
      if (t < 1) throw InputError("cw instances need --t >= 1");
      NlcInstance inst = gen_nlc_graph(n, t, seed);
      b.graph = std::move(inst.graph);
      b.nlc = std::move(inst.decomposition);
      b.t = t;
      break;
    }
    case Scheme::Vc: {
      VcInstance inst = gen_vc_graph(n, t, seed);
      b.graph = std::move(inst.graph);
      b.cover = std::move(inst.cover);
      break;
    }
    case Scheme::LocalTw: {
      const int side = grid_side(n);
      b.graph = gen_grid(side, side);
      break;
    }
    case Scheme::Degeneracy:
      b.graph = gen_degenerate_graph(n, t, seed);
      break;
  }
  return b;
}

GeneratedSample generate_sample(const Bundle& b, std::uint64_t seed) {
  switch (b.scheme) {
    case Scheme::LocalTw:
      return gen_sample(BallFamily(b.graph, b.r), seed);
    case Scheme::Degeneracy: {
      SplitMix64 rng(seed ^ 0xD6E8FEB86659FD93ULL);
      return gen_sample_for_ball(b.graph, Ball{rng.below_int(b.graph.num_vertices()), 1}, seed);
    }
    default:
      return gen_sample(BallFamily(b.graph), seed);
  }
}

struct Runner::Impl {
  Scheme scheme;
  Graph graph;
  int r = 0;
  std::optional<TwContext> tw;
  std::optional<CwContext> cw;
  std::optional<VcContext> vc;
  std::optional<LocalTwContext> local;
  std::optional<DegeneracyContext> degeneracy;
};

Runner::Runner(const Bundle& b) : impl_(std::make_unique<Impl>()) {
  Impl& m = *impl_;
  m.scheme = b.scheme;
  m.graph = b.graph;
  m.r = b.r;
  switch (b.scheme) {
    case Scheme::Tw:
      if (!b.decomposition) throw InputError("the tw scheme needs a tree decomposition certificate");
      m.tw.emplace(b.graph, *b.decomposition, std::max(b.t, b.decomposition->width()));
      break;
    case Scheme::Cw:
      if (!b.nlc) throw InputError("the cw scheme needs an NLC decomposition certificate");
      m.cw.emplace(b.graph, *b.nlc, std::max(b.t, b.nlc->num_labels));
      break;
    case Scheme::Vc:
      if (!b.cover) throw InputError("the vc scheme needs a vertex cover certificate");
      m.vc.emplace(b.graph, *b.cover);
      break;
    case Scheme::LocalTw:
      m.local.emplace(b.graph, b.r, b.decomposition);
      break;
    case Scheme::Degeneracy:
      m.degeneracy.emplace(b.graph);
      break;
  }
}

Runner::~Runner() = default;
Runner::Runner(Runner&&) noexcept = default;

Code Runner::compress(const Sample& s) const {
  const Impl& m = *impl_;
  switch (m.scheme) {
    case Scheme::Tw: return compress_tw(*m.tw, s);
    case Scheme::Cw: return compress_cw(*m.cw, s);
    case Scheme::Vc: return compress_vc(*m.vc, s);
    case Scheme::LocalTw: return compress_local_tw(*m.local, s);
    case Scheme::Degeneracy: return compress_degeneracy(*m.degeneracy, s);
  }
  throw ContractViolation("unhandled scheme");
}

namespace {

const ArrayCode& as_array(const Code& c) {
  if (const auto* a = std::get_if<ArrayCode>(&c)) return *a;
  throw InputError("this scheme uses array codes");
}

const LabeledCode& as_labeled(const Code& c) {
  if (const auto* l = std::get_if<LabeledCode>(&c)) return *l;
  throw InputError("this scheme uses labelled codes");
}

std::size_t code_size(const Code& c) {
  return std::visit([](const auto& x) { return x.size(); }, c);
}

}  // namespace

Hypothesis Runner::reconstruct(const Code& c) const {
  const Impl& m = *impl_;
  switch (m.scheme) {
    case Scheme::Tw: return reconstruct_tw(*m.tw, as_array(c));
    case Scheme::Cw: return reconstruct_cw(*m.cw, as_array(c));
    case Scheme::Vc: return reconstruct_vc(*m.vc, as_labeled(c));
    case Scheme::LocalTw: return reconstruct_local_tw(*m.local, as_array(c));
    case Scheme::Degeneracy: return reconstruct_degeneracy(*m.degeneracy, as_labeled(c));
  }
  throw ContractViolation("unhandled scheme");
}

std::string Runner::size_violation(const Code& c) const {
  const Impl& m = *impl_;
  std::ostringstream why;
  const std::size_t size = code_size(c);
  switch (m.scheme) {
    case Scheme::Tw:
      if (size != m.tw->code_length()) why << "code length " << size << " != 4t+7 = " << m.tw->code_length();
      break;
    case Scheme::Cw:
      if (size != m.cw->code_length()) why << "code length " << size << " != 4t+3 = " << m.cw->code_length();
      break;
    case Scheme::Vc: {
      const LabeledCode& l = as_labeled(c);
      if (l.subsample_size() > 2) why << "subsample of size " << l.subsample_size() << " > 2";
      if (l.bits.size() != m.vc->bit_length()) why << "bit count " << l.bits.size() << " != t+2 = " << m.vc->bit_length();
      break;
    }
    case Scheme::LocalTw:
      if (size != m.local->code_length()) why << "code length " << size << " != 4w+8 = " << m.local->code_length();
      break;
    case Scheme::Degeneracy: {
      const int t = std::max(m.degeneracy->t(), 1);
      const std::size_t bound = static_cast<std::size_t>(t + position_bits(t) + 1);
      if (size > bound) why << "size " << size << " > t+ceil(log(t+1))+1 = " << bound;
      break;
    }
  }
  return why.str();
}

std::string Runner::properness_violation(const Hypothesis& h) const {
  const Impl& m = *impl_;
  if (!proper() || h.vertices.empty()) return {};
  if (!h.ball) return "output is not labelled as a ball";
  if (ball(m.graph, *h.ball) != h.vertices) return "output differs from the ball it names";
  if (m.scheme == Scheme::LocalTw && h.ball->radius > m.r) return "radius exceeds --r";
  return {};
}

bool Runner::proper() const { return impl_->scheme != Scheme::Degeneracy; }

int Runner::reported_t() const {
  const Impl& m = *impl_;
  switch (m.scheme) {
    case Scheme::Tw: return m.tw->t();
    case Scheme::Cw: return m.cw->t();
    case Scheme::Vc: return m.vc->t();
    case Scheme::LocalTw: return m.local->max_width();
    case Scheme::Degeneracy: return m.degeneracy->t();
  }
  return 0;
}

VerifyRow verify(Scheme scheme, const std::optional<Bundle>& fixed, int n, int t, int r, int trials, std::uint64_t seed,
                 std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  VerifyRow row;
  row.scheme = scheme_name(scheme);
  row.trials = trials;
  std::optional<Runner> fixed_runner;
  if (fixed) fixed_runner.emplace(*fixed);
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(i);
    std::string failure;
    try {
      std::optional<Bundle> generated;
      std::optional<Runner> own;
      if (!fixed) {
        generated = generate_bundle(scheme, n, t, r, trial_seed);
        own.emplace(*generated);
      }
      const Bundle& b = fixed ? *fixed : *generated;
      const Runner& runner = fixed ? *fixed_runner : *own;
      row.n = std::max(row.n, b.graph.num_vertices());
      row.t = std::max(row.t, runner.reported_t());
      const GeneratedSample gs = generate_sample(b, trial_seed);
      const Code code = runner.compress(gs.sample);
      row.max_code_len = std::max(row.max_code_len, code_size(code));
      const Hypothesis h = runner.reconstruct(code);
      if (!realizes(h.vertices, gs.sample)) failure = "reconstruction does not realise the sample";
      if (failure.empty()) failure = runner.size_violation(code);
      if (failure.empty()) failure = runner.properness_violation(h);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      ++row.failures;
      log << "trial " << i << " (seed " << trial_seed << "): " << failure << '\n';
    }
  }
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

namespace {

constexpr const char* kCsvHeader = "scheme,n,t,trials,failures,max_code_len,wall_ms";

void print_row(std::ostream& out, const VerifyRow& row, const std::string& format) {
  if (format == "csv") {
    out << row.scheme << ',' << row.n << ',' << row.t << ',' << row.trials << ',' << row.failures << ','
        << row.max_code_len << ',' << row.wall_ms << '\n';
  } else {
    out << "scheme " << row.scheme << ": n=" << row.n << " t=" << row.t << " trials=" << row.trials
        << " failures=" << row.failures << " max_code_len=" << row.max_code_len << " wall_ms=" << row.wall_ms << '\n';
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

template <class Parse>
auto read_file(const std::string& path, Parse parse) {
  std::ifstream in = open_input(path);
  return parse(in, path);
}

// First token of the first non-comment line.
std::string header_of(const std::string& path) {
  std::ifstream in = open_input(path);
  for (std::string line; std::getline(in, line);) {
    std::istringstream ss(line);
    std::string tok;
    if (ss >> tok && tok != "c") return tok;
  }
  return {};
}

struct BundleFlags {
  std::string scheme = "tw";
  std::string graph;
  std::string cert;
  int t = 0;
  int r = 1;

  void add_to(CLI::App& app) {
    app.add_option("--scheme", scheme, "tw, cw, vc, localtw or degeneracy")->required();
    app.add_option("--graph", graph, "graph file")->required();
    app.add_option("--cert", cert, "certificate: tree decomposition, NLC decomposition or vertex cover");
    app.add_option("--t", t, "width parameter (default: from the certificate)");
    app.add_option("--r", r, "radius bound for localtw");
  }

  Bundle load() const {
    Bundle b;
    b.scheme = parse_scheme(scheme);
    b.graph = read_file(graph, parse_graph);
    b.t = t;
    b.r = r;
    const char* wanted = b.scheme == Scheme::Tw ? "s" : b.scheme == Scheme::Cw ? "nlc" : b.scheme == Scheme::Vc ? "vc" : nullptr;
    if (cert.empty()) {
      if (wanted) throw InputError("scheme " + scheme + " needs --cert");
      return b;
    }
    const std::string kind = header_of(cert);
    const bool optional_td = b.scheme == Scheme::LocalTw && kind == "s";
    if (!optional_td && (!wanted || kind != wanted)) {
      throw InputError("certificate '" + cert + "' (header '" + kind + "') does not match scheme " + scheme);
    }
    if (kind == "s") {
      b.decomposition = to_decomposition(b.graph, read_file(cert, parse_tree_decomposition));
    } else if (kind == "nlc") {
      int n = 0;
      b.nlc = read_file(cert, [&](std::istream& in, const std::string& src) { return parse_nlc(in, src, &n); });
      if (n != b.graph.num_vertices()) throw InputError("NLC decomposition covers " + std::to_string(n) + " vertices, graph has " + std::to_string(b.graph.num_vertices()));
    } else {
      b.cover = read_file(cert, parse_cover);
      check_vertices(b.graph, *b.cover);
    }
    return b;
  }
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path.string() + "'");
  f << text;
}

bool uses_labeled_codes(Scheme s) { return s == Scheme::Vc || s == Scheme::Degeneracy; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sample compression schemes for balls in graphs"};
  app.require_subcommand(1);

  std::string scheme_flag = "tw", out_path, format = "csv", sample_path, code_path, mode = "vc", sizes = "10,20,40";
  int n = 20, t = 1, r = 1, trials = 100, max_n = 20;
  std::uint64_t seed = 1;
  std::optional<int> cap;
  BundleFlags bundle_flags;

  auto* gen = app.add_subcommand("generate", "write a graph, its certificate and a sample");
  gen->add_option("--scheme", scheme_flag)->required();
  gen->add_option("--n", n);
  gen->add_option("--t", t);
  gen->add_option("--r", r);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "output directory")->required();

  auto* comp = app.add_subcommand("compress", "compress a sample");
  bundle_flags.add_to(*comp);
  comp->add_option("--sample", sample_path)->required();
  comp->add_option("--out", out_path, "code file (default: stdout)");

  auto* rec = app.add_subcommand("reconstruct", "reconstruct a ball from a code");
  BundleFlags rec_flags;
  rec_flags.add_to(*rec);
  rec->add_option("--code", code_path)->required();

  auto* ver = app.add_subcommand("verify", "seeded round-trip, properness and size checks");
  ver->add_option("--scheme", scheme_flag)->required();
  std::string ver_graph, ver_cert;
  ver->add_option("--graph", ver_graph, "fixed graph (default: a fresh instance per trial)");
  ver->add_option("--cert", ver_cert);
  ver->add_option("--n", n);
  ver->add_option("--t", t);
  ver->add_option("--r", r);
  ver->add_option("--seed", seed);
  ver->add_option("--trials", trials);
  ver->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));

  auto* vcd = app.add_subcommand("vcdim", "exact VC or 2VC dimension of the balls");
  std::string vcd_graph;
  vcd->add_option("--graph", vcd_graph)->required();
  vcd->add_option("--mode", mode)->check(CLI::IsMember({"vc", "2vc"}));
  vcd->add_option("--cap", cap, "largest radius");
  vcd->add_option("--max-n", max_n, "refuse graphs with more vertices");

  auto* bench = app.add_subcommand("bench", "verify over several sizes");
  bench->add_option("--scheme", scheme_flag)->required();
  bench->add_option("--sizes", sizes, "comma-separated n values");
  bench->add_option("--t", t);
  bench->add_option("--r", r);
  bench->add_option("--seed", seed);
  bench->add_option("--trials", trials);
  bench->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));

  std::vector<std::string> argv_store{"ballcomp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const Scheme scheme = parse_scheme(scheme_flag);
      const Bundle b = generate_bundle(scheme, n, t, r, seed);
      const GeneratedSample gs = generate_sample(b, seed);
      const fs::path dir(out_path);
      fs::create_directories(dir);
      std::ostringstream g, s;
      render_graph(g, b.graph);
      write_file(dir / "graph.gr", g.str());
      out << (dir / "graph.gr").string() << '\n';
      std::ostringstream c;
      fs::path cert;
      if (b.decomposition) {
        render_tree_decomposition(c, *b.decomposition, b.graph.num_vertices());
        cert = dir / "cert.td";
      } else if (b.nlc) {
        render_nlc(c, *b.nlc, b.graph.num_vertices());
        cert = dir / "cert.nlc";
      } else if (b.cover) {
        render_cover(c, *b.cover);
        cert = dir / "cert.vc";
      }
      if (!cert.empty()) {
        write_file(cert, c.str());
        out << cert.string() << '\n';
      }
      render_sample(s, gs.sample);
      write_file(dir / "sample.txt", s.str());
      out << (dir / "sample.txt").string() << '\n';
      out << "witness " << gs.witness.center + 1 << ' ' << gs.witness.radius << '\n';
      return 0;
    }
    if (comp->parsed()) {
      const Bundle b = bundle_flags.load();
      const Sample raw = read_file(sample_path, parse_sample);
      const Sample s = make_sample(b.graph, raw.positive, raw.negative);
      const Code code = Runner(b).compress(s);
      std::ostringstream text;
      std::visit([&](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ArrayCode>) render_array_code(text, x);
        else render_labeled_code(text, x);
      }, code);
      if (out_path.empty()) out << text.str();
      else write_file(out_path, text.str());
      return 0;
    }
    if (rec->parsed()) {
      const Bundle b = rec_flags.load();
      const Runner runner(b);
      Code code;
      if (uses_labeled_codes(b.scheme)) code = read_file(code_path, parse_labeled_code);
      else code = read_file(code_path, parse_array_code);
      if (const auto* a = std::get_if<ArrayCode>(&code)) check_vertices(b.graph, a->vertices());
      else {
        const auto& l = std::get<LabeledCode>(code);
        check_vertices(b.graph, set_union(l.y_plus, l.y_minus));
      }
      render_hypothesis(out, runner.reconstruct(code));
      return 0;
    }
    if (ver->parsed()) {
      const Scheme scheme = parse_scheme(scheme_flag);
      std::optional<Bundle> fixed;
      if (!ver_graph.empty()) {
        BundleFlags f{scheme_flag, ver_graph, ver_cert, t, r};
        fixed = f.load();
      }
      const VerifyRow row = verify(scheme, fixed, n, t, r, trials, seed, err);
      if (format == "csv") out << kCsvHeader << '\n';
      print_row(out, row, format);
      return row.failures == 0 ? 0 : 1;
    }
    if (vcd->parsed()) {
      const Graph g = read_file(vcd_graph, parse_graph);
      if (g.num_vertices() > max_n) {
        err << "graph has " << g.num_vertices() << " vertices; the exact oracle is exponential. "
            << "Pass --max-n " << g.num_vertices() << " to run it anyway, or use a smaller graph.\n";
        return 2;
      }
      const BallFamily family(g, cap ? ExtInt(*cap) : kInfinity);
      out << (mode == "vc" ? vc_dimension(family) : two_vc_dimension(family)) << '\n';
      return 0;
    }
    if (bench->parsed()) {
      const Scheme scheme = parse_scheme(scheme_flag);
      std::vector<int> ns;
      std::istringstream ss(sizes);
      for (std::string tok; std::getline(ss, tok, ',');) {
        try {
          ns.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw InputError("bad size '" + tok + "' in --sizes");
        }
      }
      if (format == "csv") out << kCsvHeader << '\n';
      int failures = 0;
      for (int size : ns) {
        const VerifyRow row = verify(scheme, std::nullopt, size, t, r, trials, seed, err);
        failures += row.failures;
        print_row(out, row, format);
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ballcomp::cli
