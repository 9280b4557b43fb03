#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <thread>

#include "lly/error.hpp"
#include "lly/families.hpp"
#include "lly/graph6.hpp"
#include "lly/report.hpp"
#include "lly/verify.hpp"
#include "parallel.hpp"

namespace lly::cli {
namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format = Format::text;
  unsigned threads = 1;
  bool warn = false;
};

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("invalid " + what + " '" + s + "'");
  return v;
}

unsigned default_threads() {
  if (const char* env = std::getenv("LLY_THREADS"); env && *env) {
    const int v = parse_int(env, "LLY_THREADS");
    if (v < 1) throw UsageError("LLY_THREADS must be positive");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Graph> read_graphs(const std::string& path, std::istream& in) {
  std::vector<Graph> graphs;
  if (path == "-") {
    graphs = graph6_read_all(in);
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    graphs = graph6_read_all(file);
  }
  if (graphs.empty()) throw UsageError("no graphs in '" + path + "'");
  return graphs;
}

/// f(graph, inner_threads) for every graph; results keep input order.
template <typename T, typename F>
std::vector<T> per_graph(const std::vector<Graph>& graphs, unsigned threads, F f) {
  std::vector<T> results(graphs.size());
  const unsigned inner = graphs.size() > 1 ? 1 : threads;
  detail::parallel_for(graphs.size(), threads, [&](std::size_t i) { results[i] = f(graphs[i], inner); });
  return results;
}

std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_flat(std::ostream& out, const Json& obj, Format format) {
  for (const auto& [key, value] : obj.items()) {
    if (format == Format::csv) {
      out << csv_field(key) << "," << csv_field(plain(value)) << "\n";
    } else {
      out << key << ": " << plain(value) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  std::vector<int> params;
  std::string output;
  bool line = false;
  bool complement = false;
};

int cmd_gen(const GenArgs& a, Context& ctx) {
  const auto family = parse_family(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'");
  if (static_cast<int>(a.params.size()) != family_arity(*family)) {
    throw UsageError(a.family + " takes " + std::to_string(family_arity(*family)) + " parameter(s)");
  }
  Graph g = generate({*family, a.params});
  if (a.line) g = line_graph(g);
  if (a.complement) g = complement(g);
  const std::string text = graph6_encode(g) + "\n";
  if (a.output.empty() || a.output == "-") {
    ctx.out << text;
  } else {
    std::ofstream file(a.output);
    if (!file) throw UsageError("cannot write '" + a.output + "'");
    file << text;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze, curvature, spectrum, sharpness

int cmd_analyze(const std::string& path, Context& ctx) {
  const auto graphs = read_graphs(path, ctx.in);
  const auto reports = per_graph<Json>(graphs, ctx.threads, [](const Graph& g, unsigned) { return analysis_json(g); });
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (ctx.format == Format::json) {
      ctx.out << reports[i].dump() << "\n";
    } else {
      if (ctx.format == Format::csv && i == 0) ctx.out << "key,value\n";
      if (graphs.size() > 1 && ctx.format == Format::text) ctx.out << "# graph " << i << "\n";
      print_flat(ctx.out, reports[i], ctx.format);
    }
  }
  return kExitOk;
}

int cmd_curvature(const std::string& path, const std::vector<int>& edge, Context& ctx) {
  const auto graphs = read_graphs(path, ctx.in);
  if (!edge.empty()) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      for (int v : edge) {
        if (v < 0 || v >= g.order()) throw UsageError("vertex " + std::to_string(v) + " out of range");
      }
      const auto e = lly_curvature(g, edge[0], edge[1]);
      switch (ctx.format) {
        case Format::json: ctx.out << to_json(e).dump() << "\n"; break;
        case Format::csv:
          if (i == 0) ctx.out << curvature_csv_header();
          ctx.out << curvature_csv(CurvatureReport{{e}, e.kappa, e.kappa}, static_cast<int>(i));
          break;
        case Format::text: ctx.out << to_string(e.kappa) << "\n"; break;
      }
    }
    return kExitOk;
  }
  const auto reports = per_graph<CurvatureReport>(graphs, ctx.threads,
                                                  [](const Graph& g, unsigned t) { return curvature_report(g, t); });
  if (ctx.format == Format::csv) ctx.out << curvature_csv_header();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    switch (ctx.format) {
      case Format::json: ctx.out << to_json(r).dump() << "\n"; break;
      case Format::csv: ctx.out << curvature_csv(r, static_cast<int>(i)); break;
      case Format::text:
        if (graphs.size() > 1) ctx.out << "# graph " << i << "\n";
        ctx.out << "kappa_min " << to_string(r.kappa_min) << "\nkappa_max " << to_string(r.kappa_max) << "\n";
        for (const auto& e : r.edges) ctx.out << e.x << " " << e.y << " " << to_string(e.kappa) << "\n";
        break;
    }
  }
  return kExitOk;
}

int cmd_spectrum(const std::string& path, bool certify, Context& ctx) {
  const auto graphs = read_graphs(path, ctx.in);
  struct Result {
    SpectrumReport spectrum;
    std::optional<DrgAnalysis> drg;
  };
  const auto results = per_graph<Result>(graphs, ctx.threads, [certify](const Graph& g, unsigned) {
    Result r{adjacency_spectrum(g, certify), std::nullopt};
    const auto ia = intersection_array(g);
    if (const auto* a = accepted(ia)) r.drg = drg_spectrum(*a);
    return r;
  });
  if (ctx.format == Format::csv) ctx.out << spectrum_csv_header();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& s = results[i].spectrum;
    switch (ctx.format) {
      case Format::json: {
        Json j = to_json(s);
        j["distance_regular"] = results[i].drg ? to_json(*results[i].drg) : Json(nullptr);
        ctx.out << j.dump() << "\n";
        break;
      }
      case Format::csv: ctx.out << spectrum_csv(s, static_cast<int>(i)); break;
      case Format::text: {
        if (graphs.size() > 1) ctx.out << "# graph " << i << "\n";
        ctx.out << "order " << s.adjacency.size() << "\n";
        if (s.degree) ctx.out << "degree " << *s.degree << "\n";
        ctx.out << "theta1 " << decimal(s.theta1);
        if (s.exact_theta1) ctx.out << " = " << s.exact_theta1->to_string();
        ctx.out << "\nlambda1 " << decimal(s.lambda1);
        if (s.exact_lambda1) ctx.out << " = " << s.exact_lambda1->to_string();
        ctx.out << "\neigenvalues";
        for (const auto& [value, mult] : s.distinct) ctx.out << " " << decimal(value) << "^" << mult;
        ctx.out << "\n";
        if (const auto& d = results[i].drg; d && d->exact_b_plus) ctx.out << "b_plus " << d->exact_b_plus->to_string() << "\n";
        break;
      }
    }
  }
  return kExitOk;
}

int cmd_sharpness(const std::string& path, bool certify, Context& ctx) {
  const auto graphs = read_graphs(path, ctx.in);
  const auto verdicts = per_graph<SharpnessVerdict>(graphs, ctx.threads, [certify](const Graph& g, unsigned t) {
    return sharpness(g, SharpnessOptions{t, certify});
  });
  int status = kExitOk;
  if (ctx.format == Format::csv) ctx.out << sharpness_csv_header();
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    if (!v.lower_bound_holds) {
      ctx.err << "graph " << i << ": lambda1 below the minimum edge curvature\n";
      status = kExitFailed;
    }
    switch (ctx.format) {
      case Format::json: ctx.out << to_json(v).dump() << "\n"; break;
      case Format::csv: ctx.out << sharpness_csv(v, static_cast<int>(i)); break;
      case Format::text:
        ctx.out << "sharp=" << (v.sharp ? "true" : "false")
                << " lambda1=" << (v.exact_lambda1 ? v.exact_lambda1->to_string() : decimal(v.lambda1))
                << " kappa_min=" << to_string(v.kappa_min)
                << " mode=" << (v.mode == SharpnessMode::exact_certified ? "exact_certified" : "numeric_tolerance");
        if (v.classification) ctx.out << " family=" << v.classification->label;
        ctx.out << "\n";
        break;
    }
  }
  return status;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  bool warning = false;  // failed, but downgraded by --warn
};

int emit_checks(const std::vector<Check>& checks, Context& ctx) {
  int status = kExitOk;
  if (ctx.format == Format::csv) ctx.out << "check,status,detail\n";
  std::size_t failed = 0;
  for (const auto& c : checks) {
    const char* s = c.pass ? "pass" : (c.warning ? "warn" : "fail");
    if (!c.pass && !c.warning) {
      status = kExitFailed;
      ++failed;
    }
    switch (ctx.format) {
      case Format::json: ctx.out << Json{{"check", c.name}, {"status", s}, {"detail", c.detail}}.dump() << "\n"; break;
      case Format::csv: ctx.out << csv_field(c.name) << "," << s << "," << csv_field(c.detail) << "\n"; break;
      case Format::text: {
        std::string tag = s;
        std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
        ctx.out << tag << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        break;
      }
    }
  }
  if (ctx.format == Format::text) ctx.out << checks.size() << " checks, " << failed << " failed\n";
  return status;
}

Check constant_curvature(const std::string& label, const Graph& g, const Rational& expected, unsigned threads) {
  const auto r = curvature_report(g, threads);
  const auto hits = std::count_if(r.edges.begin(), r.edges.end(), [&](const auto& e) { return e.kappa == expected; });
  return {"constant curvature " + label, hits == static_cast<long>(r.edges.size()),
          std::to_string(hits) + "/" + std::to_string(r.edges.size()) + " edges at " + to_string(expected)};
}

Check beta_one_instance(const std::string& label, const Graph& host, int d, unsigned threads) {
  const Graph l = line_graph(host);
  const auto v = sharpness(l, SharpnessOptions{threads, true});
  const QuadSurd closed(make_rational(2 * d + 1, 4 * d - 4), make_rational(-1, 4 * d - 4), BigInt(4 * d - 3));
  const bool numeric = std::abs(v.lambda1 - closed.to_double()) <= kNumericTolerance;
  const bool symbolic = !v.exact_lambda1 || *v.exact_lambda1 == closed;
  return {"beta=1 not sharp " + label, !v.sharp && numeric && symbolic,
          "lambda1 " + (v.exact_lambda1 ? v.exact_lambda1->to_string() : decimal(v.lambda1)) + ", closed form " +
              closed.to_string() + ", kappa_min " + to_string(v.kappa_min)};
}

Check line_sign(const std::string& label, const Graph& host, unsigned threads) {
  const auto r = check_line_graph_sign(host, threads);
  return {"non-positive edge in " + label, r.status == LineGraphSign::yes,
          "kappa_min " + (r.kappa_min ? to_string(*r.kappa_min) : std::string("n/a")) +
              (r.reason.empty() ? "" : "; " + r.reason)};
}

std::string failed_clauses(const BoundsReport& r) {
  std::string out;
  for (const auto& c : r.clauses) {
    if (c.status == ClauseStatus::fail) out += (out.empty() ? "" : "; ") + c.name + " " + c.detail;
  }
  return out;
}

std::string passed_clauses(const BoundsReport& r) {
  std::string out;
  for (const auto& c : r.clauses) {
    if (c.status == ClauseStatus::pass) out += (out.empty() ? "" : ",") + c.name;
  }
  return out.empty() ? "no applicable clause" : out;
}

/// Bounds, line graph sign (when applicable) and ARTG membership for one
/// graph.
std::vector<Check> sweep_graph(const std::string& label, const Graph& g, unsigned threads, bool warn) {
  std::vector<Check> checks;
  const auto bounds = check_bounds(g, threads);
  checks.push_back({"bounds " + label, bounds.ok(), bounds.ok() ? passed_clauses(bounds) : failed_clauses(bounds)});
  const auto sign = check_line_graph_sign(g, threads);
  if (sign.status != LineGraphSign::inapplicable) {
    checks.push_back({"line graph sign " + label, sign.status == LineGraphSign::yes,
                      "kappa_min " + (sign.kappa_min ? to_string(*sign.kappa_min) : std::string("n/a"))});
  }
  const auto artg = classify_artg(g, threads);
  if (artg.status == ArtgStatus::counterexample_candidate) {
    checks.push_back({"artg " + label, false, artg.reason, warn});
  }
  return checks;
}

int cmd_verify_lemmas(const std::string& dir, Context& ctx) {
  const unsigned t = ctx.threads;
  std::vector<Check> checks;
  checks.push_back(constant_curvature("line_graph(cycle(5))", line_graph(cycle(5)), make_rational(1, 2), t));
  checks.push_back(constant_curvature("line_graph(petersen)", line_graph(petersen()), make_rational(1, 4), t));
  checks.push_back(
      constant_curvature("line_graph(hoffman_singleton)", line_graph(hoffman_singleton()), make_rational(1, 12), t));
  checks.push_back(beta_one_instance("line_graph(petersen)", petersen(), 3, t));
  checks.push_back(beta_one_instance("line_graph(hoffman_singleton)", hoffman_singleton(), 7, t));
  checks.push_back(line_sign("line_graph(dodecahedron)", dodecahedron(), t));
  checks.push_back(line_sign("line_graph(heawood)", heawood(), t));

  const auto corpus = standard_corpus();
  std::vector<Graph> graphs;
  for (const auto& e : corpus) graphs.push_back(e.graph);
  const auto swept = per_graph<std::vector<Check>>(
      graphs, t, [&](const Graph& g, unsigned inner) {
        const auto i = static_cast<std::size_t>(&g - graphs.data());
        auto out = sweep_graph(corpus[i].label, g, inner, ctx.warn);
        const auto params = amply_params(g);
        if (const auto* p = accepted(params); p && p->beta == 1) {
          const auto v = sharpness(g, SharpnessOptions{inner, true});
          out.push_back({"beta=1 not sharp " + corpus[i].label, !v.sharp, "kappa_min " + to_string(v.kappa_min)});
        }
        return out;
      });
  for (const auto& s : swept) checks.insert(checks.end(), s.begin(), s.end());

  if (!dir.empty()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw UsageError("'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".g6") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      const auto gs = read_graphs(file.string(), ctx.in);
      const auto results = per_graph<std::vector<Check>>(gs, t, [&](const Graph& g, unsigned inner) {
        const auto i = static_cast<std::size_t>(&g - gs.data());
        return sweep_graph(file.filename().string() + ":" + std::to_string(i), g, inner, ctx.warn);
      });
      for (const auto& s : results) checks.insert(checks.end(), s.begin(), s.end());
    }
  }
  return emit_checks(checks, ctx);
}

int cmd_verify_tables(const std::vector<std::string>& caps, const std::vector<std::string>& extra, int table,
                      Context& ctx) {
  TableConfig config;
  config.threads = ctx.threads;
  config.table1 = table != 2;
  config.table2 = table != 1;
  for (const auto& item : caps) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("cap '" + item + "' is not key=value");
    try {
      config.caps.set(item.substr(0, eq), parse_int(item.substr(eq + 1), "cap value"));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  for (const auto& item : extra) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("graph '" + item + "' is not name=FILE");
    const std::string name = item.substr(0, eq);
    auto gs = read_graphs(item.substr(eq + 1), ctx.in);
    if (gs.size() != 1) throw UsageError(name + " file must hold exactly one graph");
    if (name == "conway_smith") {
      config.conway_smith = std::move(gs.front());
    } else if (name == "doro") {
      config.doro = std::move(gs.front());
    } else {
      throw UsageError("unknown graph '" + name + "' (expected conway_smith or doro)");
    }
  }
  const auto rows = reproduce_tables(config);
  const auto bad = std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return !r.match; });
  switch (ctx.format) {
    case Format::json:
      for (const auto& r : rows) ctx.out << to_json(r).dump() << "\n";
      break;
    case Format::csv:
      ctx.out << table_csv_header();
      for (const auto& r : rows) ctx.out << table_csv(r);
      break;
    case Format::text:
      ctx.out << format_tables(rows) << rows.size() << " rows, " << bad << " mismatched\n";
      break;
  }
  return bad == 0 ? kExitOk : kExitFailed;
}

int cmd_verify_classify(const std::string& path, Context& ctx) {
  std::vector<CorpusEntry> entries;
  if (path.empty()) {
    entries = standard_corpus();
  } else {
    const auto gs = read_graphs(path, ctx.in);
    for (std::size_t i = 0; i < gs.size(); ++i) entries.push_back({"graph " + std::to_string(i), gs[i]});
  }
  std::vector<Graph> graphs;
  for (const auto& e : entries) graphs.push_back(e.graph);

  struct Result {
    SharpnessVerdict verdict;
    bool distance_regular = false;
    std::optional<FamilyMatch> family;
    ArtgVerdict artg;
    std::vector<std::string> violations;
    bool warning_only = false;
  };
  const bool warn = ctx.warn;
  const auto results = per_graph<Result>(graphs, ctx.threads, [warn](const Graph& g, unsigned t) {
    Result r;
    r.verdict = sharpness(g, SharpnessOptions{t, true});
    r.distance_regular = std::holds_alternative<IntersectionArray>(intersection_array(g));
    r.family = r.verdict.sharp ? r.verdict.classification : match_sharp_family(g);
    r.artg = classify_artg(g, t);
    if (r.distance_regular && r.verdict.sharp && !r.family) {
      r.violations.push_back("sharp distance-regular graph outside the known families");
    }
    if (!r.verdict.sharp && r.family) r.violations.push_back("member of " + r.family->label + " but not sharp");
    const auto params = amply_params(g);
    if (const auto* p = accepted(params); p && p->beta == 1 && r.verdict.sharp) {
      r.violations.push_back("beta = 1 but sharp");
    }
    if (!r.verdict.lower_bound_holds) r.violations.push_back("lambda1 below the minimum edge curvature");
    const bool structural = !r.violations.empty();
    if (r.artg.status == ArtgStatus::counterexample_candidate) r.violations.push_back(r.artg.reason);
    r.warning_only = warn && !structural && !r.violations.empty();
    return r;
  });

  int status = kExitOk;
  if (ctx.format == Format::csv) ctx.out << "graph,sharp,kappa_min,lambda1,family,artg,member,violations\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.violations.empty() && !r.warning_only) status = kExitFailed;
    const std::string lambda =
        r.verdict.exact_lambda1 ? r.verdict.exact_lambda1->to_string() : decimal(r.verdict.lambda1);
    const std::string family = r.family ? r.family->label : "";
    std::string violations;
    for (const auto& v : r.violations) violations += (violations.empty() ? "" : "; ") + v;
    switch (ctx.format) {
      case Format::json:
        ctx.out << Json{{"graph", entries[i].label},
                        {"sharpness", to_json(r.verdict)},
                        {"distance_regular", r.distance_regular},
                        {"sharp_family", r.family ? Json(family) : Json(nullptr)},
                        {"artg", to_json(r.artg)},
                        {"violations", r.violations},
                        {"warning_only", r.warning_only}}
                       .dump()
                << "\n";
        break;
      case Format::csv:
        ctx.out << csv_field(entries[i].label) << "," << (r.verdict.sharp ? "true" : "false") << ","
                << to_string(r.verdict.kappa_min) << "," << lambda << "," << csv_field(family) << ","
                << to_json(r.artg)["status"].get<std::string>() << "," << csv_field(r.artg.member) << ","
                << csv_field(violations) << "\n";
        break;
      case Format::text:
        ctx.out << entries[i].label << ": sharp=" << (r.verdict.sharp ? "true" : "false")
                << " kappa_min=" << to_string(r.verdict.kappa_min) << " lambda1=" << lambda;
        if (!family.empty()) ctx.out << " family=" << family;
        ctx.out << " artg=" << to_json(r.artg)["status"].get<std::string>();
        if (!r.artg.member.empty()) ctx.out << "(" << r.artg.member << ")";
        if (!violations.empty()) ctx.out << (r.warning_only ? " WARNING: " : " VIOLATION: ") << violations;
        ctx.out << "\n";
        break;
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lin-Lu-Yau curvature, normalized Laplacian spectra and sharpness checks", "lly"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  std::optional<unsigned> threads;
  bool warn = false;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", threads, "worker threads (default: $LLY_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--warn", warn, "report counterexample candidates as warnings instead of failures");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
  gen->add_option("family", gen_args.family, "family name")->required();
  gen->add_option("params", gen_args.params, "integer parameters");
  gen->add_option("-o,--output", gen_args.output, "output file (default stdout)");
  gen->add_flag("--line-graph", gen_args.line, "emit the line graph instead");
  gen->add_flag("--complement", gen_args.complement, "emit the complement instead");

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "regularity, Terwilliger status, diameter, girth, intersection array");
  analyze->add_option("file", path, "graph6 file, or - for stdin")->required();

  std::vector<int> edge;
  auto* curvature = app.add_subcommand("curvature", "exact edge curvature");
  curvature->add_option("file", path, "graph6 file, or - for stdin")->required();
  curvature->add_option("--edge", edge, "single edge U V")->expected(2);

  bool no_certify = false;
  auto* spectrum = app.add_subcommand("spectrum", "adjacency and normalized Laplacian spectrum");
  spectrum->add_option("file", path, "graph6 file, or - for stdin")->required();
  spectrum->add_flag("--no-certify", no_certify, "skip the exact eigenvalue certificate");

  auto* sharp = app.add_subcommand("sharpness", "whether lambda1 equals the minimum edge curvature");
  sharp->add_option("file", path, "graph6 file, or - for stdin")->required();
  sharp->add_flag("--no-certify", no_certify, "decide numerically within 1e-9");

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  std::vector<std::string> caps;
  std::vector<std::string> extra;
  auto* tables = verify->add_subcommand("tables", "reproduce both classification tables");
  tables->add_option("--caps", caps, "comma-separated key=value caps")->delimiter(',');
  tables->add_option("--graph", extra, "conway_smith=FILE or doro=FILE");
  int table = 0;
  tables->add_option("--table", table, "only table 1 or 2")->check(CLI::Range(1, 2));
  std::string dir;
  auto* lemmas = verify->add_subcommand("lemmas", "curvature lemma instances and corpus sweeps");
  lemmas->add_option("dir", dir, "directory of .g6 files to sweep as well");
  auto* classify = verify->add_subcommand("classify", "sharpness and ARTG classification (default: built-in corpus)");
  classify->add_option("file", path, "graph6 file, or - for stdin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx{in, out, err};
    ctx.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    if (format.empty() && analyze->parsed()) ctx.format = Format::json;
    ctx.threads = threads ? *threads : default_threads();
    ctx.warn = warn;

    if (gen->parsed()) return cmd_gen(gen_args, ctx);
    if (analyze->parsed()) return cmd_analyze(path, ctx);
    if (curvature->parsed()) return cmd_curvature(path, edge, ctx);
    if (spectrum->parsed()) return cmd_spectrum(path, !no_certify, ctx);
    if (sharp->parsed()) return cmd_sharpness(path, !no_certify, ctx);
    if (tables->parsed()) return cmd_verify_tables(caps, extra, table, ctx);
    if (lemmas->parsed()) return cmd_verify_lemmas(dir, ctx);
    if (classify->parsed()) return cmd_verify_classify(path, ctx);
    err << "no command\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace lly::cli
