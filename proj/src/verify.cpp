#include "lly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "isomorphism.hpp"
#include "lly/error.hpp"
#include "lly/families.hpp"

namespace lly {
namespace {

constexpr int kIsomorphismLimit = 64;

std::string spec_label(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  if (spec.params.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.params[i]);
  }
  return out + ")";
}

// Family members whose intersection array equals `ia`.
std::vector<FamilySpec> sharp_candidates(const IntersectionArray& ia) {
  std::vector<FamilySpec> out;
  const int dm = ia.diameter();
  const int b0 = ia.degree();
  auto array_matches = [&](auto b_of, auto c_of) {
    for (int i = 0; i < dm; ++i) {
      if (ia.b[static_cast<std::size_t>(i)] != b_of(i) || ia.c[static_cast<std::size_t>(i)] != c_of(i + 1)) return false;
    }
    return true;
  };
  if (dm == 1) out.push_back({Family::complete, {b0 + 1}});
  if (dm == 2 && b0 % 2 == 0 && ia.b[1] == 1 && ia.c[1] == b0) out.push_back({Family::cocktail_party, {(b0 + 2) / 2}});
  if (dm >= 1 && b0 % dm == 0) {
    const int q = b0 / dm + 1;
    if (q >= 2 && array_matches([&](int i) { return (dm - i) * (q - 1); }, [](int i) { return i; })) {
      out.push_back({Family::hamming, {dm, q}});
    }
  }
  if (dm >= 1 && b0 % dm == 0) {
    const int k = dm;
    const int n = b0 / k + k;
    if (k <= n - k && array_matches([&](int i) { return (k - i) * (n - k - i); }, [](int i) { return i * i; })) {
      out.push_back({Family::johnson, {n, k}});
    }
  }
  for (int m = 2; m * (m - 1) / 2 <= b0; ++m) {
    if (m * (m - 1) / 2 != b0 || m / 2 != dm) continue;
    if (array_matches([&](int i) { return (m - 2 * i) * (m - 2 * i - 1) / 2; }, [](int i) { return i * (2 * i - 1); })) {
      out.push_back({Family::demi_cube, {m}});
    }
  }
  if (ia == IntersectionArray{{16, 5}, {1, 8}}) out.push_back({Family::schlafli, {}});
  if (ia == IntersectionArray{{27, 10, 1}, {1, 10, 27}}) out.push_back({Family::gosset, {}});
  return out;
}

bool is_icosahedron(const Graph& g) { return g.order() == 12 && detail::isomorphic(g, icosahedron()); }

// Line graph of a regular graph of girth at least 5.
bool is_girth5_line_graph(const Graph& g) {
  const auto root = line_graph_root(g);
  if (!root || !regular_degree(*root) || !is_connected(*root)) return false;
  const auto gi = girth(*root);
  return !gi || *gi >= 5;
}

BoundClause clause(std::string name) { return BoundClause{std::move(name), ClauseStatus::skipped, ""}; }

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

}  // namespace

std::optional<FamilyMatch> match_sharp_family(const Graph& g) {
  if (!is_connected(g) || g.order() < 2) return std::nullopt;
  const auto ia_result = intersection_array(g);
  const auto* ia = accepted(ia_result);
  if (!ia) return std::nullopt;
  for (const auto& spec : sharp_candidates(*ia)) {
    if (g.order() > kIsomorphismLimit) return FamilyMatch{spec_label(spec), false};
    if (detail::isomorphic(g, generate(spec))) return FamilyMatch{spec_label(spec), true};
  }
  return std::nullopt;
}

SharpnessVerdict sharpness(const Graph& g, const SharpnessOptions& options) {
  return sharpness(g, curvature_report(g, options.threads), options);
}

SharpnessVerdict sharpness(const Graph& g, const CurvatureReport& curvature, const SharpnessOptions& options) {
  require_connected(g);
  SharpnessVerdict v;
  v.kappa_min = curvature.kappa_min;
  SpectrumReport spectrum = adjacency_spectrum(g, false);
  v.lambda1 = spectrum.lambda1;
  const double kappa = to_double(v.kappa_min);

  if (!options.certify) {
    v.mode = SharpnessMode::numeric_tolerance;
    v.sharp = std::abs(v.lambda1 - kappa) <= kNumericTolerance;
    v.lower_bound_holds = v.lambda1 >= kappa - kNumericTolerance;
  } else {
    v.mode = SharpnessMode::exact_certified;
    if (v.kappa_min <= 0) {
      // A connected graph on >= 2 vertices has lambda1 > 0.
      v.sharp = false;
      v.lower_bound_holds = v.lambda1 > 0;
    } else {
      const auto cert = spectrum.degree
                            ? exact_eigenvalue_certificate(g, Rational(*spectrum.degree) * (Rational(1) - v.kappa_min))
                            : laplacian_eigenvalue_certificate(g, v.kappa_min);
      v.certificate_nullity = cert.nullity;
      if (cert.nullity == 0) {
        v.sharp = false;
        v.lower_bound_holds = v.lambda1 > kappa - kNumericTolerance;
      } else {
        // kappa_min is a Laplacian eigenvalue; it is lambda1 iff nothing
        // smaller and positive exists.
        v.lower_bound_holds = v.lambda1 >= kappa - kGapMargin;
        v.sharp = v.lower_bound_holds;
        if (v.sharp) v.exact_lambda1 = QuadSurd(v.kappa_min);
      }
    }
    if (!v.exact_lambda1 && spectrum.degree) v.exact_lambda1 = adjacency_spectrum(g, true).exact_lambda1;
    if (v.exact_lambda1 && v.lower_bound_holds) v.lower_bound_holds = *v.exact_lambda1 >= QuadSurd(v.kappa_min);
  }
  if (v.sharp) v.classification = match_sharp_family(g);
  return v;
}

bool BoundsReport::ok() const {
  return std::none_of(clauses.begin(), clauses.end(), [](const BoundClause& c) { return c.status == ClauseStatus::fail; });
}

const BoundClause* BoundsReport::find(const std::string& name) const {
  for (const auto& c : clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

BoundsReport check_bounds(const Graph& g, unsigned threads) {
  BoundsReport report;
  auto lich = clause("lichnerowicz");
  auto common = clause("common_neighbor_bound");
  auto terw = clause("terwilliger_bound");
  auto amply = clause("amply_inequality");
  auto identity = clause("srg_identity");
  auto srg_bound = clause("srg_lambda1_bound");
  auto finish = [&] {
    report.clauses = {lich, common, terw, amply, identity, srg_bound};
    return report;
  };
  if (g.order() < 2 || !is_connected(g) || g.size() == 0) {
    lich.detail = "needs a connected graph with an edge";
    return finish();
  }
  const auto curvature = curvature_report(g, threads);
  const auto spectrum = adjacency_spectrum(g, false);
  const auto deg = regular_degree(g);

  lich.status = spectrum.lambda1 >= to_double(curvature.kappa_min) - kNumericTolerance ? ClauseStatus::pass : ClauseStatus::fail;
  lich.detail = "lambda1 " + std::to_string(spectrum.lambda1) + ", kappa_min " + to_string(curvature.kappa_min);

  if (deg) {
    common.status = ClauseStatus::pass;
    for (const auto& e : curvature.edges) {
      const Rational bound = Rational(2 + common_neighbor_count(g, e.x, e.y)) / Rational(*deg);
      if (e.kappa > bound) {
        common.status = ClauseStatus::fail;
        common.detail = "edge " + edge_text({e.x, e.y}) + " has kappa " + to_string(e.kappa) + " > " + to_string(bound);
        break;
      }
    }
  } else {
    common.detail = "irregular";
  }

  const auto params_result = amply_params(g);
  const auto* params = accepted(params_result);
  if (!params) {
    const std::string why = std::get<Rejection>(params_result).reason;
    terw.detail = amply.detail = identity.detail = srg_bound.detail = "not amply regular: " + why;
    return finish();
  }
  const auto [n, d, alpha, beta] = *params;

  const auto terwilliger_result = is_terwilliger(g);
  if (accepted(terwilliger_result)) {
    const Rational bound = Rational(2 * alpha + 3 - d) / Rational(d);
    terw.status = ClauseStatus::pass;
    terw.detail = "bound " + to_string(bound);
    for (const auto& e : curvature.edges) {
      if (e.kappa > bound) {
        terw.status = ClauseStatus::fail;
        terw.detail = "edge " + edge_text({e.x, e.y}) + " has kappa " + to_string(e.kappa) + " > " + to_string(bound);
        break;
      }
    }
  } else {
    terw.detail = "not Terwilliger";
  }

  const bool equality = d == 2 * alpha + 3 - beta;
  if (d < 2 * alpha + 3 - beta) {
    amply.status = ClauseStatus::fail;
    amply.detail = "d < 2 alpha + 3 - beta";
  } else {
    const bool special = is_icosahedron(g) || is_girth5_line_graph(g);
    amply.status = equality == special ? ClauseStatus::pass : ClauseStatus::fail;
    amply.detail = std::string(equality ? "equality" : "strict") + (special ? ", special graph" : ", generic graph");
  }

  if (diameter(g) != 2) {
    identity.detail = srg_bound.detail = "diameter is not 2";
    return finish();
  }
  identity.status = BigInt(n - d - 1) * beta == BigInt(d) * (d - alpha - 1) ? ClauseStatus::pass : ClauseStatus::fail;
  identity.detail = params->to_string();

  if (*params == AmplyParams{5, 2, 0, 1}) {
    srg_bound.detail = "pentagon excluded";
    return finish();
  }
  const auto closed = srg_closed_form(*params);
  const QuadSurd bound(Rational(2 + alpha) / Rational(d));
  const bool holds = closed.lambda1 >= bound;
  const bool tight = closed.lambda1 == bound;
  const bool rigid = tight == (d == 2 * alpha - beta + 4);
  const bool routes_agree = std::abs(closed.lambda1.to_double() - spectrum.lambda1) <= kNumericTolerance;
  srg_bound.status = holds && rigid && routes_agree ? ClauseStatus::pass : ClauseStatus::fail;
  srg_bound.detail = "lambda1 " + closed.lambda1.to_string() + " vs " + to_string(bound.rational_part()) +
                     (tight ? " (equality)" : "") + (routes_agree ? "" : ", dense solver disagrees");
  return finish();
}

LineGraphSignResult check_line_graph_sign(const Graph& host, unsigned threads) {
  LineGraphSignResult r;
  if (host.order() < 2 || !is_connected(host)) {
    r.reason = "host must be connected";
    return r;
  }
  if (!regular_degree(host)) {
    r.reason = "host is irregular";
    return r;
  }
  const auto gi = girth(host);
  if (gi && *gi < 5) {
    r.reason = "host girth " + std::to_string(*gi) + " < 5";
    return r;
  }
  const int diam = diameter(host);
  if (diam < 3) {
    r.reason = "host diameter " + std::to_string(diam) + " < 3";
    return r;
  }
  r.kappa_min = curvature_report(line_graph(host), threads).kappa_min;
  r.status = *r.kappa_min <= 0 ? LineGraphSign::yes : LineGraphSign::no;
  return r;
}

ArtgVerdict classify_artg(const Graph& g, unsigned threads) {
  ArtgVerdict v;
  const auto params_result = amply_params(g);
  const auto* params = accepted(params_result);
  if (!params) {
    v.reason = "not amply regular: " + std::get<Rejection>(params_result).reason;
    return v;
  }
  v.params = *params;
  const auto terwilliger_result = is_terwilliger(g);
  if (!accepted(terwilliger_result)) {
    v.reason = "not Terwilliger: " + std::get<Rejection>(terwilliger_result).reason;
    return v;
  }
  v.kappa_min = curvature_report(g, threads).kappa_min;
  if (*v.kappa_min <= 0) {
    v.status = ArtgStatus::non_positive;
    v.reason = "minimum edge curvature " + to_string(*v.kappa_min);
    return v;
  }

  struct Known {
    AmplyParams params;
    const char* label;
    Graph (*build)();
    AmplyParams root;
  };
  static const Known known[] = {
      {{5, 2, 0, 1}, "cycle(5)", [] { return cycle(5); }, {}},
      {{12, 5, 2, 2}, "icosahedron", [] { return icosahedron(); }, {}},
      {{15, 4, 1, 1}, "line_graph(petersen)", [] { return line_graph(petersen()); }, {10, 3, 0, 1}},
      {{175, 12, 5, 1}, "line_graph(hoffman_singleton)", [] { return line_graph(hoffman_singleton()); }, {50, 7, 0, 1}},
      {{92625, 112, 55, 1}, "line_graph(srg(3250,57,0,1))", nullptr, {3250, 57, 0, 1}},
  };
  for (const auto& k : known) {
    if (k.params != *params) continue;
    v.member = k.label;
    if (g.order() <= kIsomorphismLimit && k.build) {
      if (detail::isomorphic(g, k.build())) {
        v.status = ArtgStatus::member;
        v.isomorphism_checked = true;
      } else {
        v.status = ArtgStatus::counterexample_candidate;
        v.reason = "parameters of " + std::string(k.label) + " but not isomorphic to it";
      }
      return v;
    }
    // Parameter-level match: the root must be a Moore graph of the right size.
    const auto root = line_graph_root(g);
    const auto root_params = root ? amply_params(*root) : std::variant<AmplyParams, Rejection>(Rejection{"no root", {}});
    if (root && accepted(root_params) && *accepted(root_params) == k.root) {
      v.status = ArtgStatus::member;
      v.reason = "parameter-level match";
    } else {
      v.status = ArtgStatus::counterexample_candidate;
      v.reason = "parameters of " + std::string(k.label) + " but no matching line graph root";
    }
    return v;
  }
  v.status = ArtgStatus::counterexample_candidate;
  v.reason = "positively curved amply regular Terwilliger graph " + params->to_string() + " outside the known list";
  return v;
}

std::vector<Graph> certified_chang_graphs() {
  static std::once_flag once;
  static std::vector<Graph> result;
  std::call_once(once, [] {
    const Graph t8 = triangular(8);
    for (const auto& s : chang_switching_sets()) {
      Graph g = seidel_switch(t8, s);
      const auto params = amply_params(g);
      const auto* p = accepted(params);
      if (!p || *p != AmplyParams{28, 12, 6, 4}) continue;
      if (detail::isomorphic(g, t8)) continue;
      if (std::any_of(result.begin(), result.end(), [&](const Graph& h) { return detail::isomorphic(g, h); })) continue;
      result.push_back(std::move(g));
    }
  });
  return result;
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](FamilySpec spec) { out.push_back({spec_label(spec), generate(spec)}); };
  for (int n = 2; n <= 6; ++n) add({Family::complete, {n}});
  for (int n = 4; n <= 8; ++n) add({Family::cycle, {n}});
  for (int n = 2; n <= 5; ++n) add({Family::cocktail_party, {n}});
  for (int n = 2; n <= 5; ++n) add({Family::hamming, {2, n}});
  for (int n = 2; n <= 4; ++n) add({Family::hamming, {3, n}});
  add({Family::hamming, {4, 2}});
  add({Family::hamming, {5, 2}});
  for (int n = 4; n <= 7; ++n) add({Family::triangular, {n}});
  add({Family::johnson, {6, 3}});
  add({Family::johnson, {7, 3}});
  add({Family::johnson, {8, 4}});
  for (int n = 2; n <= 7; ++n) add({Family::demi_cube, {n}});
  for (Family f : {Family::petersen, Family::icosahedron, Family::shrikhande, Family::clebsch, Family::schlafli,
                   Family::gosset, Family::hoffman_singleton, Family::dodecahedron, Family::heawood}) {
    add({f, {}});
  }
  add({Family::doob, {1, 1}});
  out.push_back({"line_graph(cycle(5))", line_graph(cycle(5))});
  out.push_back({"line_graph(petersen)", line_graph(petersen())});
  out.push_back({"line_graph(hoffman_singleton)", line_graph(hoffman_singleton())});
  out.push_back({"line_graph(dodecahedron)", line_graph(dodecahedron())});
  out.push_back({"line_graph(heawood)", line_graph(heawood())});
  out.push_back({"complement(triangular(7))", complement(triangular(7))});
  const auto changs = certified_chang_graphs();
  for (std::size_t i = 0; i < changs.size(); ++i) out.push_back({"chang(" + std::to_string(i + 1) + ")", changs[i]});
  return out;
}

}  // namespace lly
