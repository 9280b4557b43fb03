#include <cmath>
#include <sstream>

#include "lly/report.hpp"

namespace lly {
namespace {

Json exact(const Rational& q) { return to_string(q); }

Json exact(const std::optional<QuadSurd>& q) { return q ? Json(q->to_string()) : Json(nullptr); }

Json exact(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

const char* clause_name(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::skipped: return "skipped";
  }
  return "?";
}

const char* sign_name(LineGraphSign s) {
  switch (s) {
    case LineGraphSign::yes: return "yes";
    case LineGraphSign::no: return "no";
    case LineGraphSign::inapplicable: return "inapplicable";
  }
  return "?";
}

const char* artg_name(ArtgStatus s) {
  switch (s) {
    case ArtgStatus::not_artg: return "not_artg";
    case ArtgStatus::non_positive: return "non_positive";
    case ArtgStatus::member: return "member";
    case ArtgStatus::counterexample_candidate: return "counterexample_candidate";
  }
  return "?";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string decimal(double x) {
  if (std::abs(x) < 1e-12) return "0";
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

Json to_json(const EdgeCurvature& e) {
  return Json{{"u", e.x},
              {"v", e.y},
              {"kappa", exact(e.kappa)},
              {"certificate",
               {{"p1", exact(e.certificate.p1)},
                {"kappa_p1", exact(e.certificate.kappa_p1)},
                {"p2", exact(e.certificate.p2)},
                {"kappa_p2", exact(e.certificate.kappa_p2)}}}};
}

Json to_json(const CurvatureReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back(to_json(e));
  return Json{{"kappa_min", exact(r.kappa_min)}, {"kappa_max", exact(r.kappa_max)}, {"edges", std::move(edges)}};
}

Json to_json(const SpectrumReport& r) {
  Json adjacency = Json::array();
  for (double x : r.adjacency) adjacency.push_back(decimal(x));
  Json laplacian = Json::array();
  for (double x : r.laplacian) laplacian.push_back(decimal(x));
  Json distinct = Json::array();
  for (const auto& [value, mult] : r.distinct) distinct.push_back({{"value", decimal(value)}, {"multiplicity", mult}});
  return Json{{"order", r.adjacency.size()},
              {"degree", r.degree ? Json(*r.degree) : Json(nullptr)},
              {"theta1", decimal(r.theta1)},
              {"lambda1", decimal(r.lambda1)},
              {"exact_theta1", exact(r.exact_theta1)},
              {"exact_lambda1", exact(r.exact_lambda1)},
              {"max_residual", decimal(r.max_residual)},
              {"distinct", std::move(distinct)},
              {"adjacency", std::move(adjacency)},
              {"laplacian", std::move(laplacian)}};
}

Json to_json(const DrgAnalysis& a) {
  Json eig = Json::array();
  for (std::size_t i = 0; i < a.eigenvalues.size(); ++i) {
    eig.push_back({{"value", decimal(a.eigenvalues[i])}, {"exact", exact(a.exact[i])}});
  }
  Json poly = Json::array();
  for (const auto& c : a.characteristic_polynomial) poly.push_back(c.get_str());
  return Json{{"intersection_array", to_json(a.array)},
              {"theta1", decimal(a.theta1)},
              {"b_plus", std::isnan(a.b_plus) ? Json(nullptr) : Json(decimal(a.b_plus))},
              {"exact_b_plus", exact(a.exact_b_plus)},
              {"eigenvalues", std::move(eig)},
              {"characteristic_polynomial", std::move(poly)}};
}

Json to_json(const SharpnessVerdict& v) {
  Json cls = nullptr;
  if (v.classification) {
    cls = {{"label", v.classification->label}, {"isomorphism_checked", v.classification->isomorphism_checked}};
  }
  return Json{{"sharp", v.sharp},
              {"kappa_min", exact(v.kappa_min)},
              {"lambda1", decimal(v.lambda1)},
              {"exact_lambda1", exact(v.exact_lambda1)},
              {"mode", v.mode == SharpnessMode::exact_certified ? "exact_certified" : "numeric_tolerance"},
              {"certificate_nullity", v.certificate_nullity ? Json(*v.certificate_nullity) : Json(nullptr)},
              {"lower_bound_holds", v.lower_bound_holds},
              {"classification", std::move(cls)}};
}

Json to_json(const BoundsReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"status", clause_name(c.status)}, {"detail", c.detail}});
  }
  return Json{{"ok", r.ok()}, {"clauses", std::move(clauses)}};
}

Json to_json(const LineGraphSignResult& r) {
  return Json{{"status", sign_name(r.status)}, {"reason", r.reason}, {"kappa_min", exact(r.kappa_min)}};
}

Json to_json(const ArtgVerdict& v) {
  return Json{{"status", artg_name(v.status)},
              {"reason", v.reason},
              {"params", v.params ? to_json(*v.params) : Json(nullptr)},
              {"kappa_min", exact(v.kappa_min)},
              {"member", v.member.empty() ? Json(nullptr) : Json(v.member)},
              {"isomorphism_checked", v.isomorphism_checked}};
}

Json to_json(const TableRow& row) {
  return Json{{"table", row.table},
              {"graph", row.label},
              {"parameters", row.parameters},
              {"lambda1", decimal(row.lambda1)},
              {"exact_lambda1", exact(row.exact_lambda1)},
              {"kappa_min", exact(row.kappa_min)},
              {"bound", exact(row.bound)},
              {"sharp", row.sharp},
              {"expected",
               {{"lambda1", row.expected_lambda1.to_string()},
                {"kappa_min", exact(row.expected_kappa)},
                {"bound", exact(row.expected_bound)},
                {"sharp", row.expected_sharp}}},
              {"match", row.match},
              {"flags", row.flags},
              {"mismatches", row.mismatches}};
}

Json to_json(const AmplyParams& p) { return Json{{"n", p.n}, {"d", p.d}, {"alpha", p.alpha}, {"beta", p.beta}}; }

Json to_json(const IntersectionArray& ia) { return Json{{"b", ia.b}, {"c", ia.c}}; }

Json to_json(const Rejection& r) { return Json{{"rejected", r.reason}, {"witness", r.witness}}; }

Json analysis_json(const Graph& g) {
  Json out{{"order", g.order()}, {"size", g.size()}};
  const bool connected = g.order() > 0 && is_connected(g);
  out["connected"] = connected;
  const auto deg = regular_degree(g);
  out["degree"] = deg ? Json(*deg) : Json(nullptr);
  out["diameter"] = connected ? Json(diameter(g)) : Json(nullptr);
  const auto gi = girth(g);
  out["girth"] = gi ? Json(*gi) : Json(nullptr);

  const auto amply = amply_params(g);
  const auto* p = accepted(amply);
  out["amply_regular"] = p ? to_json(*p) : to_json(std::get<Rejection>(amply));
  out["strongly_regular"] = p != nullptr && connected && diameter(g) == 2;

  const bool complete = g.order() > 0 && g.size() == static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2;
  if (!connected || complete) {
    out["terwilliger"] = nullptr;
  } else {
    const auto t = is_terwilliger(g);
    if (const auto* yes = accepted(t)) {
      out["terwilliger"] = Json{{"beta", yes->beta}};
    } else {
      out["terwilliger"] = to_json(std::get<Rejection>(t));
    }
  }

  const auto ia = intersection_array(g);
  if (const auto* a = accepted(ia)) {
    out["intersection_array"] = to_json(*a);
  } else {
    out["intersection_array"] = to_json(std::get<Rejection>(ia));
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string curvature_csv_header() { return "graph,u,v,numerator,denominator\n"; }

std::string curvature_csv(const CurvatureReport& r, int graph) {
  std::string out;
  for (const auto& e : r.edges) {
    out += std::to_string(graph) + "," + std::to_string(e.x) + "," + std::to_string(e.y) + "," +
           e.kappa.get_num().get_str() + "," + e.kappa.get_den().get_str() + "\n";
  }
  return out;
}

std::string spectrum_csv_header() { return "graph,index,adjacency,laplacian\n"; }

std::string spectrum_csv(const SpectrumReport& r, int graph) {
  std::string out;
  for (std::size_t i = 0; i < r.adjacency.size(); ++i) {
    out += std::to_string(graph) + "," + std::to_string(i) + "," + decimal(r.adjacency[i]) + "," +
           decimal(r.laplacian[i]) + "\n";
  }
  return out;
}

std::string sharpness_csv_header() { return "graph,sharp,kappa_min,lambda1,exact_lambda1,mode,classification\n"; }

std::string sharpness_csv(const SharpnessVerdict& v, int graph) {
  return std::to_string(graph) + "," + (v.sharp ? "true" : "false") + "," + to_string(v.kappa_min) + "," +
         decimal(v.lambda1) + "," + (v.exact_lambda1 ? v.exact_lambda1->to_string() : "") + "," +
         (v.mode == SharpnessMode::exact_certified ? "exact_certified" : "numeric_tolerance") + "," +
         csv_field(v.classification ? v.classification->label : "") + "\n";
}

std::string table_csv_header() { return "table,graph,parameters,lambda1,kappa_min,bound,sharp,match,notes\n"; }

std::string table_csv(const TableRow& row) {
  std::vector<std::string> notes = row.flags;
  notes.insert(notes.end(), row.mismatches.begin(), row.mismatches.end());
  return std::to_string(row.table) + "," + csv_field(row.label) + "," + csv_field(row.parameters) + "," +
         (row.exact_lambda1 ? row.exact_lambda1->to_string() : decimal(row.lambda1)) + "," +
         to_string(row.kappa_min) + "," + to_string(row.bound) + "," + (row.sharp ? "true" : "false") + "," +
         (row.match ? "true" : "false") + "," + csv_field(join(notes, "; ")) + "\n";
}

}  // namespace lly
