#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "lly/error.hpp"
#include "lly/families.hpp"
#include "lly/verify.hpp"
#include "parallel.hpp"

namespace lly {
namespace {

Rational q(long long num, long long den = 1) { return make_rational(num, den); }

struct RowPlan {
  int table;
  std::string label;
  std::function<Graph()> build;
  QuadSurd lambda1;
  Rational kappa;
  Rational bound;
  bool sharp;
  std::optional<AmplyParams> params;  // table 1
  int vertices = 0;                   // table 2
  int diam = 0;                       // table 2
  bool doob = false;
};

// Saturates at `limit + 1` so large binomials never overflow.
long long binomial(int n, int k, long long limit) {
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > limit) return limit + 1;
  }
  return r;
}

long long ipow(int b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<RowPlan> plan_rows(const TableConfig& config) {
  const auto& caps = config.caps;
  std::vector<RowPlan> rows;
  auto t1 = [&](std::string label, std::function<Graph()> build, AmplyParams p, Rational l, Rational k, Rational b,
                bool sharp) {
    rows.push_back({1, std::move(label), std::move(build), QuadSurd(std::move(l)), std::move(k), std::move(b), sharp, p});
  };
  for (int n = 2; config.table1 && n <= caps.cocktail_party_max; ++n) {
    t1("CP(" + std::to_string(n) + ")", [n] { return cocktail_party(n); }, {2 * n, 2 * n - 2, 2 * n - 4, 2 * n - 2}, q(1),
       q(1), q(1), true);
  }
  for (int n = 2; config.table1 && n <= caps.hamming2_max; ++n) {
    const Rational v = q(n, 2 * (n - 1));
    t1("H(2," + std::to_string(n) + ")", [n] { return hamming(2, n); }, {n * n, 2 * (n - 1), n - 2, 2}, v, v, v, true);
  }
  for (int n = 4; config.table1 && n <= caps.triangular_max; ++n) {
    const Rational v = q(n, 2 * (n - 2));
    t1("T(" + std::to_string(n) + ")", [n] { return triangular(n); }, {n * (n - 1) / 2, 2 * (n - 2), n - 2, 4}, v, v, v,
       true);
  }
  if (config.table1) {
    t1("Shrikhande", shrikhande, {16, 6, 2, 2}, q(2, 3), q(1, 3), q(2, 3), false);
    const auto changs = certified_chang_graphs();
    for (std::size_t i = 0; i < changs.size(); ++i) {
      const Graph g = changs[i];
      t1("Chang " + std::to_string(i + 1), [g] { return g; }, {28, 12, 6, 4}, q(2, 3), q(1, 3), q(2, 3), false);
    }
    t1("Petersen", petersen, {10, 3, 0, 1}, q(2, 3), q(0), q(2, 3), false);
    t1("Clebsch", clebsch, {16, 10, 6, 6}, q(4, 5), q(4, 5), q(4, 5), true);
    t1("Schlafli", schlafli, {27, 16, 10, 8}, q(3, 4), q(3, 4), q(3, 4), true);
  }

  auto t2 = [&](std::string label, std::function<Graph()> build, int vertices, int diam, QuadSurd l, Rational k,
                Rational b, bool sharp, bool doob = false) {
    RowPlan r{2, std::move(label), std::move(build), std::move(l), std::move(k), std::move(b), sharp, std::nullopt};
    r.vertices = vertices;
    r.diam = diam;
    r.doob = doob;
    rows.push_back(std::move(r));
  };
  if (!config.table2) return rows;
  for (int d = 1; ipow(2, d) <= caps.hamming_vertices_max; ++d) {
    for (int n = 2; ipow(n, d) <= caps.hamming_vertices_max; ++n) {
      const Rational v = q(n, d * (n - 1));
      t2("H(" + std::to_string(d) + "," + std::to_string(n) + ")", [d, n] { return hamming(d, n); },
         static_cast<int>(ipow(n, d)), d, QuadSurd(v), v, v, true);
    }
  }
  for (int m = 1; 1 + 2 * m <= caps.doob_max; ++m) {
    for (int n = 1; n + 2 * m <= caps.doob_max; ++n) {
      const int s = n + 2 * m;
      t2("Doob(" + std::to_string(n) + "," + std::to_string(m) + ")", [n, m] { return doob(n, m); },
         static_cast<int>(ipow(4, s)), s, QuadSurd(q(4, 3 * s)), q(2, 3 * s), q(2, 3 * s), false, true);
    }
  }
  if (config.conway_smith) {
    const Graph g = *config.conway_smith;
    t2("Conway-Smith", [g] { return g; }, 63, 3, QuadSurd(q(1, 2)), q(-1, 10), q(1, 2), false);
  }
  if (config.doro) {
    const Graph g = *config.doro;
    t2("Doro", [g] { return g; }, 65, 3, QuadSurd(q(1, 2)), q(-1, 10), q(1, 2), false);
  }
  const long long jcap = caps.johnson_vertices_max;
  for (int n = 2; n <= jcap; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      if (binomial(n, k, jcap) > jcap) continue;
      const Rational v = q(n, k * (n - k));
      t2("J(" + std::to_string(n) + "," + std::to_string(k) + ")", [n, k] { return johnson(n, k); },
         static_cast<int>(binomial(n, k, jcap)), std::min(k, n - k), QuadSurd(v), v, v, true);
    }
  }
  for (int n = 2; n <= caps.demi_cube_max; ++n) {
    const Rational v = q(4, n);
    t2("demi_cube(" + std::to_string(n) + ")", [n] { return demi_cube(n); }, 1 << (n - 1), n / 2, QuadSurd(v), v, v,
       true);
  }
  t2("Gosset", gosset, 56, 3, QuadSurd(q(2, 3)), q(2, 3), q(2, 3), true);
  t2("Icosahedron", icosahedron, 12, 3, QuadSurd(q(1), q(-1, 5), BigInt(5)), q(2, 5), q(4, 5), false);
  return rows;
}

TableRow evaluate(const RowPlan& plan) {
  TableRow row;
  row.table = plan.table;
  row.label = plan.label;
  row.expected_lambda1 = plan.lambda1;
  row.expected_kappa = plan.kappa;
  row.expected_bound = plan.bound;
  row.expected_sharp = plan.sharp;
  auto miss = [&](std::string what) { row.mismatches.push_back(std::move(what)); };

  const Graph g = plan.build();
  const auto verdict = sharpness(g);
  row.lambda1 = verdict.lambda1;
  row.exact_lambda1 = verdict.exact_lambda1;
  row.kappa_min = verdict.kappa_min;
  row.sharp = verdict.sharp;

  // alpha from the intersection array also covers complete graphs.
  const auto deg = regular_degree(g);
  if (!deg || g.size() == 0) {
    miss("graph is not regular");
  } else {
    const auto [x, y] = g.edges().front();
    row.bound = Rational(2 + common_neighbor_count(g, x, y)) / Rational(*deg);
  }

  if (plan.table == 1) {
    const auto params = amply_params(g);
    const auto* p = accepted(params);
    row.parameters = p ? p->to_string() : "not amply regular";
    if (!p || *p != *plan.params) miss("parameters " + row.parameters + ", expected " + plan.params->to_string());
  } else {
    const int diam = diameter(g);
    row.parameters = "|V|=" + std::to_string(g.order()) + ", D=" + std::to_string(diam);
    if (g.order() != plan.vertices) miss("|V| " + std::to_string(g.order()) + ", expected " + std::to_string(plan.vertices));
    if (diam != plan.diam) miss("diameter " + std::to_string(diam) + ", expected " + std::to_string(plan.diam));
  }

  if (plan.lambda1.is_rational() && row.exact_lambda1) {
    if (!(*row.exact_lambda1 == plan.lambda1)) {
      miss("lambda1 " + row.exact_lambda1->to_string() + ", expected " + plan.lambda1.to_string());
    }
  } else if (!plan.lambda1.is_rational()) {
    if (!row.exact_lambda1 || !(*row.exact_lambda1 == plan.lambda1)) {
      miss("lambda1 has no exact symbolic match for " + plan.lambda1.to_string());
    }
    if (std::abs(row.lambda1 - plan.lambda1.to_double()) > kNumericTolerance) miss("lambda1 numeric mismatch");
  } else if (std::abs(row.lambda1 - plan.lambda1.to_double()) > kNumericTolerance) {
    miss("lambda1 " + std::to_string(row.lambda1) + ", expected " + plan.lambda1.to_string());
  } else {
    row.flags.push_back("lambda1 checked numerically");
  }
  if (row.kappa_min != plan.kappa) miss("kappa_min " + to_string(row.kappa_min) + ", expected " + to_string(plan.kappa));
  if (row.bound != plan.bound) {
    if (plan.doob) {
      row.flags.push_back("(2+alpha)/d is " + to_string(row.bound) + ", table lists " + to_string(plan.bound));
    } else {
      miss("bound " + to_string(row.bound) + ", expected " + to_string(plan.bound));
    }
  }
  if (row.sharp != plan.sharp) miss(std::string("sharp=") + (row.sharp ? "true" : "false"));
  if (!verdict.lower_bound_holds) miss("lambda1 < kappa_min");
  if (row.sharp && !verdict.classification) miss("sharp but outside the known sharp families");
  row.match = row.mismatches.empty();
  return row;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

void TableCaps::set(const std::string& key, int value) {
  if (key == "cp") {
    cocktail_party_max = value;
  } else if (key == "hamming2") {
    hamming2_max = value;
  } else if (key == "triangular") {
    triangular_max = value;
  } else if (key == "hamming_vertices") {
    hamming_vertices_max = value;
  } else if (key == "johnson_vertices") {
    johnson_vertices_max = value;
  } else if (key == "demi_cube") {
    demi_cube_max = value;
  } else if (key == "doob") {
    doob_max = value;
  } else {
    throw DomainError("unknown cap '" + key + "'");
  }
}

std::vector<TableRow> reproduce_tables(const TableConfig& config) {
  const auto plans = plan_rows(config);
  std::vector<TableRow> rows(plans.size());
  detail::parallel_for(plans.size(), config.threads, [&](std::size_t i) { rows[i] = evaluate(plans[i]); });
  return rows;
}

std::string format_tables(const std::vector<TableRow>& rows) {
  const std::vector<std::string> head = {"graph", "parameters", "lambda1", "kappa_min", "(2+alpha)/d", "sharp", "status"};
  std::ostringstream out;
  for (int table : {1, 2}) {
    std::vector<std::vector<std::string>> cells{head};
    for (const auto& r : rows) {
      if (r.table != table) continue;
      std::string status = r.match ? "ok" : "MISMATCH";
      for (const auto& f : r.flags) status += "; " + f;
      for (const auto& m : r.mismatches) status += "; " + m;
      std::ostringstream lam;
      lam.precision(12);
      lam << r.lambda1;
      cells.push_back({r.label, r.parameters, r.exact_lambda1 ? r.exact_lambda1->to_string() : lam.str(),
                       to_string(r.kappa_min), to_string(r.bound), r.sharp ? "yes" : "no", status});
    }
    if (cells.size() == 1) continue;
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    }
    out << "Table " << table << "\n";
    for (const auto& line : cells) {
      std::string text;
      for (std::size_t c = 0; c < line.size(); ++c) text += (c ? "  " : "") + (c + 1 < line.size() ? pad(line[c], width[c]) : line[c]);
      out << text << "\n";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace lly
