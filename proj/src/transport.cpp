#include "lly/transport.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "min_cost_flow.hpp"
#include "parallel.hpp"

namespace lly {
namespace {

// Keeps every long long intermediate (masses times costs, summed) far from
// overflow.
constexpr long long kSmallScale = 1LL << 40;

BigInt as_big(long long v) { return to_big(v); }
const BigInt& as_big(const BigInt& v) { return v; }

struct MassSolution {
  Rational cost;
  std::map<Edge, Rational> plan;
  std::map<Vertex, long long> source_potential;
};

int checked_distance(const DistanceMatrix& dist, Vertex a, Vertex b) {
  const int d = dist(a, b);
  if (d == DistanceRow::unreachable) throw DisconnectedError(a, b);
  return d;
}

void check_support(const DistanceMatrix& dist, const ProbMeasure& mu) {
  for (const auto& [v, m] : mu.support()) {
    if (v < 0 || v >= dist.order()) throw DomainError("measure supported outside the graph");
  }
}

// Transports `src` onto `tgt` (equal totals, positive masses) without any
// cancellation between them.
MassSolution solve_masses(const DistanceMatrix& dist, const std::map<Vertex, Rational>& src,
                          const std::map<Vertex, Rational>& tgt) {
  MassSolution out;
  out.cost = 0;
  if (src.empty() && tgt.empty()) return out;
  BigInt scale = 1;
  for (const auto* side : {&src, &tgt}) {
    for (const auto& [v, m] : *side) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.get_den_mpz_t());
  }
  std::vector<Vertex> sv, tv;
  std::vector<BigInt> supply, demand;
  for (const auto& [v, m] : src) {
    sv.push_back(v);
    supply.push_back(m.get_num() * (scale / m.get_den()));
  }
  for (const auto& [v, m] : tgt) {
    tv.push_back(v);
    demand.push_back(m.get_num() * (scale / m.get_den()));
  }
  std::vector<int> cost;
  cost.reserve(sv.size() * tv.size());
  for (Vertex a : sv) {
    for (Vertex b : tv) cost.push_back(checked_distance(dist, a, b));
  }

  auto finish = [&](const auto& sol) {
    for (const auto& fl : sol.flows) {
      Rational amount{as_big(fl.amount), scale};
      amount.canonicalize();
      out.plan.emplace(Edge{sv[static_cast<std::size_t>(fl.source)], tv[static_cast<std::size_t>(fl.target)]}, amount);
    }
    out.cost = Rational(as_big(sol.cost), scale);
    out.cost.canonicalize();
    for (std::size_t i = 0; i < sv.size(); ++i) out.source_potential[sv[i]] = sol.source_potential[i];
  };
  if (scale < to_big(kSmallScale)) {
    std::vector<long long> s, t;
    for (const auto& x : supply) s.push_back(x.get_si());
    for (const auto& x : demand) t.push_back(x.get_si());
    finish(detail::solve_transport<long long>(s, t, cost));
  } else {
    finish(detail::solve_transport<BigInt>(supply, demand, cost));
  }
  return out;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// W1(mu_x^p, mu_y^p) for p = num/den with small integers, in scaled
// long long arithmetic. Returns nullopt when the scale would be too large.
std::optional<Rational> lazy_walk_distance(const Graph& g, const DistanceMatrix& dist, Vertex x, Vertex y,
                                           const Rational& p) {
  if (!p.get_num().fits_slong_p() || !p.get_den().fits_slong_p()) return std::nullopt;
  const long long num = p.get_num().get_si();
  const long long den = p.get_den().get_si();
  const long long dx = g.degree(x);
  const long long dy = g.degree(y);
  const long long l = lcm_ll(dx, dy);
  if (den > kSmallScale / l) return std::nullopt;
  const long long scale = den * l;

  auto closed = [&](Vertex v) {
    std::vector<Vertex> c(g.neighbors(v).begin(), g.neighbors(v).end());
    c.insert(std::lower_bound(c.begin(), c.end(), v), v);
    return c;
  };
  auto mass = [&](Vertex center, long long deg, Vertex v) {
    return v == center ? num * l : (den - num) * (l / deg);
  };
  const auto cx = closed(x);
  const auto cy = closed(y);
  std::vector<Vertex> sv, tv;
  std::vector<long long> supply, demand;
  auto push = [&](Vertex v, long long diff) {
    if (diff > 0) {
      sv.push_back(v);
      supply.push_back(diff);
    } else if (diff < 0) {
      tv.push_back(v);
      demand.push_back(-diff);
    }
  };
  auto i = cx.begin();
  auto j = cy.begin();
  while (i != cx.end() || j != cy.end()) {
    if (j == cy.end() || (i != cx.end() && *i < *j)) {
      push(*i, mass(x, dx, *i));
      ++i;
    } else if (i == cx.end() || *j < *i) {
      push(*j, -mass(y, dy, *j));
      ++j;
    } else {
      push(*i, mass(x, dx, *i) - mass(y, dy, *j));
      ++i;
      ++j;
    }
  }
  if (sv.empty()) return Rational(0);
  std::vector<int> cost;
  cost.reserve(sv.size() * tv.size());
  for (Vertex a : sv) {
    for (Vertex b : tv) cost.push_back(checked_distance(dist, a, b));
  }
  const auto sol = detail::solve_transport<long long>(supply, demand, cost);
  Rational w(BigInt(static_cast<long>(sol.cost)), BigInt(static_cast<long>(scale)));
  w.canonicalize();
  return w;
}

void require_edge(const Graph& g, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y)) {
    throw DomainError("(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
}

}  // namespace

ProbMeasure ProbMeasure::from_masses(std::map<Vertex, Rational> masses) {
  ProbMeasure mu;
  Rational total = 0;
  for (auto& [v, m] : masses) {
    if (m < 0) throw DomainError("negative mass at vertex " + std::to_string(v));
    if (v < 0) throw DomainError("negative vertex index");
    total += m;
    if (m > 0) mu.masses_.emplace(v, std::move(m));
  }
  if (total != 1) throw DomainError("masses sum to " + to_string(total) + ", not 1");
  return mu;
}

ProbMeasure ProbMeasure::point(Vertex v) { return from_masses({{v, Rational(1)}}); }

Rational ProbMeasure::mass(Vertex v) const {
  const auto it = masses_.find(v);
  return it == masses_.end() ? Rational(0) : it->second;
}

ProbMeasure measure_mu(const Graph& g, Vertex x, const Rational& p) {
  if (x < 0 || x >= g.order()) throw DomainError("vertex out of range");
  if (p < 0 || p > 1) throw DomainError("idleness must lie in [0, 1]");
  const int deg = g.degree(x);
  if (deg == 0) throw DomainError("vertex " + std::to_string(x) + " is isolated");
  std::map<Vertex, Rational> masses;
  masses[x] = p;
  Rational share = (Rational(1) - p) / Rational(deg);
  for (Vertex w : g.neighbors(x)) masses[w] = share;
  return ProbMeasure::from_masses(std::move(masses));
}

WassersteinResult wasserstein(const Graph& g, const ProbMeasure& mu1, const ProbMeasure& mu2) {
  return wasserstein(DistanceMatrix(g), mu1, mu2);
}

WassersteinResult wasserstein(const DistanceMatrix& dist, const ProbMeasure& mu1, const ProbMeasure& mu2) {
  check_support(dist, mu1);
  check_support(dist, mu2);
  std::map<Vertex, Rational> src, tgt;
  WassersteinResult out;
  std::vector<Vertex> all;
  for (const auto& [v, m] : mu1.support()) all.push_back(v);
  for (const auto& [v, m] : mu2.support()) all.push_back(v);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (Vertex v : all) {
    const Rational a = mu1.mass(v);
    const Rational b = mu2.mass(v);
    // Mass common to both measures stays put: with a metric cost this never
    // loses optimality.
    const Rational stay = std::min(a, b);
    if (stay > 0) out.plan.entries.emplace(Edge{v, v}, stay);
    if (a > b) src.emplace(v, a - b);
    if (b > a) tgt.emplace(v, b - a);
  }
  const auto moved = solve_masses(dist, src, tgt);
  for (const auto& [e, m] : moved.plan) out.plan.entries.emplace(e, m);
  out.plan.cost = moved.cost;
  out.distance = moved.cost;

  // McShane extension of the source potentials: 1-Lipschitz by construction
  // and equal to the LP dual on both residual supports.
  for (Vertex z : all) {
    long long best = 0;
    bool first = true;
    for (const auto& [i, ui] : moved.source_potential) {
      const long long candidate = ui + checked_distance(dist, i, z);
      if (first || candidate < best) best = candidate;
      first = false;
    }
    out.potential[z] = best;
  }
  audit_wasserstein(dist, mu1, mu2, out);
  return out;
}

void audit_wasserstein(const DistanceMatrix& dist, const ProbMeasure& mu1, const ProbMeasure& mu2,
                       const WassersteinResult& result) {
  auto fail = [](const std::string& what) { throw InternalError("wasserstein audit failed: " + what); };
  std::map<Vertex, Rational> row, col;
  Rational cost = 0;
  for (const auto& [e, m] : result.plan.entries) {
    if (m <= 0) fail("non-positive plan entry");
    row[e.first] += m;
    col[e.second] += m;
    cost += m * checked_distance(dist, e.first, e.second);
  }
  if (row != mu1.support()) fail("source marginals");
  if (col != mu2.support()) fail("target marginals");
  if (cost != result.plan.cost || cost != result.distance) fail("plan cost");

  auto f = [&](Vertex v) {
    const auto it = result.potential.find(v);
    if (it == result.potential.end()) fail("potential missing at vertex " + std::to_string(v));
    return it->second;
  };
  for (const auto& [a, fa] : result.potential) {
    for (const auto& [b, fb] : result.potential) {
      if (fb - fa > checked_distance(dist, a, b)) fail("potential is not 1-Lipschitz");
    }
  }
  for (const auto& [e, m] : result.plan.entries) {
    if (f(e.second) - f(e.first) != checked_distance(dist, e.first, e.second)) fail("complementary slackness");
  }
  Rational dual = 0;
  for (const auto& [v, m] : mu2.support()) dual += m * Rational(BigInt(static_cast<long>(f(v))));
  for (const auto& [v, m] : mu1.support()) dual -= m * Rational(BigInt(static_cast<long>(f(v))));
  if (dual != result.distance) fail("duality gap");
}

Rational kappa_p(const Graph& g, Vertex x, Vertex y, const Rational& p) {
  return kappa_p(g, DistanceMatrix(g), x, y, p);
}

Rational kappa_p(const Graph& g, const DistanceMatrix& dist, Vertex x, Vertex y, const Rational& p) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw DomainError("vertex out of range");
  if (x == y) throw DomainError("kappa_p needs two distinct vertices");
  if (p < 0 || p > 1) throw DomainError("idleness must lie in [0, 1]");
  const int dxy = checked_distance(dist, x, y);
  if (g.degree(x) == 0 || g.degree(y) == 0) throw DomainError("isolated vertex");
  auto w = lazy_walk_distance(g, dist, x, y, p);
  if (!w) w = wasserstein(dist, measure_mu(g, x, p), measure_mu(g, y, p)).distance;
  return Rational(1) - *w / Rational(dxy);
}

EdgeCurvature lly_curvature(const Graph& g, Vertex x, Vertex y) { return lly_curvature(g, DistanceMatrix(g), x, y); }

EdgeCurvature lly_curvature(const Graph& g, const DistanceMatrix& dist, Vertex x, Vertex y) {
  require_edge(g, x, y);
  const long long l = lcm_ll(g.degree(x), g.degree(y));
  EdgeCurvature out;
  out.x = x;
  out.y = y;
  auto& cert = out.certificate;
  cert.p1 = Rational(BigInt(static_cast<long>(l)), BigInt(static_cast<long>(l + 1)));
  cert.p2 = Rational(BigInt(static_cast<long>(2 * l + 1)), BigInt(static_cast<long>(2 * l + 2)));
  cert.kappa_p1 = kappa_p(g, dist, x, y, cert.p1);
  cert.kappa_p2 = kappa_p(g, dist, x, y, cert.p2);
  const Rational slope1 = cert.kappa_p1 / (Rational(1) - cert.p1);
  const Rational slope2 = cert.kappa_p2 / (Rational(1) - cert.p2);
  if (slope1 != slope2) {
    throw InternalError("curvature certificate failed on edge (" + std::to_string(x) + "," + std::to_string(y) +
                        "): " + to_string(slope1) + " vs " + to_string(slope2));
  }
  out.kappa = slope1;
  return out;
}

CurvatureReport curvature_report(const Graph& g, unsigned threads) {
  require_connected(g);
  const auto edges = g.edges();
  if (edges.empty()) throw DomainError("curvature report needs at least one edge");
  const DistanceMatrix dist(g, threads);
  CurvatureReport report;
  report.edges.resize(edges.size());
  detail::parallel_for(edges.size(), threads, [&](std::size_t i) {
    report.edges[i] = lly_curvature(g, dist, edges[i].first, edges[i].second);
  });
  report.kappa_min = report.edges.front().kappa;
  report.kappa_max = report.edges.front().kappa;
  for (const auto& e : report.edges) {
    report.kappa_min = std::min(report.kappa_min, e.kappa);
    report.kappa_max = std::max(report.kappa_max, e.kappa);
  }
  return report;
}

bool verify_simple_plan(const Graph& g, Vertex x, Vertex y, const Rational& p) {
  require_edge(g, x, y);
  const int dx = g.degree(x);
  const int dy = g.degree(y);
  if (dx < dy) throw DomainError("verify_simple_plan needs deg(x) >= deg(y)");
  if (p > 1 || p < Rational(1, static_cast<unsigned long>(1 + dy))) {
    throw DomainError("idleness must lie in [1/(1+deg(y)), 1]");
  }
  const DistanceMatrix dist(g);
  const auto mux = measure_mu(g, x, p);
  const auto muy = measure_mu(g, y, p);
  const Rational unrestricted = wasserstein(dist, mux, muy).distance;

  const Rational fixed = p - (Rational(1) - p) / Rational(dy);
  std::map<Vertex, Rational> src, tgt;
  std::vector<Vertex> all;
  for (const auto& [v, m] : mux.support()) all.push_back(v);
  for (const auto& [v, m] : muy.support()) all.push_back(v);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (Vertex v : all) {
    const Rational a = mux.mass(v);
    const Rational b = muy.mass(v);
    const Rational stay = std::min(a, b);
    Rational out_mass = a - stay - (v == x ? fixed : Rational(0));
    Rational in_mass = b - stay - (v == y ? fixed : Rational(0));
    if (out_mass < 0 || in_mass < 0) return false;
    if (out_mass > 0) src.emplace(v, out_mass);
    if (in_mass > 0) tgt.emplace(v, in_mass);
  }
  const Rational restricted = fixed * dist(x, y) + solve_masses(dist, src, tgt).cost;
  return restricted == unrestricted;
}

}  // namespace lly
