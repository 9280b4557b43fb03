#pragma once

// Randomized and exhaustive suites shared by the doctest binaries and the
// acceptance runner. Each returns the number of checks and every failure.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lly/families.hpp"
#include "lly/graph6.hpp"
#include "lly/regularity.hpp"
#include "lly/spectra.hpp"
#include "lly/transport.hpp"
#include "lly/verify.hpp"
#include "oracle/curvature_oracle.hpp"
#include "oracle/lp_oracle.hpp"
#include "oracle/small_graphs.hpp"

namespace suites {

using lly::Graph;
using lly::Rational;

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && checks > 0; }
  void expect(bool cond, const std::function<std::string()>& what) {
    ++checks;
    if (!cond && failures.size() < 20) failures.push_back(what());
  }
  std::string summary() const {
    std::ostringstream s;
    s << checks << " checks, " << failures.size() << " failures";
    for (const auto& f : failures) s << "\n    " << f;
    return s.str();
  }
};

inline Graph to_graph(const oracle::SmallGraph& g) { return Graph::from_edges(g.n, g.edges); }

inline std::vector<oracle::Q> dense(const lly::ProbMeasure& m, int n) {
  std::vector<oracle::Q> out(static_cast<std::size_t>(n), 0);
  for (const auto& [v, mass] : m.support()) out[static_cast<std::size_t>(v)] = mass;
  return out;
}

/// Random measure on 1..max_support distinct vertices with weights 1..9.
inline lly::ProbMeasure random_measure(int n, int max_support, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_d(1, std::min(n, max_support));
  std::uniform_int_distribution<int> vert(0, n - 1);
  std::uniform_int_distribution<int> weight(1, 9);
  const int k = size_d(rng);
  std::map<lly::Vertex, long long> w;
  while (static_cast<int>(w.size()) < k) w[vert(rng)] = weight(rng);
  long long total = 0;
  for (const auto& [v, x] : w) total += x;
  std::map<lly::Vertex, Rational> masses;
  for (const auto& [v, x] : w) masses[v] = lly::make_rational(x, total);
  return lly::ProbMeasure::from_masses(masses);
}

inline Graph random_connected_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  for (;;) {
    std::vector<lly::Edge> e;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) e.emplace_back(i, j);
      }
    }
    Graph g = Graph::from_edges(n, e);
    if (lly::is_connected(g)) return g;
  }
}

/// Corpus graphs with at most `max_order` vertices plus random connected
/// graphs, some of them irregular.
inline std::vector<Graph> property_pool(int max_order, int random_count, std::mt19937_64& rng) {
  std::vector<Graph> pool;
  for (const auto& e : lly::standard_corpus()) {
    if (e.graph.order() <= max_order) pool.push_back(e.graph);
  }
  std::uniform_int_distribution<int> size(4, 12);
  for (int i = 0; i < random_count; ++i) pool.push_back(random_connected_graph(size(rng), 0.35, rng));
  return pool;
}

// ---------------------------------------------------------------------------
// Oracle equivalence on every connected graph up to `max_order` vertices.

inline Outcome oracle_equivalence(int max_order, int sweep_samples, unsigned seed = 11) {
  Outcome out;
  std::mt19937_64 rng(seed);
  // connected graphs on 1..6 vertices up to isomorphism
  const std::size_t known[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= max_order; ++n) {
    const auto graphs = oracle::connected_graphs(n);
    if (n <= 6) {
      out.expect(graphs.size() == known[n], [&] {
        return "n=" + std::to_string(n) + ": " + std::to_string(graphs.size()) + " connected graphs";
      });
    }
    for (const auto& sg : graphs) {
      const Graph g = to_graph(sg);
      const lly::DistanceMatrix dist(g);
      const auto od = oracle::distances(oracle::adjacency(n, sg.edges));
      const auto a = oracle::adjacency(n, sg.edges);
      auto compare = [&](const lly::ProbMeasure& m1, const lly::ProbMeasure& m2, const std::string& what) {
        const Rational lib = lly::wasserstein(dist, m1, m2).distance;
        const Rational ref = oracle::transport_oracle(od, dense(m1, n), dense(m2, n));
        out.expect(lib == ref, [&] {
          return what + " on " + lly::graph6_encode(g) + ": " + lly::to_string(lib) + " vs oracle " +
                 lly::to_string(ref);
        });
      };
      for (int i = 0; i < 2; ++i) compare(random_measure(n, 4, rng), random_measure(n, 4, rng), "random measures");
      for (const auto& [x, y] : g.edges()) {
        const int l = std::lcm(g.degree(x), g.degree(y));
        for (const Rational& p : {Rational(0), lly::make_rational(1, 2), lly::make_rational(l, l + 1)}) {
          compare(lly::measure_mu(g, x, p), lly::measure_mu(g, y, p), "mu at p=" + lly::to_string(p));
        }
        const double kappa = lly::to_double(lly::lly_curvature(g, dist, x, y).kappa);
        const double slope = oracle::sweep_slope(a, od, x, y, sweep_samples);
        out.expect(std::abs(kappa - slope) <= 1e-9, [&] {
          return "curvature of (" + std::to_string(x) + "," + std::to_string(y) + ") on " + lly::graph6_encode(g) +
                 ": " + std::to_string(kappa) + " vs sweep " + std::to_string(slope);
        });
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// W1 metric axioms, plan marginals and zero duality gap.

inline void check_solution(Outcome& out, const lly::DistanceMatrix& dist, const lly::ProbMeasure& a,
                           const lly::ProbMeasure& b, const lly::WassersteinResult& r) {
  std::map<lly::Vertex, Rational> rows, cols;
  Rational cost = 0;
  bool positive = true;
  for (const auto& [e, mass] : r.plan.entries) {
    rows[e.first] += mass;
    cols[e.second] += mass;
    cost += mass * dist(e.first, e.second);
    positive = positive && mass > 0;
  }
  bool marginals = positive;
  for (const auto& [v, m] : a.support()) marginals = marginals && rows[v] == m;
  for (const auto& [v, m] : b.support()) marginals = marginals && cols[v] == m;
  marginals = marginals && rows.size() == a.support().size() && cols.size() == b.support().size();
  out.expect(marginals, [] { return std::string("plan marginals differ from the measures"); });
  out.expect(cost == r.distance, [] { return std::string("plan cost differs from the reported distance"); });

  Rational dual = 0;
  for (const auto& [v, f] : r.potential) dual += Rational(lly::to_big(f)) * (b.mass(v) - a.mass(v));
  bool lipschitz = true;
  for (const auto& [u, fu] : r.potential) {
    for (const auto& [v, fv] : r.potential) lipschitz = lipschitz && fv - fu <= dist(u, v);
  }
  out.expect(lipschitz && dual == r.distance, [] { return std::string("duality gap is not zero"); });
}

inline Outcome metric_triples(int count, unsigned seed = 3) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const auto pool = property_pool(30, 20, rng);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < count; ++t) {
    const Graph& g = pool[pick(rng)];
    const lly::DistanceMatrix dist(g);
    const auto a = random_measure(g.order(), 6, rng);
    const auto b = random_measure(g.order(), 6, rng);
    const auto c = random_measure(g.order(), 6, rng);
    const auto ab = lly::wasserstein(dist, a, b);
    const auto ba = lly::wasserstein(dist, b, a);
    const auto bc = lly::wasserstein(dist, b, c);
    const auto ac = lly::wasserstein(dist, a, c);
    out.expect(ab.distance == ba.distance, [&] { return "asymmetric W1 on triple " + std::to_string(t); });
    out.expect(ac.distance <= ab.distance + bc.distance, [&] { return "triangle inequality fails on triple " + std::to_string(t); });
    out.expect(lly::wasserstein(dist, a, a).distance == 0, [&] { return "W1(a, a) != 0 on triple " + std::to_string(t); });
    check_solution(out, dist, a, b, ab);
    check_solution(out, dist, b, c, bc);
    check_solution(out, dist, a, c, ac);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Concavity of p -> kappa_p.

inline Outcome concavity(int count, unsigned seed = 5) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const auto pool = property_pool(64, 20, rng);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> grid(0, 48);
  for (int t = 0; t < count; ++t) {
    const Graph& g = pool[pick(rng)];
    const auto edges = g.edges();
    const auto [x, y] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    int k[3];
    do {
      for (int& v : k) v = grid(rng);
      std::sort(std::begin(k), std::end(k));
    } while (k[0] == k[1] || k[1] == k[2]);
    const Rational p1 = lly::make_rational(k[0], 48), p2 = lly::make_rational(k[1], 48),
                   p3 = lly::make_rational(k[2], 48);
    const lly::DistanceMatrix dist(g);
    const Rational k1 = lly::kappa_p(g, dist, x, y, p1);
    const Rational k2 = lly::kappa_p(g, dist, x, y, p2);
    const Rational k3 = lly::kappa_p(g, dist, x, y, p3);
    const Rational chord = ((p3 - p2) * k1 + (p2 - p1) * k3) / (p3 - p1);
    out.expect(k2 >= chord, [&] {
      return "kappa_p not concave at p=" + lly::to_string(p1) + "," + lly::to_string(p2) + "," + lly::to_string(p3);
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simple transport plans are optimal on the admissible p range.

inline Outcome simple_plans(int count, unsigned seed = 9) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const auto pool = property_pool(64, 20, rng);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> step(0, 60);
  for (int t = 0; t < count; ++t) {
    const Graph& g = pool[pick(rng)];
    const auto edges = g.edges();
    auto [x, y] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    if (g.degree(x) < g.degree(y)) std::swap(x, y);
    const Rational lo = lly::make_rational(1, g.degree(y) + 1);
    const Rational p = lo + (1 - lo) * lly::make_rational(step(rng), 60);
    out.expect(lly::verify_simple_plan(g, x, y, p), [&] {
      return "simple plan not optimal at p=" + lly::to_string(p) + " on (" + std::to_string(x) + "," +
             std::to_string(y) + ")";
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Curvature upper bounds on every applicable corpus edge.

inline Outcome edge_bounds(const std::vector<lly::CorpusEntry>& corpus) {
  Outcome out;
  for (const auto& [label, g] : corpus) {
    const auto deg = lly::regular_degree(g);
    if (!deg) continue;
    const auto report = lly::curvature_report(g);
    for (const auto& e : report.edges) {
      const Rational bound = Rational(2 + lly::common_neighbor_count(g, e.x, e.y)) / *deg;
      out.expect(e.kappa <= bound, [&] { return label + ": kappa exceeds (2+|N_xy|)/d"; });
    }
    const auto params = lly::amply_params(g);
    const auto* p = lly::accepted(params);
    if (!p || !std::holds_alternative<lly::TerwilligerYes>(lly::is_terwilliger(g))) continue;
    const Rational bound = Rational(2 * p->alpha + 3 - p->d) / p->d;
    for (const auto& e : report.edges) {
      out.expect(e.kappa <= bound, [&] { return label + ": kappa exceeds (2 alpha + 3 - d)/d"; });
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strongly regular identity, lambda1 bound and its rigidity.

inline Outcome srg_identity_and_rigidity(const std::vector<lly::CorpusEntry>& corpus, int* srg_count = nullptr) {
  Outcome out;
  int count = 0;
  for (const auto& [label, g] : corpus) {
    const auto params = lly::amply_params(g);
    const auto* p = lly::accepted(params);
    if (!p || lly::diameter(g) != 2) continue;
    ++count;
    const auto [n, d, alpha, beta] = *p;
    out.expect(Rational(n - d - 1) == lly::make_rational(d * (d - alpha - 1), beta),
               [&] { return label + ": n - d - 1 != d(d - alpha - 1)/beta"; });
    const auto closed = lly::srg_closed_form(*p);
    const double numeric = lly::adjacency_spectrum(g, false).lambda1;
    out.expect(std::abs(closed.lambda1.to_double() - numeric) <= 1e-9,
               [&] { return label + ": closed-form lambda1 disagrees with the dense spectrum"; });
    if (n == 5) continue;  // the pentagon is the exception to the bound
    const lly::QuadSurd bound(lly::make_rational(2 + alpha, d));
    out.expect(closed.lambda1 >= bound, [&] { return label + ": lambda1 < (2+alpha)/d"; });
    const bool equal = closed.lambda1 == bound;
    out.expect(equal == (d == 2 * alpha - beta + 4), [&] {
      return label + ": equality in lambda1 >= (2+alpha)/d is " + (equal ? "attained" : "missed") +
             " but d = 2 alpha - beta + 4 is " + (d == 2 * alpha - beta + 4 ? "true" : "false");
    });
  }
  if (srg_count) *srg_count = count;
  return out;
}

// ---------------------------------------------------------------------------
// Trace identities of the computed spectrum.

inline Outcome trace_identities(const std::vector<lly::CorpusEntry>& corpus) {
  Outcome out;
  for (const auto& [label, g] : corpus) {
    const auto s = lly::adjacency_spectrum(g, false);
    double lap = 0;
    for (double x : s.laplacian) lap += x;
    out.expect(std::abs(lap - g.order()) <= 1e-8, [&] { return label + ": trace of L != n"; });
    if (!s.degree) continue;
    double t1 = 0, t2 = 0, t3 = 0;
    for (double x : s.adjacency) {
      t1 += x;
      t2 += x * x;
      t3 += x * x * x;
    }
    long long triangles = 0;
    for (const auto& [u, v] : g.edges()) triangles += lly::common_neighbor_count(g, u, v);
    triangles /= 3;
    const double scale = static_cast<double>(g.order()) * *s.degree * *s.degree;
    out.expect(std::abs(t1) <= 1e-8 * g.order(), [&] { return label + ": trace A != 0"; });
    out.expect(std::abs(t2 - 2.0 * g.size()) <= 1e-9 * scale, [&] { return label + ": trace A^2 != 2m"; });
    out.expect(std::abs(t3 - 6.0 * triangles) <= 1e-9 * scale * *s.degree,
               [&] { return label + ": trace A^3 != 6 triangles"; });
    // distinct eigenvalues of the corpus are well separated
    for (std::size_t i = 1; i < s.distinct.size(); ++i) {
      out.expect(s.distinct[i - 1].first - s.distinct[i].first > 1e-2,
                 [&] { return label + ": eigenvalue clusters closer than 1e-2"; });
    }
  }
  return out;
}

}  // namespace suites
