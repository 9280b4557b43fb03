#pragma once

#include <map>
#include <vector>

#include "lly/graph.hpp"
#include "lly/rational.hpp"

namespace lly {

/// Finitely supported probability measure with exact rational masses.
/// Only strictly positive masses are stored; the total is exactly one.
class ProbMeasure {
public:
  ProbMeasure() = default;

  /// Drops zero entries; throws DomainError on a negative mass or a total
  /// different from one.
  static ProbMeasure from_masses(std::map<Vertex, Rational> masses);
  static ProbMeasure point(Vertex v);

  const std::map<Vertex, Rational>& support() const { return masses_; }
  Rational mass(Vertex v) const;

  bool operator==(const ProbMeasure&) const = default;

private:
  std::map<Vertex, Rational> masses_;
};

struct TransportPlan {
  std::map<Edge, Rational> entries;  ///< (source vertex, target vertex) -> mass
  Rational cost;
};

/// Optimal value, an optimal plan, and an integer Kantorovich potential f
/// on the union of both supports with f(b) - f(a) <= d(a, b) everywhere,
/// equality wherever the plan moves mass, and
/// sum f * (target - source) == distance.
struct WassersteinResult {
  Rational distance;
  TransportPlan plan;
  std::map<Vertex, long long> potential;
};

/// mu_x^p: mass p at x and (1-p)/deg(x) on every neighbor.
ProbMeasure measure_mu(const Graph& g, Vertex x, const Rational& p);

/// Exact W1 under hop distance. Throws DomainError when the supports do not
/// lie in one component.
WassersteinResult wasserstein(const Graph& g, const ProbMeasure& mu1, const ProbMeasure& mu2);
WassersteinResult wasserstein(const DistanceMatrix& dist, const ProbMeasure& mu1, const ProbMeasure& mu2);

/// Re-checks marginals, cost, dual feasibility, complementary slackness and
/// the zero duality gap in exact arithmetic. Throws InternalError.
void audit_wasserstein(const DistanceMatrix& dist, const ProbMeasure& mu1, const ProbMeasure& mu2,
                       const WassersteinResult& result);

/// kappa_p(x, y) = 1 - W1(mu_x^p, mu_y^p) / d(x, y). Throws DomainError for
/// x == y and DisconnectedError when y is unreachable from x.
Rational kappa_p(const Graph& g, Vertex x, Vertex y, const Rational& p);
Rational kappa_p(const Graph& g, const DistanceMatrix& dist, Vertex x, Vertex y, const Rational& p);

/// Two samples (p, kappa_p) whose chords through (1, 0) have equal slope.
struct CurvatureCertificate {
  Rational p1, kappa_p1;
  Rational p2, kappa_p2;
};

struct EdgeCurvature {
  Vertex x = 0;
  Vertex y = 0;
  Rational kappa;
  CurvatureCertificate certificate;
};

/// Lin-Lu-Yau curvature of the edge xy, evaluated as kappa_p / (1 - p) at
/// p = L/(L+1) with L = lcm(deg x, deg y) and confirmed at p = (2L+1)/(2L+2).
/// Throws DomainError for a non-edge and InternalError if the two samples
/// disagree.
EdgeCurvature lly_curvature(const Graph& g, Vertex x, Vertex y);
EdgeCurvature lly_curvature(const Graph& g, const DistanceMatrix& dist, Vertex x, Vertex y);

struct CurvatureReport {
  std::vector<EdgeCurvature> edges;  ///< one per edge, in Graph::edges() order
  Rational kappa_min;
  Rational kappa_max;
};

/// Curvature of every edge. Throws DisconnectedError for disconnected input
/// and DomainError for an edgeless graph.
CurvatureReport curvature_report(const Graph& g, unsigned threads = 1);

/// Whether the optimum over plans with pi(x, y) = p - (1-p)/deg(y) and
/// pi(v, v) = min(mu_x^p(v), mu_y^p(v)) equals the unrestricted optimum.
/// Requires an edge with deg(x) >= deg(y) and 1/(1+deg(y)) <= p <= 1.
bool verify_simple_plan(const Graph& g, Vertex x, Vertex y, const Rational& p);

}  // namespace lly
