#include "lly/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "exact_linalg.hpp"
#include "lly/error.hpp"

namespace lly {
namespace {

// Numerically computed quantities are treated as integers within this.
constexpr double kIntegerSnap = 1e-6;
constexpr double kResidualLimit = 1e-9;

std::optional<long> near_integer(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) > kIntegerSnap || std::abs(r) > 1e15) return std::nullopt;
  return static_cast<long>(r);
}

std::vector<BigInt> integer_matrix(const Graph& g, const BigInt& adjacency_scale, const std::vector<BigInt>& diagonal) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<BigInt> m(n * n, BigInt(0));
  for (std::size_t v = 0; v < n; ++v) {
    m[v * n + v] = diagonal[v];
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) m[v * n + static_cast<std::size_t>(w)] = adjacency_scale;
  }
  return m;
}

EigenCertificate certificate_from_rank(int n, int rank) {
  EigenCertificate c;
  c.nullity = n - rank;
  c.is_eigenvalue = c.nullity > 0;
  return c;
}

using Poly = std::vector<BigInt>;  // constant term first

Poly poly_mul_linear(const Poly& p, const BigInt& shift) {  // p * (x - shift)
  Poly out(p.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= shift * p[i];
  }
  return out;
}

// Exact division by a monic divisor; nullopt when the remainder is nonzero.
std::optional<Poly> divide_monic(Poly p, const Poly& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (p.size() <= dd) return std::nullopt;
  Poly q(p.size() - dd, BigInt(0));
  for (std::size_t i = p.size(); i-- > dd;) {
    const BigInt coef = p[i];
    q[i - dd] = coef;
    for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= coef * divisor[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (p[i] != 0) return std::nullopt;
  }
  return q;
}

}  // namespace

std::vector<std::pair<double, int>> cluster_eigenvalues(const std::vector<double>& descending) {
  std::vector<std::pair<double, int>> out;
  double sum = 0;
  double last = 0;
  for (std::size_t i = 0; i < descending.size(); ++i) {
    const double v = descending[i];
    if (i > 0 && last - v < kClusterGap) {
      sum += v;
      ++out.back().second;
      out.back().first = sum / out.back().second;
    } else {
      sum = v;
      out.emplace_back(v, 1);
    }
    last = v;
  }
  return out;
}

SpectrumReport adjacency_spectrum(const Graph& g, bool certify) {
  require_connected(g);
  const int n = g.order();
  if (n < 2) throw DomainError("spectrum needs at least one edge");
  SpectrumReport r;
  r.degree = regular_degree(g);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      m(v, w) = r.degree ? 1.0 : 1.0 / std::sqrt(static_cast<double>(g.degree(v)) * g.degree(w));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw InternalError("symmetric eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  for (int i = 0; i < n; ++i) {
    const double res = (m * vectors.col(i) - values(i) * vectors.col(i)).norm();
    r.max_residual = std::max(r.max_residual, res);
  }
  if (r.max_residual > kResidualLimit) throw InternalError("eigensolver residual above tolerance");
  for (int i = n - 1; i >= 0; --i) r.adjacency.push_back(values(i));
  r.distinct = cluster_eigenvalues(r.adjacency);
  for (int i = 0; i < n; ++i) {
    const double theta = values(n - 1 - i);
    r.laplacian.push_back(r.degree ? 1.0 - theta / *r.degree : 1.0 - theta);
  }
  std::sort(r.laplacian.begin(), r.laplacian.end());
  r.laplacian.front() = std::abs(r.laplacian.front()) < kClusterGap ? 0.0 : r.laplacian.front();
  r.theta1 = r.adjacency[1];
  r.lambda1 = r.laplacian[1];

  if (!certify || !r.degree || r.distinct.size() < 2) return r;
  const int d = *r.degree;
  const auto [theta, mult] = r.distinct[1];
  if (const auto k = near_integer(theta)) {
    if (exact_eigenvalue_certificate(g, Rational(*k)).nullity == mult) r.exact_theta1 = QuadSurd(Rational(*k));
  } else {
    for (std::size_t j = 2; j < r.distinct.size(); ++j) {
      const auto s = near_integer(theta + r.distinct[j].first);
      const auto q = near_integer(theta * r.distinct[j].first);
      if (!s || !q) continue;
      const BigInt disc = BigInt(*s) * *s - 4 * BigInt(*q);
      if (disc <= 0) continue;
      if (quadratic_eigenvalue_certificate(g, BigInt(-*s), BigInt(*q)).nullity != mult + r.distinct[j].second) continue;
      r.exact_theta1 = QuadSurd(make_rational(*s, 2), Rational(1, 2), disc);
      break;
    }
  }
  if (r.exact_theta1) r.exact_lambda1 = QuadSurd(Rational(1)) - *r.exact_theta1 / Rational(d);
  return r;
}

SrgEigenvalues srg_closed_form(const AmplyParams& p) {
  const BigInt disc = BigInt(p.alpha - p.beta) * (p.alpha - p.beta) + 4 * BigInt(p.d - p.beta);
  const Rational half_diff = Rational(p.alpha - p.beta) / 2;
  SrgEigenvalues out;
  out.theta1 = QuadSurd(half_diff, Rational(1, 2), disc);
  out.theta_min = QuadSurd(half_diff, Rational(-1, 2), disc);
  out.lambda1 = QuadSurd(Rational(1)) - out.theta1 / Rational(p.d);
  out.lambda_last = QuadSurd(Rational(1)) - out.theta_min / Rational(p.d);
  return out;
}

QuadSurd divide(const Rational& b, const QuadSurd& t) {
  if (t.sign() == 0) throw DomainError("division by zero");
  if (t.is_rational()) return QuadSurd(b / t.rational_part());
  const Rational& a = t.rational_part();
  const Rational& c = t.surd_coefficient();
  const Rational norm = a * a - c * c * Rational(t.radicand());
  return QuadSurd(b * a / norm, -b * c / norm, t.radicand());
}

DrgAnalysis drg_spectrum(const IntersectionArray& ia) {
  ia.validate();
  const int dm = ia.diameter();
  DrgAnalysis out;
  out.array = ia;

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dm + 1, dm + 1);
  for (int i = 0; i <= dm; ++i) {
    t(i, i) = ia.a_at(i);
    if (i < dm) {
      const double off = std::sqrt(static_cast<double>(ia.b_at(i)) * ia.c_at(i + 1));
      t(i, i + 1) = off;
      t(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  if (solver.info() != Eigen::Success) throw InternalError("tridiagonal eigensolver did not converge");
  for (int i = dm; i >= 0; --i) out.eigenvalues.push_back(solver.eigenvalues()(i));
  out.exact.assign(out.eigenvalues.size(), std::nullopt);

  // det(x I - T) by the three-term recurrence on leading minors.
  Poly prev{BigInt(1)};
  Poly cur = poly_mul_linear(prev, BigInt(ia.a_at(0)));
  for (int k = 1; k <= dm; ++k) {
    Poly next = poly_mul_linear(cur, BigInt(ia.a_at(k)));
    const BigInt w = BigInt(ia.b_at(k - 1)) * ia.c_at(k);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= w * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.characteristic_polynomial = cur;

  Poly rest = cur;
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
    const auto k = near_integer(out.eigenvalues[i]);
    if (!k) continue;
    if (auto q = divide_monic(rest, Poly{BigInt(-*k), BigInt(1)})) {
      rest = std::move(*q);
      out.exact[i] = QuadSurd(Rational(*k));
    }
  }
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
    for (std::size_t j = i + 1; j < out.eigenvalues.size() && !out.exact[i]; ++j) {
      if (out.exact[j]) continue;
      const auto s = near_integer(out.eigenvalues[i] + out.eigenvalues[j]);
      const auto q = near_integer(out.eigenvalues[i] * out.eigenvalues[j]);
      if (!s || !q) continue;
      const BigInt disc = BigInt(*s) * *s - 4 * BigInt(*q);
      if (disc <= 0) continue;
      auto quotient = divide_monic(rest, Poly{BigInt(*q), BigInt(-*s), BigInt(1)});
      if (!quotient) continue;
      rest = std::move(*quotient);
      out.exact[i] = QuadSurd(make_rational(*s, 2), Rational(1, 2), disc);
      out.exact[j] = QuadSurd(make_rational(*s, 2), Rational(-1, 2), disc);
    }
  }

  out.theta1 = out.eigenvalues.size() > 1 ? out.eigenvalues[1] : out.eigenvalues[0];
  const int b1 = ia.b_at(1);
  if (dm < 2) {
    out.b_plus = std::numeric_limits<double>::quiet_NaN();
  } else {
    out.b_plus = b1 / (out.theta1 + 1);
    if (out.exact[1]) out.exact_b_plus = divide(Rational(b1), *out.exact[1] + QuadSurd(Rational(1)));
  }
  return out;
}

SpectrumReport line_graph_spectrum(const SpectrumReport& host, int host_n, int host_m, int host_d) {
  if (host_d < 2) throw DomainError("line graph spectrum needs host degree at least 2");
  if (!host.degree || *host.degree != host_d || static_cast<int>(host.adjacency.size()) != host_n) {
    throw DomainError("host spectrum does not match the stated host parameters");
  }
  if (host_m < host_n) throw DomainError("a connected regular host of degree >= 2 has m >= n");
  SpectrumReport r;
  const int d = 2 * host_d - 2;
  r.degree = d;
  for (double mu : host.adjacency) r.adjacency.push_back(mu + host_d - 2);
  r.adjacency.insert(r.adjacency.end(), static_cast<std::size_t>(host_m - host_n), -2.0);
  std::sort(r.adjacency.begin(), r.adjacency.end(), std::greater<>());
  r.distinct = cluster_eigenvalues(r.adjacency);
  for (double theta : r.adjacency) r.laplacian.push_back(1.0 - theta / d);
  std::sort(r.laplacian.begin(), r.laplacian.end());
  r.theta1 = r.adjacency[1];
  r.lambda1 = r.laplacian[1];
  r.max_residual = host.max_residual;
  if (host.exact_theta1) {
    const QuadSurd shifted = *host.exact_theta1 + QuadSurd(Rational(host_d - 2));
    if (std::abs(shifted.to_double() - r.theta1) < kClusterGap) {
      r.exact_theta1 = shifted;
      r.exact_lambda1 = QuadSurd(Rational(1)) - shifted / Rational(d);
    }
  }
  return r;
}

EigenCertificate exact_eigenvalue_certificate(const Graph& g, const Rational& theta) {
  const int n = g.order();
  const std::vector<BigInt> diag(static_cast<std::size_t>(n), BigInt(-theta.get_num()));
  return certificate_from_rank(n, detail::exact_rank(integer_matrix(g, theta.get_den(), diag), n, n));
}

EigenCertificate laplacian_eigenvalue_certificate(const Graph& g, const Rational& lambda) {
  const int n = g.order();
  const BigInt keep = lambda.get_den() - lambda.get_num();
  std::vector<BigInt> diag;
  for (Vertex v = 0; v < n; ++v) diag.push_back(keep * g.degree(v));
  return certificate_from_rank(n, detail::exact_rank(integer_matrix(g, -lambda.get_den(), diag), n, n));
}

EigenCertificate quadratic_eigenvalue_certificate(const Graph& g, const BigInt& b, const BigInt& c) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<long long> sq(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(u))) {
      for (Vertex v : g.neighbors(w)) ++sq[u * n + static_cast<std::size_t>(v)];
    }
  }
  std::vector<BigInt> m(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) m[u * n + v] = to_big(sq[u * n + v]);
    m[u * n + u] += c;
    for (Vertex w : g.neighbors(static_cast<Vertex>(u))) m[u * n + static_cast<std::size_t>(w)] += b;
  }
  const int order = g.order();
  return certificate_from_rank(order, detail::exact_rank(std::move(m), order, order));
}

}  // namespace lly
