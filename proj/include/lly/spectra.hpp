#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lly/graph.hpp"
#include "lly/rational.hpp"
#include "lly/regularity.hpp"

namespace lly {

/// Eigenvalue clusters closer than this are one eigenvalue with multiplicity.
inline constexpr double kClusterGap = 1e-6;

struct SpectrumReport {
  /// Adjacency eigenvalues, descending, with multiplicity (length n). For an
  /// irregular graph these are the eigenvalues of D^{-1/2} A D^{-1/2}.
  std::vector<double> adjacency;
  /// (value, multiplicity) clusters of `adjacency`, descending.
  std::vector<std::pair<double, int>> distinct;
  /// Normalized Laplacian eigenvalues, ascending.
  std::vector<double> laplacian;
  std::optional<int> degree;  ///< set for regular graphs
  double theta1 = 0;          ///< second largest entry of `adjacency`
  double lambda1 = 0;         ///< smallest nonzero Laplacian eigenvalue
  double max_residual = 0;    ///< max |A v - theta v| over the computed eigenpairs
  /// Exact theta1 and lambda1, each backed by an exact nullity count that
  /// equals the numeric multiplicity.
  std::optional<QuadSurd> exact_theta1;
  std::optional<QuadSurd> exact_lambda1;
};

/// Dense symmetric eigendecomposition plus an exact certificate for theta1
/// when it is an integer or a quadratic irrational (regular graphs only,
/// skipped when `certify` is false). Throws DisconnectedError.
SpectrumReport adjacency_spectrum(const Graph& g, bool certify = true);

/// Clusters a descending list at gap kClusterGap.
std::vector<std::pair<double, int>> cluster_eigenvalues(const std::vector<double>& descending);

struct SrgEigenvalues {
  QuadSurd theta1;       ///< second largest adjacency eigenvalue
  QuadSurd theta_min;    ///< smallest adjacency eigenvalue
  QuadSurd lambda1;      ///< smallest nonzero Laplacian eigenvalue
  QuadSurd lambda_last;  ///< largest Laplacian eigenvalue
};

/// Closed-form eigenvalues of a strongly regular graph with these parameters.
SrgEigenvalues srg_closed_form(const AmplyParams& params);

struct DrgAnalysis {
  IntersectionArray array;
  /// D+1 distinct eigenvalues of the tridiagonal intersection matrix,
  /// descending; `exact[i]` is set when the characteristic polynomial splits
  /// off a rational or quadratic factor containing eigenvalue i.
  std::vector<double> eigenvalues;
  std::vector<std::optional<QuadSurd>> exact;
  double theta1 = 0;
  double b_plus = 0;  ///< b_1 / (theta1 + 1); NaN for diameter 1
  std::optional<QuadSurd> exact_b_plus;
  /// Integer coefficients of det(x I - T), constant term first.
  std::vector<BigInt> characteristic_polynomial;
};

DrgAnalysis drg_spectrum(const IntersectionArray& ia);

/// Spectrum of L(H) from the spectrum of a connected d-regular host H with
/// n vertices and m edges: mu + d - 2 for each host eigenvalue mu, plus -2
/// with multiplicity m - n. Throws DomainError if d < 2.
SpectrumReport line_graph_spectrum(const SpectrumReport& host, int host_n, int host_m, int host_d);

struct EigenCertificate {
  bool is_eigenvalue = false;
  int nullity = 0;
};

/// Nullity of A - theta I, by exact fraction-free elimination.
EigenCertificate exact_eigenvalue_certificate(const Graph& g, const Rational& theta);

/// Nullity of L - lambda I for the normalized Laplacian, computed exactly as
/// the nullity of (1 - lambda) D - A.
EigenCertificate laplacian_eigenvalue_certificate(const Graph& g, const Rational& lambda);

/// Nullity of A^2 + b A + c I: the combined multiplicity of both roots of
/// x^2 + b x + c.
EigenCertificate quadratic_eigenvalue_certificate(const Graph& g, const BigInt& b, const BigInt& c);

/// Exact b / t for a nonzero quadratic irrational t.
QuadSurd divide(const Rational& b, const QuadSurd& t);

}  // namespace lly
