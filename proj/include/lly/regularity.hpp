#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lly/graph.hpp"
#include "lly/rational.hpp"

namespace lly {

/// Parameters (n, d, alpha, beta) of an amply regular graph: d-regular on n
/// vertices, adjacent pairs share alpha neighbors, distance-2 pairs share
/// beta.
struct AmplyParams {
  int n = 0;
  int d = 0;
  int alpha = 0;
  int beta = 0;

  bool operator==(const AmplyParams&) const = default;
  std::string to_string() const;
};

/// {b_0, ..., b_{D-1}; c_1, ..., c_D}.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  int diameter() const { return static_cast<int>(b.size()); }
  int degree() const { return b.empty() ? 0 : b.front(); }
  /// b_i with b_D = 0.
  int b_at(int i) const;
  /// c_i with c_0 = 0.
  int c_at(int i) const;
  /// a_i = b_0 - b_i - c_i.
  int a_at(int i) const;

  /// Checks c_1 = 1, positivity, and a_i >= 0; throws DomainError.
  void validate() const;

  bool operator==(const IntersectionArray&) const = default;
  std::string to_string() const;
};

struct TerwilligerYes {
  int beta;
};

/// Quotient by x == y iff the closed neighborhoods agree.
struct ReducedGraph {
  Graph graph;
  std::vector<int> class_sizes;  ///< indexed by class
  std::vector<int> class_of;     ///< indexed by original vertex
};

struct ReducedLocalParams {
  int s = 0;
  Rational n_bar, d_bar, alpha_bar, beta_bar;
};

/// d if every vertex has degree d.
std::optional<int> regular_degree(const Graph& g);

/// Rejects with a witness when the graph is disconnected, complete,
/// irregular, or a pair count varies.
std::variant<AmplyParams, Rejection> amply_params(const Graph& g);

/// Works for complete graphs too ({n-1; 1}).
std::variant<IntersectionArray, Rejection> intersection_array(const Graph& g);

/// Every distance-2 pair's common neighborhood must be a clique of one fixed
/// size. Throws DomainError for disconnected or complete input.
std::variant<TerwilligerYes, Rejection> is_terwilliger(const Graph& g);

ReducedGraph reduce_quotient(const Graph& g);

/// Local parameters of the reduced graph of G(gamma) for an amply regular
/// Terwilliger graph with beta > 1. All integrality and divisibility side
/// conditions are asserted; the observed parameters of the reduced local
/// graph must agree with the formulas. Throws DomainError when the
/// hypotheses fail and InternalError when a conclusion does.
ReducedLocalParams reduced_local_params(const Graph& g, Vertex gamma);

/// Root graph H with line_graph(H) isomorphic to G, recovered from the
/// decomposition of every local graph into at most two disjoint cliques.
/// Only meant for graphs whose roots are triangle-free; nullopt otherwise.
std::optional<Graph> line_graph_root(const Graph& g);

template <typename T>
const T* accepted(const std::variant<T, Rejection>& v) {
  return std::get_if<T>(&v);
}
template <typename T>
const T* accepted(const std::variant<T, Rejection>&& v) = delete;

}  // namespace lly
