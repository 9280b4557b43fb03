#pragma once

#include <vector>

#include "lly/rational.hpp"

namespace lly::detail {

/// Optimal solution of a balanced transportation problem with integer
/// supplies, demands and costs, together with the dual potentials that
/// certify it.
template <typename Int>
struct TransportSolution {
  struct Flow {
    int source;
    int target;
    Int amount;
  };
  std::vector<Flow> flows;
  std::vector<long long> source_potential;
  std::vector<long long> target_potential;
  Int cost;
};

/// Successive shortest paths with Dijkstra on reduced costs.
///
/// `cost` is row-major, sources x targets, all entries non-negative. Total
/// supply must equal total demand and every supply/demand must be positive.
/// The returned solution has already passed `audit_transport_solution`.
template <typename Int>
TransportSolution<Int> solve_transport(const std::vector<Int>& supply, const std::vector<Int>& demand,
                                       const std::vector<int>& cost);

/// Primal feasibility, dual feasibility (v_j - u_i <= c_ij), complementary
/// slackness and a zero duality gap. Throws InternalError on any violation.
template <typename Int>
void audit_transport_solution(const std::vector<Int>& supply, const std::vector<Int>& demand,
                              const std::vector<int>& cost, const TransportSolution<Int>& solution);

}  // namespace lly::detail
