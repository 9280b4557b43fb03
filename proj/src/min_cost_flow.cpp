#include "min_cost_flow.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lly/error.hpp"

namespace lly::detail {
namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

template <typename Int>
bool positive(const Int& x) {
  return x > 0;
}

}  // namespace

template <typename Int>
TransportSolution<Int> solve_transport(const std::vector<Int>& supply, const std::vector<Int>& demand,
                                       const std::vector<int>& cost) {
  const int ns = static_cast<int>(supply.size());
  const int nt = static_cast<int>(demand.size());
  if (static_cast<std::size_t>(ns) * static_cast<std::size_t>(nt) != cost.size()) {
    throw InternalError("transport cost matrix has the wrong shape");
  }
  Int total_supply = 0, total_demand = 0;
  for (const auto& s : supply) total_supply += s;
  for (const auto& t : demand) total_demand += t;
  if (total_supply != total_demand) throw InternalError("unbalanced transportation problem");

  // Nodes: 0 = super source, 1..ns sources, ns+1..ns+nt targets, ns+nt+1 = sink.
  const int nodes = ns + nt + 2;
  const int sink = nodes - 1;
  auto src = [](int i) { return 1 + i; };
  auto tgt = [ns](int j) { return 1 + ns + j; };
  auto c = [&](int i, int j) { return static_cast<long long>(cost[static_cast<std::size_t>(i * nt + j)]); };

  std::vector<Int> out_of_source(static_cast<std::size_t>(ns), Int(0));
  std::vector<Int> into_sink(static_cast<std::size_t>(nt), Int(0));
  std::vector<Int> flow(static_cast<std::size_t>(ns * nt), Int(0));
  auto f = [&](int i, int j) -> Int& { return flow[static_cast<std::size_t>(i * nt + j)]; };

  std::vector<long long> phi(static_cast<std::size_t>(nodes), 0);
  std::vector<long long> dist(static_cast<std::size_t>(nodes));
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::vector<char> done(static_cast<std::size_t>(nodes));

  Int shipped = 0;
  while (shipped < total_supply) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(done.begin(), done.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    dist[0] = 0;
    for (;;) {
      int u = -1;
      for (int v = 0; v < nodes; ++v) {
        if (!done[static_cast<std::size_t>(v)] && dist[static_cast<std::size_t>(v)] < kInf &&
            (u == -1 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(u)])) {
          u = v;
        }
      }
      if (u == -1 || u == sink) break;
      done[static_cast<std::size_t>(u)] = 1;
      const long long du = dist[static_cast<std::size_t>(u)];
      auto relax = [&](int v, long long arc_cost) {
        const long long nd = du + arc_cost + phi[static_cast<std::size_t>(u)] - phi[static_cast<std::size_t>(v)];
        if (nd < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = nd;
          parent[static_cast<std::size_t>(v)] = u;
        }
      };
      if (u == 0) {
        for (int i = 0; i < ns; ++i) {
          if (out_of_source[static_cast<std::size_t>(i)] < supply[static_cast<std::size_t>(i)]) relax(src(i), 0);
        }
      } else if (u <= ns) {
        const int i = u - 1;
        if (positive(out_of_source[static_cast<std::size_t>(i)])) relax(0, 0);
        for (int j = 0; j < nt; ++j) relax(tgt(j), c(i, j));
      } else if (u < sink) {
        const int j = u - 1 - ns;
        for (int i = 0; i < ns; ++i) {
          if (positive(f(i, j))) relax(src(i), -c(i, j));
        }
        if (into_sink[static_cast<std::size_t>(j)] < demand[static_cast<std::size_t>(j)]) relax(sink, 0);
      }
    }
    const long long reach = dist[static_cast<std::size_t>(sink)];
    if (reach >= kInf) throw InternalError("no augmenting path in a balanced transportation problem");
    for (int v = 0; v < nodes; ++v) phi[static_cast<std::size_t>(v)] += std::min(dist[static_cast<std::size_t>(v)], reach);

    // Bottleneck along the path.
    Int amount = total_supply - shipped;
    for (int v = sink; v != 0; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      if (u == 0) {
        amount = std::min<Int>(amount, supply[static_cast<std::size_t>(v - 1)] - out_of_source[static_cast<std::size_t>(v - 1)]);
      } else if (v == sink) {
        const int j = u - 1 - ns;
        amount = std::min<Int>(amount, demand[static_cast<std::size_t>(j)] - into_sink[static_cast<std::size_t>(j)]);
      } else if (v == 0) {
        amount = std::min<Int>(amount, out_of_source[static_cast<std::size_t>(u - 1)]);
      } else if (u > ns && v <= ns) {
        amount = std::min<Int>(amount, f(v - 1, u - 1 - ns));
      }
    }
    for (int v = sink; v != 0; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      if (u == 0) {
        out_of_source[static_cast<std::size_t>(v - 1)] += amount;
      } else if (v == sink) {
        into_sink[static_cast<std::size_t>(u - 1 - ns)] += amount;
      } else if (v == 0) {
        out_of_source[static_cast<std::size_t>(u - 1)] -= amount;
      } else if (u <= ns) {
        f(u - 1, v - 1 - ns) += amount;
      } else {
        f(v - 1, u - 1 - ns) -= amount;
      }
    }
    shipped += amount;
  }

  TransportSolution<Int> out;
  out.cost = 0;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      if (positive(f(i, j))) {
        out.flows.push_back({i, j, f(i, j)});
        out.cost += f(i, j) * Int(static_cast<long>(c(i, j)));
      }
    }
  }
  for (int i = 0; i < ns; ++i) out.source_potential.push_back(phi[static_cast<std::size_t>(src(i))]);
  for (int j = 0; j < nt; ++j) out.target_potential.push_back(phi[static_cast<std::size_t>(tgt(j))]);
  audit_transport_solution(supply, demand, cost, out);
  return out;
}

template <typename Int>
void audit_transport_solution(const std::vector<Int>& supply, const std::vector<Int>& demand,
                              const std::vector<int>& cost, const TransportSolution<Int>& solution) {
  const auto ns = supply.size();
  const auto nt = demand.size();
  auto fail = [](const std::string& what) { throw InternalError("transport audit failed: " + what); };
  std::vector<Int> row(ns, Int(0)), col(nt, Int(0));
  Int primal = 0;
  for (const auto& fl : solution.flows) {
    if (!(fl.amount > 0)) fail("non-positive flow entry");
    const auto i = static_cast<std::size_t>(fl.source);
    const auto j = static_cast<std::size_t>(fl.target);
    row[i] += fl.amount;
    col[j] += fl.amount;
    const long long cij = cost[i * nt + j];
    primal += fl.amount * Int(static_cast<long>(cij));
    if (solution.target_potential[j] - solution.source_potential[i] != cij) fail("complementary slackness");
  }
  if (row != supply) fail("source marginals");
  if (col != demand) fail("target marginals");
  if (primal != solution.cost) fail("reported cost");
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      if (solution.target_potential[j] - solution.source_potential[i] > cost[i * nt + j]) fail("dual feasibility");
    }
  }
  Int dual = 0;
  for (std::size_t j = 0; j < nt; ++j) dual += demand[j] * Int(static_cast<long>(solution.target_potential[j]));
  for (std::size_t i = 0; i < ns; ++i) dual -= supply[i] * Int(static_cast<long>(solution.source_potential[i]));
  if (dual != primal) fail("duality gap");
}

template struct TransportSolution<long long>;
template struct TransportSolution<BigInt>;
template TransportSolution<long long> solve_transport(const std::vector<long long>&, const std::vector<long long>&,
                                                      const std::vector<int>&);
template TransportSolution<BigInt> solve_transport(const std::vector<BigInt>&, const std::vector<BigInt>&,
                                                   const std::vector<int>&);
template void audit_transport_solution(const std::vector<long long>&, const std::vector<long long>&,
                                       const std::vector<int>&, const TransportSolution<long long>&);
template void audit_transport_solution(const std::vector<BigInt>&, const std::vector<BigInt>&,
                                       const std::vector<int>&, const TransportSolution<BigInt>&);

}  // namespace lly::detail
