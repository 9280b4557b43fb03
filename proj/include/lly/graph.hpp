#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lly/error.hpp"

namespace lly {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric; there are no loops and no
/// parallel edges. Every constructor funnels through `from_edges`, which
/// enforces this.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are collapsed. Throws ConstructionError on a self-loop or
  /// an endpoint outside [0, n).
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Hop distances from one source. Unreachable vertices hold `unreachable`.
struct DistanceRow {
  static constexpr int unreachable = -1;
  Vertex source = 0;
  std::vector<int> dist;
};

DistanceRow bfs_row(const Graph& g, Vertex x);

/// All-pairs hop distances, computed by one BFS per vertex.
class DistanceMatrix {
public:
  explicit DistanceMatrix(const Graph& g, unsigned threads = 1);

  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  int order() const noexcept { return n_; }
  bool connected() const noexcept { return connected_; }

private:
  int n_;
  bool connected_ = true;
  std::vector<int> dist_;
};

/// Component label per vertex, labels assigned in order of smallest member.
std::vector<int> components(const Graph& g);
bool is_connected(const Graph& g);

/// Throws DisconnectedError naming a vertex in two distinct components.
void require_connected(const Graph& g);

/// Diameter of a connected graph; throws DisconnectedError otherwise.
int diameter(const Graph& g);

/// Length of a shortest cycle; nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// Vertices are the edges of `g` in lexicographic endpoint order; two are
/// adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

/// Vertex (a, b) has index a * |H| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

/// Subgraph induced by `subset`; vertex i of the result is subset[i] after
/// sorting and de-duplication.
Graph induced(const Graph& g, std::span<const Vertex> subset);

/// Subgraph induced by the neighbors of v, in increasing vertex order.
Graph local_graph(const Graph& g, Vertex v);

/// Partition of the neighborhoods of an edge xy: common neighbors and the
/// private neighbors of each endpoint (x and y themselves excluded).
struct NeighborhoodSplit {
  std::vector<Vertex> common;
  std::vector<Vertex> only_x;
  std::vector<Vertex> only_y;
};

/// Throws DomainError if xy is not an edge.
NeighborhoodSplit neighborhood_split(const Graph& g, Vertex x, Vertex y);

/// Number of common neighbors of u and v.
int common_neighbor_count(const Graph& g, Vertex u, Vertex v);

}  // namespace lly
