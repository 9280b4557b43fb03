#include "lly/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "parallel.hpp"

namespace lly {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw ConstructionError("negative vertex count");
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ConstructionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw ConstructionError("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    row.shrink_to_fit();
    degree_sum += row.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DistanceRow bfs_row(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order()) throw DomainError("vertex " + std::to_string(x) + " out of range");
  DistanceRow row;
  row.source = x;
  row.dist.assign(static_cast<std::size_t>(g.order()), DistanceRow::unreachable);
  std::vector<Vertex> frontier{x};
  row.dist[static_cast<std::size_t>(x)] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex u = frontier[head];
    const int du = row.dist[static_cast<std::size_t>(u)];
    for (Vertex w : g.neighbors(u)) {
      auto& dw = row.dist[static_cast<std::size_t>(w)];
      if (dw == DistanceRow::unreachable) {
        dw = du + 1;
        frontier.push_back(w);
      }
    }
  }
  return row;
}

DistanceMatrix::DistanceMatrix(const Graph& g, unsigned threads) : n_(g.order()) {
  const auto n = static_cast<std::size_t>(n_);
  dist_.resize(n * n);
  detail::parallel_for(n, threads, [&](std::size_t s) {
    auto row = bfs_row(g, static_cast<Vertex>(s));
    std::copy(row.dist.begin(), row.dist.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n));
  });
  connected_ = std::none_of(dist_.begin(), dist_.end(), [](int d) { return d == DistanceRow::unreachable; });
}

std::vector<int> components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> stack{s};
    label[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  const auto label = components(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

void require_connected(const Graph& g) {
  const auto label = components(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[static_cast<std::size_t>(v)] != 0) throw DisconnectedError(0, v);
  }
}

int diameter(const Graph& g) {
  require_connected(g);
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = bfs_row(g, s);
    best = std::max(best, *std::max_element(row.dist.begin(), row.dist.end()));
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  // A BFS from every root; a non-tree edge (u,w) closes a walk of length
  // d(u)+d(w)+1, and the minimum over all roots is the girth.
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<Vertex> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const int du = dist[static_cast<std::size_t>(u)];
      if (best && 2 * du + 1 >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw == -1) {
          dw = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          const int cycle = du + dw + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw DomainError("line graph of an edgeless graph");
  const auto edges = g.edges();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[static_cast<std::size_t>(edges[i].first)].push_back(static_cast<int>(i));
    incident[static_cast<std::size_t>(edges[i].second)].push_back(static_cast<int>(i));
  }
  std::vector<Edge> out;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) out.emplace_back(star[a], star[b]);
    }
  }
  return Graph::from_edges(static_cast<int>(edges.size()), out);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw DomainError("cartesian product with an empty graph");
  const int nh = h.order();
  std::vector<Edge> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      for (Vertex b2 : h.neighbors(b)) {
        if (b < b2) out.emplace_back(a * nh + b, a * nh + b2);
      }
      for (Vertex a2 : g.neighbors(a)) {
        if (a < a2) out.emplace_back(a * nh + b, a2 * nh + b);
      }
    }
  }
  return Graph::from_edges(g.order() * nh, out);
}

Graph complement(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), out);
}

Graph induced(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> verts(subset.begin(), subset.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vertex v = verts[i];
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (Vertex w : g.neighbors(verts[i])) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph::from_edges(static_cast<int>(verts.size()), out);
}

Graph local_graph(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return induced(g, g.neighbors(v));
}

NeighborhoodSplit neighborhood_split(const Graph& g, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y)) {
    throw DomainError("(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
  NeighborhoodSplit split;
  for (Vertex w : g.neighbors(x)) {
    if (w == y) continue;
    (g.adjacent(w, y) ? split.common : split.only_x).push_back(w);
  }
  for (Vertex w : g.neighbors(y)) {
    if (w != x && !g.adjacent(w, x)) split.only_y.push_back(w);
  }
  return split;
}

int common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace lly
