#include "lly/regularity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lly {

std::string AmplyParams::to_string() const {
  return "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(alpha) + "," +
         std::to_string(beta) + ")";
}

int IntersectionArray::b_at(int i) const {
  return (i >= 0 && i < diameter()) ? b[static_cast<std::size_t>(i)] : 0;
}

int IntersectionArray::c_at(int i) const {
  return (i >= 1 && i <= diameter()) ? c[static_cast<std::size_t>(i - 1)] : 0;
}

int IntersectionArray::a_at(int i) const { return degree() - b_at(i) - c_at(i); }

void IntersectionArray::validate() const {
  if (b.empty() || b.size() != c.size()) throw DomainError("intersection array needs D entries on each side");
  if (c.front() != 1) throw DomainError("intersection array needs c_1 = 1");
  for (int i = 0; i < diameter(); ++i) {
    if (b[static_cast<std::size_t>(i)] < 1 || c[static_cast<std::size_t>(i)] < 1) {
      throw DomainError("intersection numbers must be positive");
    }
  }
  for (int i = 0; i <= diameter(); ++i) {
    if (a_at(i) < 0) throw DomainError("a_" + std::to_string(i) + " is negative");
  }
}

std::string IntersectionArray::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  out += ";";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + "}";
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::variant<AmplyParams, Rejection> amply_params(const Graph& g) {
  const int n = g.order();
  if (n == 0) return Rejection{"empty graph", {}};
  const auto label = components(g);
  for (Vertex v = 0; v < n; ++v) {
    if (label[static_cast<std::size_t>(v)] != 0) return Rejection{"disconnected graph", {0, v}};
  }
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != g.degree(0)) return Rejection{"irregular graph", {0, v}};
  }
  const int d = g.degree(0);
  if (d == n - 1) return Rejection{"complete graph", {}};

  const DistanceMatrix dist(g);
  std::optional<int> alpha, beta;
  std::vector<int> alpha_pair, beta_pair;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int duv = dist(u, v);
      if (duv != 1 && duv != 2) continue;
      const int common = common_neighbor_count(g, u, v);
      auto& value = duv == 1 ? alpha : beta;
      auto& pair = duv == 1 ? alpha_pair : beta_pair;
      if (!value) {
        value = common;
        pair = {u, v};
      } else if (*value != common) {
        return Rejection{std::string(duv == 1 ? "adjacent" : "distance-2") + " pairs disagree on common neighbors",
                         {pair[0], pair[1], u, v}};
      }
    }
  }
  return AmplyParams{n, d, *alpha, *beta};
}

std::variant<IntersectionArray, Rejection> intersection_array(const Graph& g) {
  const int n = g.order();
  if (n == 0) return Rejection{"empty graph", {}};
  const auto label = components(g);
  for (Vertex v = 0; v < n; ++v) {
    if (label[static_cast<std::size_t>(v)] != 0) return Rejection{"disconnected graph", {0, v}};
  }
  std::vector<int> bs, cs;
  int diam = -1;
  for (Vertex x = 0; x < n; ++x) {
    const auto row = bfs_row(g, x);
    const int ecc = *std::max_element(row.dist.begin(), row.dist.end());
    if (diam == -1) {
      diam = ecc;
      bs.assign(static_cast<std::size_t>(diam) + 1, -1);
      cs.assign(static_cast<std::size_t>(diam) + 1, -1);
    } else if (ecc != diam) {
      return Rejection{"eccentricity varies", {0, x}};
    }
    for (Vertex y = 0; y < n; ++y) {
      const int i = row.dist[static_cast<std::size_t>(y)];
      int b = 0, c = 0;
      for (Vertex w : g.neighbors(y)) {
        const int dw = row.dist[static_cast<std::size_t>(w)];
        if (dw == i + 1) ++b;
        if (dw == i - 1) ++c;
      }
      auto& bi = bs[static_cast<std::size_t>(i)];
      auto& ci = cs[static_cast<std::size_t>(i)];
      if (bi == -1) {
        bi = b;
        ci = c;
      } else if (bi != b || ci != c) {
        return Rejection{"distance-partition counts vary at distance " + std::to_string(i), {x, y, i}};
      }
    }
  }
  IntersectionArray ia;
  for (int i = 0; i < diam; ++i) ia.b.push_back(bs[static_cast<std::size_t>(i)]);
  for (int i = 1; i <= diam; ++i) ia.c.push_back(cs[static_cast<std::size_t>(i)]);
  if (diam == 0) return Rejection{"single vertex", {}};
  return ia;
}

std::variant<TerwilligerYes, Rejection> is_terwilliger(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  const DistanceMatrix dist(g);
  std::optional<int> beta;
  std::vector<int> first_pair;
  bool any = false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist(u, v) != 2) continue;
      any = true;
      std::vector<Vertex> common;
      std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                            g.neighbors(v).end(), std::back_inserter(common));
      const int size = static_cast<int>(common.size());
      if (!beta) {
        beta = size;
        first_pair = {u, v};
      } else if (*beta != size) {
        return Rejection{"common neighborhoods of distance-2 pairs differ in size",
                         {first_pair[0], first_pair[1], u, v}};
      }
      for (std::size_t a = 0; a < common.size(); ++a) {
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          if (!g.adjacent(common[a], common[b])) {
            return Rejection{"induced quadrangle", {u, common[a], v, common[b]}};
          }
        }
      }
    }
  }
  if (!any) throw DomainError("Terwilliger property needs a non-complete graph");
  return TerwilligerYes{*beta};
}

ReducedGraph reduce_quotient(const Graph& g) {
  const int n = g.order();
  std::map<std::vector<Vertex>, int> class_id;
  ReducedGraph out;
  out.class_of.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> closed(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    auto [it, inserted] = class_id.try_emplace(std::move(closed), static_cast<int>(out.class_sizes.size()));
    if (inserted) out.class_sizes.push_back(0);
    ++out.class_sizes[static_cast<std::size_t>(it->second)];
    out.class_of[static_cast<std::size_t>(v)] = it->second;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const int cu = out.class_of[static_cast<std::size_t>(u)];
    const int cv = out.class_of[static_cast<std::size_t>(v)];
    if (cu != cv) edges.emplace_back(cu, cv);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.class_sizes.size()), edges);
  return out;
}

ReducedLocalParams reduced_local_params(const Graph& g, Vertex gamma) {
  const auto ap = amply_params(g);
  const auto* params = accepted(ap);
  if (!params) throw DomainError("not amply regular: " + std::get<Rejection>(ap).reason);
  const auto tw = is_terwilliger(g);
  if (!accepted(tw)) throw DomainError("not a Terwilliger graph: " + std::get<Rejection>(tw).reason);
  if (params->beta <= 1) throw DomainError("reduced local parameters need beta > 1");
  if (gamma < 0 || gamma >= g.order()) throw DomainError("vertex out of range");

  const auto reduced = reduce_quotient(local_graph(g, gamma));
  const int s = reduced.class_sizes.front();
  for (int size : reduced.class_sizes) {
    if (size != s) throw InternalError("equivalence classes of the local graph differ in size");
  }
  const int d = params->d, alpha = params->alpha, beta = params->beta;
  ReducedLocalParams out;
  out.s = s;
  out.n_bar = Rational(d, s);
  out.d_bar = Rational(alpha - s + 1, s);
  out.beta_bar = Rational(beta - 1, s);
  out.alpha_bar = Rational((alpha - s + 1) * (alpha - 2 * s + 1) - (beta - 1) * (d - alpha - 1),
                           s * (alpha - s + 1));
  for (Rational* q : {&out.n_bar, &out.d_bar, &out.alpha_bar, &out.beta_bar}) q->canonicalize();

  auto check = [](bool ok, const std::string& what) {
    if (!ok) throw InternalError("reduced local parameters: " + what);
  };
  for (const Rational* q : {&out.n_bar, &out.d_bar, &out.alpha_bar, &out.beta_bar}) {
    check(q->get_den() == 1, "non-integral value " + to_string(*q));
  }
  check(beta == s + 1 || beta >= s * s + s + 1, "beta = s+1 or beta >= s^2+s+1");
  check(std::gcd(std::gcd(d, alpha + 1), beta - 1) % s == 0, "s divides gcd(d, alpha+1, beta-1)");
  check(((beta - 1) * (d - s)) % (alpha - s + 1) == 0, "alpha-s+1 divides (beta-1)(d-s)");
  check(Rational(s) <= out.alpha_bar + 1, "s <= alpha_bar + 1");

  const auto observed = amply_params(reduced.graph);
  const auto* seen = accepted(observed);
  check(seen != nullptr, "reduced local graph is not amply regular");
  const AmplyParams expected{static_cast<int>(out.n_bar.get_num().get_si()),
                             static_cast<int>(out.d_bar.get_num().get_si()),
                             static_cast<int>(out.alpha_bar.get_num().get_si()),
                             static_cast<int>(out.beta_bar.get_num().get_si())};
  check(*seen == expected, "observed " + seen->to_string() + " but formulas give " + expected.to_string());
  return out;
}

std::optional<Graph> line_graph_root(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  std::map<std::vector<Vertex>, int> clique_id;
  std::vector<std::vector<int>> cliques_of(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const Graph local = induced(g, nbrs);
    const auto comp = components(local);
    const int parts = local.order() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    if (parts > 2) return std::nullopt;
    for (int c = 0; c < parts; ++c) {
      std::vector<Vertex> clique{v};
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (comp[i] == c) clique.push_back(nbrs[i]);
      }
      std::sort(clique.begin(), clique.end());
      auto [it, inserted] = clique_id.try_emplace(clique, static_cast<int>(clique_id.size()));
      cliques_of[static_cast<std::size_t>(v)].push_back(it->second);
    }
  }
  int root_order = static_cast<int>(clique_id.size());
  std::vector<Edge> root_edges;
  for (Vertex v = 0; v < n; ++v) {
    auto& cs = cliques_of[static_cast<std::size_t>(v)];
    while (cs.size() < 2) cs.push_back(root_order++);  // pendant endpoint
    root_edges.emplace_back(cs[0], cs[1]);
  }
  // Every member of a clique must see the same clique from its own side.
  for (const auto& [members, id] : clique_id) {
    for (Vertex m : members) {
      const auto& cs = cliques_of[static_cast<std::size_t>(m)];
      if (std::find(cs.begin(), cs.end(), id) == cs.end()) return std::nullopt;
    }
  }
  auto sorted_edge = [](Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; };
  std::vector<Edge> unique_edges;
  for (auto e : root_edges) unique_edges.push_back(sorted_edge(e));
  std::sort(unique_edges.begin(), unique_edges.end());
  if (std::adjacent_find(unique_edges.begin(), unique_edges.end()) != unique_edges.end()) return std::nullopt;
  Graph root = Graph::from_edges(root_order, root_edges);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto eu = root_edges[static_cast<std::size_t>(u)];
      const auto ev = root_edges[static_cast<std::size_t>(v)];
      const bool share = eu.first == ev.first || eu.first == ev.second || eu.second == ev.first ||
                         eu.second == ev.second;
      if (share != g.adjacent(u, v)) return std::nullopt;
    }
  }
  return root;
}

}  // namespace lly
