#include "lly/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace lly {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
};

constexpr std::array<FamilyInfo, 17> kFamilies{{
    {Family::complete, "complete", 1},
    {Family::cycle, "cycle", 1},
    {Family::cocktail_party, "cocktail_party", 1},
    {Family::hamming, "hamming", 2},
    {Family::johnson, "johnson", 2},
    {Family::demi_cube, "demi_cube", 1},
    {Family::triangular, "triangular", 1},
    {Family::petersen, "petersen", 0},
    {Family::icosahedron, "icosahedron", 0},
    {Family::shrikhande, "shrikhande", 0},
    {Family::clebsch, "clebsch", 0},
    {Family::schlafli, "schlafli", 0},
    {Family::gosset, "gosset", 0},
    {Family::hoffman_singleton, "hoffman_singleton", 0},
    {Family::doob, "doob", 2},
    {Family::dodecahedron, "dodecahedron", 0},
    {Family::heawood, "heawood", 0},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  for (int x : a) count += static_cast<int>(std::count(b.begin(), b.end(), x));
  return count;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& info : kFamilies) {
    if (info.name == name) return info.family;
  }
  return std::nullopt;
}

int family_arity(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.arity;
  }
  return 0;
}

Graph generate(const FamilySpec& spec) {
  const int arity = family_arity(spec.family);
  require(static_cast<int>(spec.params.size()) == arity,
          std::string(family_name(spec.family)) + " takes " + std::to_string(arity) + " parameter(s), got " +
              std::to_string(spec.params.size()));
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::complete: return complete(p[0]);
    case Family::cycle: return cycle(p[0]);
    case Family::cocktail_party: return cocktail_party(p[0]);
    case Family::hamming: return hamming(p[0], p[1]);
    case Family::johnson: return johnson(p[0], p[1]);
    case Family::demi_cube: return demi_cube(p[0]);
    case Family::triangular: return triangular(p[0]);
    case Family::petersen: return petersen();
    case Family::icosahedron: return icosahedron();
    case Family::shrikhande: return shrikhande();
    case Family::clebsch: return clebsch();
    case Family::schlafli: return schlafli();
    case Family::gosset: return gosset();
    case Family::hoffman_singleton: return hoffman_singleton();
    case Family::doob: return doob(p[0], p[1]);
    case Family::dodecahedron: return dodecahedron();
    case Family::heawood: return heawood();
  }
  throw DomainError("unknown family");
}

Graph complete(int n) {
  require(n >= 1, "complete(n) needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph cocktail_party(int n) {
  require(n >= 2, "cocktail_party(n) needs n >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < 2 * n; ++u) {
    for (int v = u + 1; v < 2 * n; ++v) {
      if ((u ^ 1) != v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(2 * n, edges);
}

Graph hamming(int d, int n) {
  require(d >= 1 && n >= 2, "hamming(d, n) needs d >= 1 and n >= 2");
  Graph g = complete(n);
  const Graph kn = complete(n);
  for (int i = 1; i < d; ++i) g = cartesian_product(g, kn);
  return g;
}

Graph johnson(int n, int k) {
  require(k >= 1 && k <= n - 1, "johnson(n, k) needs 1 <= k <= n-1");
  require(binomial(n, k) <= 1'000'000, "johnson(n, k) is too large");
  const auto sets = k_subsets(n, k);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (intersection_size(sets[a], sets[b]) == k - 1) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return Graph::from_edges(static_cast<int>(sets.size()), edges);
}

int johnson_index(int n, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  long long rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    const int c = subset[static_cast<std::size_t>(i)];
    if (c <= prev || c >= n) throw DomainError("subset is not sorted or out of range");
    for (int v = prev + 1; v < c; ++v) rank += binomial(n - 1 - v, k - 1 - i);
    prev = c;
  }
  return static_cast<int>(rank);
}

Graph demi_cube(int n) {
  require(n >= 2 && n <= 24, "demi_cube(n) needs 2 <= n <= 24");
  std::vector<unsigned> words;
  for (unsigned w = 0; w < (1u << n); ++w) {
    if (std::popcount(w) % 2 == 0) words.push_back(w);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      if (std::popcount(words[a] ^ words[b]) == 2) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return Graph::from_edges(static_cast<int>(words.size()), edges);
}

Graph triangular(int n) {
  require(n >= 4, "triangular(n) needs n >= 4");
  return johnson(n, 2);
}

Graph petersen() {
  // Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram on 5..9.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

Graph icosahedron() {
  // 0 = top, 1..5 upper ring, 6..10 lower ring, 11 = bottom.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i;
    const int up_next = 1 + (i + 1) % 5;
    const int low = 6 + i;
    const int low_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(low, low_next);
    edges.emplace_back(11, low);
    edges.emplace_back(up, low);
    edges.emplace_back(up, low_next);
  }
  return Graph::from_edges(12, edges);
}

Graph shrikhande() {
  constexpr std::array<std::pair<int, int>, 6> kConnection{{{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}}};
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (const auto& [da, db] : kConnection) edges.emplace_back(4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4);
    }
  }
  return Graph::from_edges(16, edges);
}

Graph clebsch() { return demi_cube(5); }

Graph gosset() {
  const auto pairs = k_subsets(8, 2);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const int meet = intersection_size(pairs[a], pairs[b]);
      const int pa = static_cast<int>(a);
      const int pb = static_cast<int>(b);
      if (a < b && meet == 1) {
        edges.emplace_back(pa, pb);
        edges.emplace_back(28 + pa, 28 + pb);
      }
      if (meet == 0) edges.emplace_back(pa, 28 + pb);
    }
  }
  return Graph::from_edges(56, edges);
}

Graph schlafli() { return local_graph(gosset(), 0); }

Graph hoffman_singleton() {
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.emplace_back(5 * h + j, 5 * h + (j + 1) % 5);
      edges.emplace_back(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
      for (int i = 0; i < 5; ++i) edges.emplace_back(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    }
  }
  return Graph::from_edges(50, edges);
}

Graph doob(int n, int m) {
  require(n >= 0 && m >= 0 && n + m >= 1, "doob(n, m) needs n, m >= 0 and n + m >= 1");
  require(n + 2 * m <= 8, "doob(n, m) is too large");
  std::optional<Graph> g;
  const Graph k4 = complete(4);
  const Graph sh = shrikhande();
  for (int i = 0; i < n; ++i) g = g ? cartesian_product(*g, k4) : k4;
  for (int i = 0; i < m; ++i) g = g ? cartesian_product(*g, sh) : sh;
  return *g;
}

Graph dodecahedron() {
  // Generalized Petersen graph GP(10, 2): outer 0..9, inner 10..19.
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  return Graph::from_edges(20, edges);
}

Graph heawood() {
  // LCF notation [5,-5]^7.
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) {
    edges.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) edges.emplace_back(i, (i + 5) % 14);
  }
  return Graph::from_edges(14, edges);
}

Graph seidel_switch(const Graph& g, std::span<const Vertex> subset) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : subset) {
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool crossing = in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)];
      if (g.adjacent(u, v) != crossing) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

std::vector<Vertex> k8_edges_to_t8_vertices(std::span<const Edge> k8_edges) {
  std::vector<Vertex> out;
  for (auto [a, b] : k8_edges) {
    if (a > b) std::swap(a, b);
    if (a == b) throw DomainError("K8 has no loops");
    const std::array<int, 2> pair{a, b};
    out.push_back(johnson_index(8, pair));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Vertex>> chang_switching_sets() {
  const std::vector<Edge> matching{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  std::vector<Edge> octagon;
  for (int i = 0; i < 8; ++i) octagon.emplace_back(i, (i + 1) % 8);
  const std::vector<Edge> triangle_pentagon{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}};
  return {k8_edges_to_t8_vertices(matching), k8_edges_to_t8_vertices(octagon),
          k8_edges_to_t8_vertices(triangle_pentagon)};
}

}  // namespace lly
