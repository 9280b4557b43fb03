#include "isomorphism.hpp"

#include <algorithm>
#include <map>

namespace lly::detail {
namespace {

// Colors of g occupy [0, n), colors of h occupy [n, 2n).
using Coloring = std::vector<int>;

struct Search {
  const Graph& g;
  const Graph& h;
  int n;

  Vertex neighbor(int joint, std::size_t k) const {
    return joint < n ? g.neighbors(joint)[k] : n + h.neighbors(joint - n)[k];
  }
  int degree(int joint) const { return joint < n ? g.degree(joint) : h.degree(joint - n); }

  // Refines to the coarsest stable coloring; false if g and h disagree on
  // some color class size.
  bool refine(Coloring& c) const {
    std::size_t classes = 0;
    for (;;) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(2 * n));
      for (int v = 0; v < 2 * n; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.push_back(c[static_cast<std::size_t>(v)]);
        for (std::size_t k = 0; k < static_cast<std::size_t>(degree(v)); ++k) {
          s.push_back(c[static_cast<std::size_t>(neighbor(v, k))]);
        }
        std::sort(s.begin() + 1, s.end());
        ids.emplace(s, 0);
      }
      int next = 0;
      for (auto& [s, id] : ids) id = next++;
      for (int v = 0; v < 2 * n; ++v) c[static_cast<std::size_t>(v)] = ids[sig[static_cast<std::size_t>(v)]];
      std::vector<int> balance(ids.size(), 0);
      for (int v = 0; v < n; ++v) ++balance[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
      for (int v = n; v < 2 * n; ++v) --balance[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
      if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) return false;
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  bool is_isomorphism(const std::vector<Vertex>& phi) const {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : g.neighbors(u)) {
        if (!h.adjacent(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)])) return false;
      }
    }
    return true;
  }

  std::optional<std::vector<Vertex>> search(Coloring c) const {
    if (!refine(c)) return std::nullopt;
    std::map<int, int> count;
    for (int v = 0; v < n; ++v) ++count[c[static_cast<std::size_t>(v)]];
    int target = -1;
    for (int v = 0; v < n && target < 0; ++v) {
      if (count[c[static_cast<std::size_t>(v)]] > 1) target = v;
    }
    if (target < 0) {
      std::vector<Vertex> phi(static_cast<std::size_t>(n));
      std::vector<Vertex> by_color(static_cast<std::size_t>(2 * n), -1);
      for (int w = n; w < 2 * n; ++w) by_color[static_cast<std::size_t>(c[static_cast<std::size_t>(w)])] = w - n;
      for (int v = 0; v < n; ++v) phi[static_cast<std::size_t>(v)] = by_color[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
      if (is_isomorphism(phi)) return phi;
      return std::nullopt;
    }
    const int color = c[static_cast<std::size_t>(target)];
    const int fresh = 2 * n;  // larger than any refined color id
    for (int w = n; w < 2 * n; ++w) {
      if (c[static_cast<std::size_t>(w)] != color) continue;
      Coloring next = c;
      next[static_cast<std::size_t>(target)] = fresh;
      next[static_cast<std::size_t>(w)] = fresh;
      if (auto phi = search(std::move(next))) return phi;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();
  if (n == 0) return std::vector<Vertex>{};
  Search s{g, h, n};
  return s.search(Coloring(static_cast<std::size_t>(2 * n), 0));
}

}  // namespace lly::detail
