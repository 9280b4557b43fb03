#pragma once

#include <optional>
#include <vector>

#include "lly/graph.hpp"

namespace lly::detail {

/// Vertex map phi with u ~ v in g iff phi(u) ~ phi(v) in h, found by
/// individualization and joint color refinement. Intended for small graphs.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace lly::detail
