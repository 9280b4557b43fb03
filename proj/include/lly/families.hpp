#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lly/graph.hpp"

namespace lly {

enum class Family {
  complete,
  cycle,
  cocktail_party,
  hamming,
  johnson,
  demi_cube,
  triangular,
  petersen,
  icosahedron,
  shrikhande,
  clebsch,
  schlafli,
  gosset,
  hoffman_singleton,
  doob,
  dodecahedron,
  heawood,
};

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Number of integer parameters the family takes.
int family_arity(Family f);

/// Throws DomainError when `spec` violates the family's parameter range or
/// arity.
Graph generate(const FamilySpec& spec);

// Canonical labelings:
//   complete(n), cycle(n)     vertex i, cycle edges i ~ i+1 mod n
//   cocktail_party(n)         vertex i misses only i ^ 1
//   hamming(d, n)             word (w_0..w_{d-1}) at index sum w_k n^(d-1-k)
//   johnson(n, k)             k-subsets of {0..n-1} in lexicographic order
//   demi_cube(n)              even-weight n-bit strings in increasing order
//   gosset                    signed 2-subsets: (S,+) at index i, (S,-) at 28+i
//   hoffman_singleton         pentagon P_h(j) at 5h+j, pentagram Q_i(j) at 25+5i+j
//   doob(n, m)                K4^n first, then Shrikhande^m, as iterated products
//   petersen                  outer cycle 0..4, spokes i ~ i+5, pentagram on 5..9
//   shrikhande                (a, b) in Z4 x Z4 at index 4a+b
Graph complete(int n);
Graph cycle(int n);
Graph cocktail_party(int n);
Graph hamming(int d, int n);
Graph johnson(int n, int k);
Graph demi_cube(int n);
Graph triangular(int n);
Graph petersen();
Graph icosahedron();
Graph shrikhande();
Graph clebsch();
Graph schlafli();
Graph gosset();
Graph hoffman_singleton();
Graph doob(int n, int m);
Graph dodecahedron();
Graph heawood();

/// Index of a sorted k-subset in the johnson(n, k) labeling.
int johnson_index(int n, std::span<const int> subset);

/// Complements all edges between S and V \ S.
Graph seidel_switch(const Graph& g, std::span<const Vertex> subset);

/// Maps a set of edges of K8 to the corresponding vertex set of T(8) =
/// johnson(8, 2).
std::vector<Vertex> k8_edges_to_t8_vertices(std::span<const Edge> k8_edges);

/// Switching sets of T(8) given by the K8 edge sets of a perfect matching,
/// an 8-cycle, and a triangle plus a disjoint pentagon, in that order.
/// Callers certify which of the switched graphs are Chang graphs.
std::vector<std::vector<Vertex>> chang_switching_sets();

}  // namespace lly
