#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lly/graph.hpp"
#include "lly/rational.hpp"
#include "lly/regularity.hpp"
#include "lly/spectra.hpp"
#include "lly/transport.hpp"

namespace lly {

/// Tolerance for comparing an irrational or uncertified lambda1.
inline constexpr double kNumericTolerance = 1e-9;
/// Margin used when confirming that no Laplacian eigenvalue lies strictly
/// between 0 and a certified eigenvalue.
inline constexpr double kGapMargin = 1e-6;

/// A member of the known list of Lichnerowicz sharp distance-regular graphs.
struct FamilyMatch {
  std::string label;          ///< generator syntax, e.g. "johnson(6,3)"
  bool isomorphism_checked;   ///< false: matched by intersection array only
};

/// Matches the intersection array against the sharp families (complete,
/// cocktail party, Hamming, Johnson, demi-cube, Schlafli, Gosset). Graphs
/// with at most 64 vertices must also be isomorphic to the generated member.
std::optional<FamilyMatch> match_sharp_family(const Graph& g);

enum class SharpnessMode { exact_certified, numeric_tolerance };

struct SharpnessVerdict {
  Rational kappa_min;
  double lambda1 = 0;
  std::optional<QuadSurd> exact_lambda1;
  bool sharp = false;
  SharpnessMode mode = SharpnessMode::exact_certified;
  /// Nullity of the exact certificate at kappa_min; unset when not run.
  std::optional<int> certificate_nullity;
  /// lambda1 >= kappa_min held (exactly, or within the mode tolerance).
  bool lower_bound_holds = true;
  std::optional<FamilyMatch> classification;  ///< set for sharp graphs
};

struct SharpnessOptions {
  unsigned threads = 1;
  bool certify = true;  ///< false selects numeric_tolerance mode
};

/// Throws DisconnectedError, or DomainError for an edgeless graph.
SharpnessVerdict sharpness(const Graph& g, const SharpnessOptions& options = {});
SharpnessVerdict sharpness(const Graph& g, const CurvatureReport& curvature, const SharpnessOptions& options = {});

enum class ClauseStatus { pass, fail, skipped };

struct BoundClause {
  std::string name;
  ClauseStatus status = ClauseStatus::skipped;
  std::string detail;
};

struct BoundsReport {
  std::vector<BoundClause> clauses;
  bool ok() const;
  const BoundClause* find(const std::string& name) const;
};

/// Evaluates every applicable inequality and identity:
///   lichnerowicz              lambda1 >= min edge curvature
///   common_neighbor_bound     kappa(x,y) <= (2 + |N_xy|)/d on regular graphs
///   terwilliger_bound         kappa <= (2 alpha + 3 - d)/d on amply regular
///                             Terwilliger graphs
///   amply_inequality          d >= 2 alpha + 3 - beta, with equality exactly
///                             for the icosahedron and line graphs of regular
///                             graphs of girth >= 5
///   srg_identity              n - d - 1 = d (d - alpha - 1) / beta
///   srg_lambda1_bound         lambda1 >= (2 + alpha)/d with equality iff
///                             d = 2 alpha - beta + 4 (pentagon excluded)
BoundsReport check_bounds(const Graph& g, unsigned threads = 1);

enum class LineGraphSign { yes, no, inapplicable };

struct LineGraphSignResult {
  LineGraphSign status = LineGraphSign::inapplicable;
  std::string reason;
  std::optional<Rational> kappa_min;  ///< min edge curvature of L(host)
};

/// For a regular host of girth >= 5 and diameter >= 3: whether L(host) has
/// an edge of non-positive curvature.
LineGraphSignResult check_line_graph_sign(const Graph& host, unsigned threads = 1);

enum class ArtgStatus { not_artg, non_positive, member, counterexample_candidate };

struct ArtgVerdict {
  ArtgStatus status = ArtgStatus::not_artg;
  std::string reason;
  std::optional<AmplyParams> params;
  std::optional<Rational> kappa_min;
  std::string member;  ///< e.g. "icosahedron", "line_graph(petersen)"
  bool isomorphism_checked = false;
};

/// Membership of a positively curved amply regular Terwilliger graph in the
/// known list: pentagon, icosahedron, and the line graphs of the Petersen
/// graph, the Hoffman-Singleton graph and an SRG(3250,57,0,1).
ArtgVerdict classify_artg(const Graph& g, unsigned threads = 1);

struct CorpusEntry {
  std::string label;
  Graph graph;
};

/// Named graphs used by the sweeps: the sharp families at small parameters,
/// the table graphs, the line graphs and hosts used by the curvature lemmas,
/// and the Chang graphs.
std::vector<CorpusEntry> standard_corpus();

/// Seidel switches of T(8) that have parameters (28,12,6,4), are not
/// isomorphic to T(8), and are pairwise non-isomorphic.
std::vector<Graph> certified_chang_graphs();

// ---------------------------------------------------------------------------
// Table reproduction

struct TableCaps {
  int cocktail_party_max = 5;     ///< CP(n), n <= cap
  int hamming2_max = 5;           ///< H(2,n), n <= cap
  int triangular_max = 7;         ///< T(n), 4 <= n <= cap
  int hamming_vertices_max = 256; ///< H(d,n), n^d <= cap
  int johnson_vertices_max = 70;  ///< J(n,k), C(n,k) <= cap
  int demi_cube_max = 7;          ///< demi_cube(n), 2 <= n <= cap
  int doob_max = 3;               ///< Doob(n,m), n >= 1, m >= 1, n + 2m <= cap

  /// Applies "key=value" with keys cp, hamming2, triangular,
  /// hamming_vertices, johnson_vertices, demi_cube, doob. Throws DomainError.
  void set(const std::string& key, int value);
};

struct TableConfig {
  TableCaps caps;
  std::optional<Graph> conway_smith;
  std::optional<Graph> doro;
  bool table1 = true;
  bool table2 = true;
  unsigned threads = 1;
};

struct TableRow {
  int table = 1;
  std::string label;
  std::string parameters;  ///< "(n,d,alpha,beta)" or "|V|=n, D=diam"

  double lambda1 = 0;
  std::optional<QuadSurd> exact_lambda1;
  Rational kappa_min;
  Rational bound;  ///< (2 + alpha)/d
  bool sharp = false;

  QuadSurd expected_lambda1;
  Rational expected_kappa;
  Rational expected_bound;
  bool expected_sharp = false;

  bool match = false;
  /// Differences from the table that are reported but do not fail the row.
  std::vector<std::string> flags;
  std::vector<std::string> mismatches;
};

std::vector<TableRow> reproduce_tables(const TableConfig& config);

/// Fixed-width text rendering of the rows, one table after the other.
std::string format_tables(const std::vector<TableRow>& rows);

}  // namespace lly
