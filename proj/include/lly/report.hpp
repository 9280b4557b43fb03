#pragma once

#include <string>

#include <json.hpp>

#include "lly/graph.hpp"
#include "lly/rational.hpp"
#include "lly/regularity.hpp"
#include "lly/spectra.hpp"
#include "lly/transport.hpp"
#include "lly/verify.hpp"

namespace lly {

using Json = nlohmann::ordered_json;

/// 12 significant digits; magnitudes below 1e-12 print as "0".
std::string decimal(double x);

/// Exact values are "num/den" strings, quadratic irrationals
/// "a+b*sqrt(D)". Key order is fixed, so dumps are byte-stable.
Json to_json(const EdgeCurvature& e);
Json to_json(const CurvatureReport& r);
Json to_json(const SpectrumReport& r);
Json to_json(const DrgAnalysis& a);
Json to_json(const SharpnessVerdict& v);
Json to_json(const BoundsReport& r);
Json to_json(const LineGraphSignResult& r);
Json to_json(const ArtgVerdict& v);
Json to_json(const TableRow& row);
Json to_json(const AmplyParams& p);
Json to_json(const IntersectionArray& ia);
Json to_json(const Rejection& r);

/// Order, size, connectivity, degree, diameter, girth, amply regular
/// parameters, Terwilliger status and intersection array.
Json analysis_json(const Graph& g);

/// Quotes a field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

/// "graph,u,v,numerator,denominator"
std::string curvature_csv_header();
/// One row per edge; `graph` is the input index.
std::string curvature_csv(const CurvatureReport& r, int graph);

/// "graph,index,adjacency,laplacian"
std::string spectrum_csv_header();
std::string spectrum_csv(const SpectrumReport& r, int graph);

/// "graph,sharp,kappa_min,lambda1,exact_lambda1,mode,classification"
std::string sharpness_csv_header();
std::string sharpness_csv(const SharpnessVerdict& v, int graph);

/// "table,graph,parameters,lambda1,kappa_min,bound,sharp,match,notes"
std::string table_csv_header();
std::string table_csv(const TableRow& row);

}  // namespace lly
