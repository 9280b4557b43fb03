#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "lly/graph.hpp"

namespace lly {

/// Encodes `g` as a single graph6 line without header or trailing newline.
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// CR/LF are accepted. Throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);

/// Reads every non-empty line of a graph6 stream.
std::vector<Graph> graph6_read_all(std::istream& in);

}  // namespace lly
