#include "lly/graph6.hpp"

#include <cstdint>

namespace lly {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of graph6 data", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", pos);
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  put_order(out, n);
  int bits = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + kBias));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  std::uint64_t n = 0;
  if (text[pos] != 126) {
    n = static_cast<std::uint64_t>(sextet(text, pos));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == 126) {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
  } else {
    pos += 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
  }
  if (n > 1'000'000) throw ParseError("graph order " + std::to_string(n) + " is too large", 0);

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (pairs + 5) / 6;
  const std::size_t body = pos;
  if (text.size() - body < bytes) throw ParseError("truncated graph6 adjacency data", text.size());
  if (text.size() - body > bytes) throw ParseError("trailing bytes after graph6 adjacency data", body + bytes);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, body + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = body + k / 6;
    const int byte = sextet(text, last);
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("non-zero padding bits", last);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> graph6_read_all(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line == kHeader) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace lly
