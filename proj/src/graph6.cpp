#include "resnum/graph6.hpp"

#include <istream>
#include <string>

#include "resnum/error.hpp"

namespace resnum {

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  if (line.empty()) raise(ErrorKind::MalformedGraph6, "empty line");
  for (char ch : line) {
    if (ch < 63 || ch > 126) {
      raise(ErrorKind::MalformedGraph6, "byte " + std::to_string(static_cast<int>(ch)) + " outside [63,126]");
    }
  }
  if (line[0] == 126) raise(ErrorKind::MalformedGraph6, "orders above 62 are not supported");
  const std::size_t n = static_cast<std::size_t>(line[0] - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) {
    raise(ErrorKind::MalformedGraph6, "expected " + std::to_string(1 + bytes) + " bytes for n = " +
                                          std::to_string(n) + ", got " + std::to_string(line.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = line[1 + k / 6] - 63;
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = line.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      raise(ErrorKind::MalformedGraph6, "nonzero padding bits");
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    raise(ErrorKind::TooLarge, "graph6 writer supports at most " + std::to_string(kGraph6MaxOrder) + " vertices");
  }
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace resnum
