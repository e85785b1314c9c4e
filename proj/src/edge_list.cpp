#include "resnum/edge_list.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "resnum/error.hpp"

namespace resnum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const auto start = s.find_first_not_of(" \t");
    if (start == std::string_view::npos) break;
    s.remove_prefix(start);
    const auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) break;
    s.remove_prefix(end);
  }
  return out;
}

std::size_t to_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    raise(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": '" + std::string(token) +
                                        "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

GraphDocument parse_edge_list(std::string_view text) {
  GraphDocument doc;
  doc.source_format = SourceFormat::EdgeList;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!n && !doc.label) doc.label = std::string(trim(line.substr(1)));
      continue;
    }
    const auto parts = fields(line);
    if (!n) {
      if (parts.size() != 2 || parts[0] != "n") {
        raise(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": expected 'n <count>'");
      }
      n = to_index(parts[1], line_no);
      continue;
    }
    if (parts.size() != 2) {
      raise(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const std::size_t u = to_index(parts[0], line_no);
    const std::size_t v = to_index(parts[1], line_no);
    if (u >= *n || v >= *n) {
      raise(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_no) + ": vertex index >= " + std::to_string(*n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) raise(ErrorKind::MalformedLine, "missing 'n <count>' header");
  doc.graph = Graph::from_edge_list(*n, edges);
  return doc;
}

std::string write_edge_list(const Graph& g, const std::optional<std::string>& label) {
  std::ostringstream out;
  if (label) out << "# " << *label << '\n';
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace resnum
