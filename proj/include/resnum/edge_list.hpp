#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "resnum/graph.hpp"

namespace resnum {

enum class SourceFormat { Graph6, EdgeList };

struct GraphDocument {
  Graph graph;
  SourceFormat source_format = SourceFormat::EdgeList;
  std::optional<std::string> label;
};

/// "n <count>" on the first content line, then one "u v" pair per line,
/// 0-indexed. Blank lines and '#' comments are skipped; a comment before the
/// header becomes the label. Raises MalformedLine, InvalidEdge or
/// IndexOutOfRange.
GraphDocument parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g, const std::optional<std::string>& label = {});

}  // namespace resnum
