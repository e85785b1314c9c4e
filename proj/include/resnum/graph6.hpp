#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "resnum/graph.hpp"

namespace resnum {

inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Standard graph6 for orders up to 62: one byte n + 63, then the upper
/// triangle column by column, six bits per byte (big-endian), each byte + 63,
/// final byte zero-padded. Raises MalformedGraph6.
Graph parse_graph6(std::string_view line);

/// Raises TooLarge above kGraph6MaxOrder.
std::string write_graph6(const Graph& g);

/// One graph per non-empty line; trailing '\r' and a leading ">>graph6<<"
/// header are tolerated.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace resnum
