#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "resnum/distance.hpp"
#include "resnum/graph.hpp"

namespace resnum {

inline constexpr std::size_t kOracleMaxOrder = 12;
inline constexpr std::size_t kDimensionMaxOrder = 16;
inline constexpr std::size_t kUpperDimensionMaxOrder = 12;

/// Unordered vertex pair stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  static VertexPair of(Vertex a, Vertex b);

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct ResolvingReport {
  std::size_t res = 1;
  /// Absent only for the single-vertex graph.
  std::optional<VertexPair> witness_pair;
  /// Vertices that fail to resolve witness_pair, sorted.
  std::vector<Vertex> witness_nonresolving_set;
};

struct DimensionReport {
  std::size_t dim = 0;
  std::vector<Vertex> witness_min_set;
  std::optional<std::size_t> updim;
  std::vector<Vertex> witness_max_minimal_set;
};

/// Vertices u with d(u,x) = d(u,y). Raises DegeneratePair when x == y.
std::vector<Vertex> non_resolvers(const DistanceMatrix& dm, VertexPair pair);
std::vector<Vertex> non_resolvers(const DistanceMatrix& dm, Vertex x, Vertex y);

/// res(G) = 1 + max |non_resolvers(x,y)| over all pairs, by comparing
/// distance-matrix rows with the active count_equal kernel. The first pair in
/// lexicographic order attaining the maximum is the witness.
ResolvingReport resolving_number(const Graph& g);
ResolvingReport resolving_number(const Graph& g, const DistanceMatrix& dm);

/// First unresolved pair in lexicographic order, or nullopt when s resolves g.
std::optional<VertexPair> unresolved_pair(const DistanceMatrix& dm, std::span<const Vertex> s);
bool is_resolving_set(const DistanceMatrix& dm, std::span<const Vertex> s);

/// Smallest k such that every k-subset resolves g, found by checking subsets
/// directly against the definition. Exponential; capped at kOracleMaxOrder.
std::size_t resolving_number_oracle(const Graph& g);

/// Minimum resolving set by increasing cardinality; lexicographically first
/// witness. Capped at kDimensionMaxOrder.
DimensionReport metric_dimension(const Graph& g);

/// Maximum cardinality of a minimal resolving set, with a witness. Also fills
/// dim. Capped at kUpperDimensionMaxOrder.
DimensionReport upper_dimension(const Graph& g);

}  // namespace resnum
