#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "resnum/vertex_set.hpp"

namespace resnum {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph. Each row is the open neighbourhood of a
/// vertex stored as a bit set; rows span as many 64-bit words as needed, so
/// graphs up to 64 vertices use one word per row and larger inputs fall back
/// to multi-word rows transparently.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n vertices. Duplicate pairs collapse; self-loops raise
  /// InvalidEdge and out-of-range endpoints raise IndexOutOfRange.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must already be symmetric and irreflexive; checked.
  static Graph from_rows(std::vector<VertexSet> rows);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return ((bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1U) != 0;
  }
  /// Raw words of N(u).
  std::span<const std::uint64_t> row(Vertex u) const noexcept {
    return {bits_.data() + u * stride_, stride_};
  }
  VertexSet neighbors(Vertex u) const;
  VertexSet closed_neighbors(Vertex u) const;
  std::vector<Vertex> neighbor_list(Vertex u) const;

  std::size_t degree(Vertex u) const noexcept { return degree_[u]; }
  std::size_t max_degree() const noexcept;
  std::vector<std::size_t> degree_sequence() const;  ///< sorted descending

  /// Edges as (u, v) with u < v, in row-major order.
  std::vector<Edge> edges() const;

  /// Graph with vertex i renamed to perm[i]. Raises InvalidPermutation unless
  /// perm is a bijection on {0..n-1}.
  Graph permute(std::span<const Vertex> perm) const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::size_t n, std::vector<std::uint64_t> bits);

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degree_;
};

/// One breadth-first search from vertex 0 reaches every vertex. The empty
/// graph on zero vertices is treated as disconnected.
bool is_connected(const Graph& g);

/// Raises Disconnected unless g is connected.
void require_connected(const Graph& g, const char* operation);

}  // namespace resnum
