#include "resnum/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "resnum/error.hpp"

namespace resnum {

namespace {

void set_bit(std::vector<std::uint64_t>& bits, std::size_t stride, Vertex u, Vertex v) {
  bits[u * stride + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

void clear_bit(std::vector<std::uint64_t>& bits, std::size_t stride, Vertex u, Vertex v) {
  bits[u * stride + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<std::uint64_t> bits)
    : n_(n), stride_(words_for(n)), bits_(std::move(bits)), degree_(n, 0) {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    std::uint32_t d = 0;
    for (std::size_t w = 0; w < stride_; ++w) d += std::popcount(bits_[u * stride_ + w]);
    degree_[u] = d;
    total += d;
  }
  m_ = total / 2;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  const std::size_t stride = words_for(n);
  std::vector<std::uint64_t> bits(n * stride, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      raise(ErrorKind::IndexOutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                            "} on " + std::to_string(n) + " vertices");
    }
    if (u == v) raise(ErrorKind::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    set_bit(bits, stride, u, v);
    set_bit(bits, stride, v, u);
  }
  return Graph(n, std::move(bits));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const std::size_t n = rows.size();
  const std::size_t stride = words_for(n);
  std::vector<std::uint64_t> bits(n * stride, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (rows[u].universe() != n) raise(ErrorKind::IndexOutOfRange, "row universe mismatch");
    if (rows[u].contains(u)) raise(ErrorKind::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    std::copy(rows[u].words().begin(), rows[u].words().end(), bits.begin() + u * stride);
  }
  for (Vertex u = 0; u < n; ++u) {
    rows[u].for_each([&](Vertex v) {
      if (!rows[v].contains(u)) raise(ErrorKind::InvalidEdge, "asymmetric adjacency rows");
    });
  }
  return Graph(n, std::move(bits));
}

VertexSet Graph::neighbors(Vertex u) const { return VertexSet::from_words(n_, row(u)); }

VertexSet Graph::closed_neighbors(Vertex u) const {
  VertexSet s = neighbors(u);
  s.insert(u);
  return s;
}

std::vector<Vertex> Graph::neighbor_list(Vertex u) const { return neighbors(u).members(); }

std::size_t Graph::max_degree() const noexcept {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq(degree_.begin(), degree_.end());
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::permute(std::span<const Vertex> perm) const {
  if (perm.size() != n_) raise(ErrorKind::InvalidPermutation, "permutation has wrong length");
  std::vector<bool> seen(n_, false);
  for (Vertex p : perm) {
    if (p >= n_ || seen[p]) raise(ErrorKind::InvalidPermutation, "map is not a bijection");
    seen[p] = true;
  }
  std::vector<std::uint64_t> bits(n_ * stride_, 0);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) {
        set_bit(bits, stride_, perm[u], perm[v]);
        set_bit(bits, stride_, perm[v], perm[u]);
      }
    }
  }
  return Graph(n_, std::move(bits));
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) raise(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
  if (u == v) raise(ErrorKind::InvalidEdge, "self-loop");
  auto bits = bits_;
  set_bit(bits, stride_, u, v);
  set_bit(bits, stride_, v, u);
  return Graph(n_, std::move(bits));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) raise(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
  auto bits = bits_;
  clear_bit(bits, stride_, u, v);
  clear_bit(bits, stride_, v, u);
  return Graph(n_, std::move(bits));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  VertexSet seen(n);
  seen.insert(0);
  std::vector<Vertex> stack{0};
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    VertexSet fresh = g.neighbors(u);
    fresh.subtract(seen);
    fresh.for_each([&](Vertex v) {
      seen.insert(v);
      stack.push_back(v);
      ++reached;
    });
  }
  return reached == n;
}

void require_connected(const Graph& g, const char* operation) {
  if (!is_connected(g)) {
    raise(ErrorKind::Disconnected, std::string(operation) + " requires a connected graph");
  }
}

}  // namespace resnum
