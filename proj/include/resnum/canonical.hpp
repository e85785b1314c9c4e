#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "resnum/graph.hpp"

namespace resnum {

inline constexpr std::size_t kMaxCanonicalOrder = 16;

/// Upper-triangle adjacency bits of a graph under its canonical labeling, in
/// graph6 column order (0,1),(0,2),(1,2),(0,3),... Bit k sits at position
/// 63 - k%64 of word k/64, so comparing words compares the bit strings.
struct CanonicalForm {
  std::size_t n = 0;
  std::array<std::uint64_t, 2> bits{};

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Position of pair (i, j), i < j, in the column-wise upper-triangle order.
inline constexpr std::size_t pair_index(std::size_t i, std::size_t j) {
  return j * (j - 1) / 2 + i;
}

/// Adjacency bit string of g under its current labeling.
CanonicalForm labeled_form(const Graph& g);

/// Relabeling perm with perm[v] = canonical position of v. Found by colour
/// refinement plus individualisation, with twin vertices pruned; the result
/// minimises the adjacency bit string over every leaf of the search tree.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// Raises TooLarge above kMaxCanonicalOrder vertices.
CanonicalForm canonical_form(const Graph& g);

/// g relabeled by canonical_labeling(g).
Graph canonical_graph(const Graph& g);

Graph to_graph(const CanonicalForm& form);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace resnum
