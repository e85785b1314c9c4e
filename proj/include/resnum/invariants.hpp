#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "resnum/distance.hpp"
#include "resnum/graph.hpp"

namespace resnum {

/// Length of a shortest cycle, or Infinite for acyclic graphs.
class Girth {
 public:
  static constexpr Girth infinite() noexcept { return Girth{}; }
  static constexpr Girth finite(std::size_t length) noexcept { return Girth{length}; }

  constexpr bool is_infinite() const noexcept { return length_ == 0; }
  constexpr bool is(std::size_t length) const noexcept { return length_ == length; }
  constexpr bool exceeds(std::size_t length) const noexcept {
    return is_infinite() || length_ > length;
  }
  /// Precondition: finite.
  constexpr std::size_t length() const noexcept { return length_; }

  std::string to_string() const;

  friend constexpr bool operator==(Girth, Girth) = default;

 private:
  constexpr Girth() = default;
  constexpr explicit Girth(std::size_t length) : length_(length) {}
  std::size_t length_ = 0;
};

/// Sorted leg lengths (a <= b <= c).
using SpiderLegs = std::array<std::size_t, 3>;

struct InvariantSummary {
  std::size_t order = 0;
  std::size_t edges = 0;
  std::size_t diameter = 0;
  Girth girth = Girth::infinite();
  std::size_t omega = 0;
  std::size_t max_degree = 0;
  bool is_tree = false;
  bool is_path = false;
  bool is_cycle = false;
  bool is_star = false;
  bool is_complete = false;
  std::optional<SpiderLegs> spider;
};

/// Raises Disconnected.
InvariantSummary invariant_summary(const Graph& g, const DistanceMatrix& dm);
InvariantSummary invariant_summary(const Graph& g);

/// Minimum over edges uv of 1 + d(u,v) in g - uv.
Girth girth(const Graph& g);

/// Exact clique number by pivoting branch and bound.
std::size_t clique_number(const Graph& g);
/// One maximum clique (sorted), found by the same search.
std::vector<Vertex> maximum_clique(const Graph& g);

bool is_tree(const Graph& g);
/// P1 and P2 included.
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
/// K_{1,a} for a >= 1 (so P2 and P3 count as stars).
bool is_star(const Graph& g);
bool is_complete(const Graph& g);

/// Leg lengths when g is a tree with exactly one vertex of degree 3 and every
/// other vertex of degree at most 2.
std::optional<SpiderLegs> spider_signature(const Graph& g);

struct DistanceWindow {
  std::size_t distance = 0;  ///< d(u, A)
  std::size_t set_diameter = 0;  ///< d(A)
  bool window_ok = false;
};

/// d(u,A) and whether every v in A satisfies d(u,A) <= d(u,v) <= d(u,A) + d(A).
/// Raises EmptySet for an empty A.
DistanceWindow distance_window(const DistanceMatrix& dm, Vertex u, std::span<const Vertex> a);

}  // namespace resnum
