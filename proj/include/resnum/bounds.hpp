#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resnum/distance.hpp"
#include "resnum/graph.hpp"
#include "resnum/invariants.hpp"
#include "resnum/resolve.hpp"

namespace resnum {

enum class PropId { DiamTree, Girth, CliqueUB, OrderBounds, OrderTree, MaxDeg, MaxDegTree, Chain };

std::string_view to_string(PropId id) noexcept;
std::optional<PropId> parse_prop_id(std::string_view text) noexcept;
inline constexpr PropId kAllProps[] = {PropId::DiamTree, PropId::Girth,     PropId::CliqueUB,
                                       PropId::OrderBounds, PropId::OrderTree, PropId::MaxDeg,
                                       PropId::MaxDegTree, PropId::Chain};

/// One checked inequality lhs <= rhs. Propositions with several inequalities
/// (the order bounds, the dimension chain) produce one verdict per clause.
struct BoundVerdict {
  PropId prop = PropId::CliqueUB;
  std::string clause;
  bool applicable = false;
  std::string reason;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  bool equality = false;
  /// Present when equality is characterised: true iff (equality holds) agrees
  /// with (g belongs to the characterised extremal family).
  std::optional<bool> extremal_match;
};

struct BoundOptions {
  /// Compute dim and dim+ for the chain verdicts when n is at most this.
  std::size_t chain_max_order = kUpperDimensionMaxOrder;
};

std::vector<BoundVerdict> verify_bounds(const Graph& g, const InvariantSummary& inv,
                                        std::size_t res, const BoundOptions& options = {});

/// Verdicts of a single proposition.
std::vector<BoundVerdict> verify_bound(PropId id, const Graph& g, const InvariantSummary& inv,
                                       std::size_t res, const BoundOptions& options = {});

/// Upper bound on the order for a graph that is neither a path nor a cycle,
/// selected by girth and maximum degree in the order g=3, g=4, g=5, g>5 with
/// max degree > 3, g>5 with max degree 3.
std::int64_t order_upper_bound(std::size_t res, Girth girth, std::size_t max_degree);

/// All unordered pairs of elements of a.
std::vector<VertexPair> pairs_of(std::span<const Vertex> a);

struct CountingCheck {
  bool hypothesis_ok = false;
  bool inequality_ok = false;
  std::int64_t lhs = 0;  ///< sum |V_i| * k_i
  std::int64_t rhs = 0;  ///< |P| * (res - 1)
};

/// Checks the pair-counting inequality: if every vertex of part i fails to
/// resolve at least k[i] pairs of `pairs`, then sum |V_i| k_i <= |P| (res-1).
/// Raises InvalidPartition unless the parts are disjoint, cover V, and
/// k.size() == parts.size().
CountingCheck counting_lemma_check(const DistanceMatrix& dm, std::size_t res,
                                   std::span<const VertexPair> pairs,
                                   std::span<const std::vector<Vertex>> parts,
                                   std::span<const std::size_t> k);

}  // namespace resnum
