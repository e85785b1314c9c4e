#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "resnum/canonical.hpp"
#include "resnum/graph.hpp"

namespace resnum {

inline constexpr std::size_t kExhaustiveMaxOrder = 7;
inline constexpr std::size_t kConstrainedMaxOrder = 10;
inline constexpr std::size_t kTreeMaxOrder = 12;
inline constexpr std::size_t kNaiveOracleMaxOrder = 6;

struct EnumConstraints {
  std::size_t n = 1;
  std::optional<std::size_t> max_degree;
  /// Minimum cycle length allowed; nullopt means no restriction.
  std::optional<std::size_t> min_girth;
  bool connected_only = true;
  /// Acyclic and connected; implies an infinite girth bound.
  bool trees_only = false;
  /// Shuffles the order in which candidate edges are tried. The emitted
  /// stream is identical for every seed.
  std::uint64_t exploration_seed = 0;
};

/// Raises TooLarge unless the constraints are within one of the supported
/// regimes: unconstrained n <= 7, trees n <= 12, or max degree <= 3 together
/// with girth >= 5 for n <= 10.
void check_enum_constraints(const EnumConstraints& c);

/// Calls sink once per isomorphism class satisfying c, in ascending canonical
/// order. Each graph is given in its canonical labeling.
void enumerate_graphs(const EnumConstraints& c, const std::function<void(const Graph&)>& sink);
std::vector<Graph> enumerate_graphs(const EnumConstraints& c);

/// Connected classes on n vertices by brute force: every edge subset, reduced
/// to the minimum bit string over all n! relabelings. Independent of
/// canonical_form. Raises TooLarge above kNaiveOracleMaxOrder.
std::set<CanonicalForm> naive_enumeration_oracle(std::size_t n);

/// Minimum adjacency bit string of g over all n! relabelings; the class
/// representative naive_enumeration_oracle uses. Raises TooLarge above 8
/// vertices.
CanonicalForm naive_min_form(const Graph& g);

}  // namespace resnum
