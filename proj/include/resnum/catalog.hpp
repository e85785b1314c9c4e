#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "resnum/canonical.hpp"
#include "resnum/graph.hpp"
#include "resnum/invariants.hpp"

namespace resnum {

struct CatalogMember {
  CanonicalForm form;
  Graph graph;  ///< canonical labeling
  std::string graph6;
  std::size_t order = 0;
  Girth girth = Girth::infinite();
  std::vector<std::size_t> degree_sequence;
  std::size_t res = 0;
};

/// Every connected graph with resolving number 3 that is neither a cycle nor
/// K_{1,3}. Members are sorted by their graph6 string.
class Res3Catalog {
 public:
  Res3Catalog() = default;
  explicit Res3Catalog(std::vector<CatalogMember> members);

  const std::vector<CatalogMember>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// Member isomorphic to g, if any. Graphs above the canonical-form cap are
  /// never members.
  const CatalogMember* find(const Graph& g) const;
  bool contains(const Graph& g) const { return find(g) != nullptr; }

  std::vector<const CatalogMember*> with_girth(std::size_t girth) const;

  /// Sorted graph6 lines, newline-terminated.
  std::string fixture_text() const;

 private:
  std::vector<CatalogMember> members_;
};

/// Orders searched: all connected graphs up to 7 vertices and the
/// (max degree 3, girth >= 5) graphs on 8..10 vertices. Outside this range the
/// order bounds leave no candidate that is neither a cycle nor K_{1,3}.
Res3Catalog build_res3_catalog();

/// Reads a fixture written by fixture_text(). Each line is re-canonicalised
/// and must have resolving number 3; raises MalformedGraph6 or
/// TheoremViolation otherwise.
Res3Catalog load_res3_catalog(const std::filesystem::path& path);
Res3Catalog parse_res3_catalog(const std::string& text);

}  // namespace resnum
