#pragma once

#include <cstddef>
#include <string_view>

#include "resnum/catalog.hpp"
#include "resnum/graph.hpp"

namespace resnum {

enum class CategoryTag {
  TrivialPath,
  Path,
  OddCycle,
  EvenCycle,
  Star3,
  CatalogGirth3,
  CatalogGirth5,
  ResAtLeast4,
};

std::string_view to_string(CategoryTag tag) noexcept;

struct Category {
  CategoryTag tag = CategoryTag::TrivialPath;
  std::size_t res = 0;
  const CatalogMember* member = nullptr;
};

/// Structural class of g together with res(g). Raises TheoremViolation when
/// the structure and the resolving number disagree (a path with res != 2, a
/// res <= 2 graph that is neither a path nor an odd cycle, a res-3 graph
/// outside the catalog, ...). Raises CatalogMissing if the catalog is needed
/// but not supplied.
Category classify_res(const Graph& g, const Res3Catalog* catalog = nullptr);

enum class CliqueStatement { I = 1, II, III, IV, V };

std::string_view to_string(CliqueStatement s) noexcept;

/// For graphs with omega = res, which of the five structural statements the
/// graph instantiates; the structure is verified before returning.
/// NotApplicable when omega != res, TheoremViolation on a structural mismatch,
/// CatalogMissing for omega = res = 3 without a catalog.
CliqueStatement clique_res_category(const Graph& g, const Res3Catalog* catalog = nullptr);

/// True when g is K_a plus one vertex adjacent to b of its vertices, 1 <= b < a.
bool is_gab(const Graph& g);

}  // namespace resnum
