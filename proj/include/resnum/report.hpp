#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "resnum/bounds.hpp"
#include "resnum/catalog.hpp"
#include "resnum/classify.hpp"
#include "resnum/invariants.hpp"
#include "resnum/resolve.hpp"

namespace resnum {

using Json = nlohmann::ordered_json;

/// Girth as a number, or null for trees.
Json girth_json(Girth girth);

struct ComputeOptions {
  bool dim = false;
  bool updim = false;
};

/// {n, m, res, witness_pair, diameter, girth, is_tree, omega, max_degree,
///  dim?, updim?}
Json compute_report(const Graph& g, const ComputeOptions& options = {});

/// {category, res, catalog_member?}
Json classify_report(const Category& category);

Json verdict_json(const BoundVerdict& v);
Json verdicts_json(std::span<const BoundVerdict> verdicts);

/// Counts, girth split and orders of a res-3 catalog.
Json catalog_summary(const Res3Catalog& catalog);

}  // namespace resnum
