#include "resnum/report.hpp"

#include <map>

namespace resnum {

Json girth_json(Girth girth) {
  if (girth.is_infinite()) return nullptr;
  return girth.length();
}

Json compute_report(const Graph& g, const ComputeOptions& options) {
  const DistanceMatrix dm = distance_matrix(g);
  const ResolvingReport rr = resolving_number(g, dm);
  const InvariantSummary inv = invariant_summary(g, dm);
  Json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["res"] = rr.res;
  if (rr.witness_pair) {
    j["witness_pair"] = Json::array({rr.witness_pair->first, rr.witness_pair->second});
  } else {
    j["witness_pair"] = nullptr;
  }
  j["witness_nonresolving_set"] = rr.witness_nonresolving_set;
  j["diameter"] = inv.diameter;
  j["girth"] = girth_json(inv.girth);
  j["is_tree"] = inv.is_tree;
  j["omega"] = inv.omega;
  j["max_degree"] = inv.max_degree;
  if (options.updim) {
    const DimensionReport d = upper_dimension(g);
    j["dim"] = d.dim;
    j["dim_witness"] = d.witness_min_set;
    j["updim"] = *d.updim;
    j["updim_witness"] = d.witness_max_minimal_set;
  } else if (options.dim) {
    const DimensionReport d = metric_dimension(g);
    j["dim"] = d.dim;
    j["dim_witness"] = d.witness_min_set;
  }
  return j;
}

Json classify_report(const Category& category) {
  Json j;
  j["category"] = std::string(to_string(category.tag));
  j["res"] = category.res;
  if (category.member != nullptr) {
    j["catalog_member"] = {{"graph6", category.member->graph6},
                           {"n", category.member->order},
                           {"girth", girth_json(category.member->girth)},
                           {"degree_sequence", category.member->degree_sequence}};
  }
  return j;
}

Json verdict_json(const BoundVerdict& v) {
  Json j;
  j["prop_id"] = std::string(to_string(v.prop));
  j["clause"] = v.clause;
  j["applicable"] = v.applicable;
  j["reason"] = v.reason;
  if (v.applicable) {
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["holds"] = v.holds;
    j["equality"] = v.equality;
  } else {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["holds"] = nullptr;
    j["equality"] = nullptr;
  }
  if (v.extremal_match) {
    j["extremal_match"] = *v.extremal_match;
  } else {
    j["extremal_match"] = nullptr;
  }
  return j;
}

Json verdicts_json(std::span<const BoundVerdict> verdicts) {
  Json arr = Json::array();
  for (const auto& v : verdicts) arr.push_back(verdict_json(v));
  return arr;
}

Json catalog_summary(const Res3Catalog& catalog) {
  std::map<std::string, std::size_t> by_girth;
  std::map<std::size_t, std::size_t> by_order;
  Json girth5_orders = Json::array();
  for (const auto& m : catalog.members()) {
    ++by_girth[m.girth.to_string()];
    ++by_order[m.order];
    if (m.girth.is(5)) girth5_orders.push_back(m.order);
  }
  Json j;
  j["res"] = 3;
  j["count"] = catalog.size();
  Json split = Json::object();
  for (const auto& [g, c] : by_girth) split[g] = c;
  j["girth_split"] = split;
  Json orders = Json::object();
  for (const auto& [n, c] : by_order) orders[std::to_string(n)] = c;
  j["orders"] = orders;
  j["girth5_orders"] = girth5_orders;
  Json members = Json::array();
  for (const auto& m : catalog.members()) {
    members.push_back({{"graph6", m.graph6}, {"n", m.order}, {"girth", girth_json(m.girth)}});
  }
  j["members"] = members;
  return j;
}

}  // namespace resnum
