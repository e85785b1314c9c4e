#include "resnum/bounds.hpp"

#include <string>

#include "resnum/error.hpp"

namespace resnum {

namespace {

using I = std::int64_t;

BoundVerdict not_applicable(PropId id, std::string clause, std::string reason) {
  BoundVerdict v;
  v.prop = id;
  v.clause = std::move(clause);
  v.applicable = false;
  v.reason = std::move(reason);
  return v;
}

BoundVerdict check(PropId id, std::string clause, I lhs, I rhs,
                   std::optional<bool> in_extremal_family = std::nullopt) {
  BoundVerdict v;
  v.prop = id;
  v.clause = std::move(clause);
  v.applicable = true;
  v.lhs = lhs;
  v.rhs = rhs;
  v.holds = lhs <= rhs;
  v.equality = lhs == rhs;
  if (in_extremal_family) v.extremal_match = v.equality == *in_extremal_family;
  return v;
}

I as_int(std::size_t v) { return static_cast<I>(v); }

bool tree_not_path(const InvariantSummary& inv) { return inv.is_tree && !inv.is_path; }

}  // namespace

std::string_view to_string(PropId id) noexcept {
  switch (id) {
    case PropId::DiamTree: return "DiamTree";
    case PropId::Girth: return "Girth";
    case PropId::CliqueUB: return "CliqueUB";
    case PropId::OrderBounds: return "OrderBounds";
    case PropId::OrderTree: return "OrderTree";
    case PropId::MaxDeg: return "MaxDeg";
    case PropId::MaxDegTree: return "MaxDegTree";
    case PropId::Chain: return "Chain";
  }
  return "Unknown";
}

std::optional<PropId> parse_prop_id(std::string_view text) noexcept {
  for (PropId id : kAllProps) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::int64_t order_upper_bound(std::size_t res, Girth girth, std::size_t max_degree) {
  const I r = as_int(res);
  if (girth.is(3)) return 3 * r - 3;
  if (girth.is(4)) return 4 * r - 4;
  if (girth.is(5)) return 5 * r - 5;
  if (max_degree > 3) return 5 * r - 9;
  if (max_degree == 3) return 6 * r - 8;
  raise(ErrorKind::NotApplicable, "order bound needs a graph that is neither a path nor a cycle");
}

std::vector<BoundVerdict> verify_bound(PropId id, const Graph& g, const InvariantSummary& inv,
                                       std::size_t res, const BoundOptions& options) {
  const I r = as_int(res);
  const I n = as_int(inv.order);
  switch (id) {
    case PropId::DiamTree: {
      if (!tree_not_path(inv)) return {not_applicable(id, "d<=2res-4", "requires a tree that is not a path")};
      const bool family = inv.spider && as_int((*inv.spider)[1]) == r - 2 && as_int((*inv.spider)[2]) == r - 2;
      return {check(id, "d<=2res-4", as_int(inv.diameter), 2 * r - 4, family)};
    }
    case PropId::Girth: {
      if (inv.is_tree || inv.is_cycle) return {not_applicable(id, "g<=2res-1", "requires a graph that is neither a tree nor a cycle")};
      return {check(id, "g<=2res-1", as_int(inv.girth.length()), 2 * r - 1)};
    }
    case PropId::CliqueUB: {
      // K1 is complete but sits below the bound under the res(K1) = 1
      // convention, so the equality characterisation covers n >= 2.
      std::optional<bool> family;
      if (inv.order >= 2) family = inv.is_complete;
      return {check(id, "omega<=res+1", as_int(inv.omega), r + 1, family)};
    }
    case PropId::OrderBounds: {
      if (inv.is_path || inv.is_cycle) {
        return {not_applicable(id, "lower", "requires a graph that is neither a path nor a cycle"),
                not_applicable(id, "upper", "requires a graph that is neither a path nor a cycle")};
      }
      const std::string row = inv.girth.is(3)   ? "upper:g=3"
                              : inv.girth.is(4) ? "upper:g=4"
                              : inv.girth.is(5) ? "upper:g=5"
                              : inv.max_degree > 3 ? "upper:g>5,maxdeg>3"
                                                   : "upper:g>5,maxdeg=3";
      return {check(id, "lower", r + 1, n),
              check(id, row, n, order_upper_bound(res, inv.girth, inv.max_degree))};
    }
    case PropId::OrderTree: {
      if (!tree_not_path(inv)) return {not_applicable(id, "n<=3res-5", "requires a tree that is not a path")};
      const bool family = inv.spider && (*inv.spider)[0] == (*inv.spider)[2] && as_int((*inv.spider)[0]) == r - 2;
      return {check(id, "n<=3res-5", n, 3 * r - 5, family)};
    }
    case PropId::MaxDeg: {
      if (inv.is_path || inv.is_cycle) return {not_applicable(id, "maxdeg", "requires a graph that is neither a path nor a cycle")};
      if (inv.girth.is(3)) return {check(id, "maxdeg<=3res-4", as_int(inv.max_degree), 3 * r - 4)};
      return {check(id, "maxdeg<=res", as_int(inv.max_degree), r)};
    }
    case PropId::MaxDegTree: {
      if (!tree_not_path(inv)) return {not_applicable(id, "maxdeg<=res", "requires a tree that is not a path")};
      return {check(id, "maxdeg<=res", as_int(inv.max_degree), r, inv.is_star)};
    }
    case PropId::Chain: {
      const char* clauses[] = {"1<=dim", "dim<=updim", "updim<=res", "res<=n-1"};
      std::string reason;
      if (inv.order < 2) reason = "requires at least two vertices";
      if (inv.order > options.chain_max_order) {
        reason = "order " + std::to_string(inv.order) + " above the dimension cap " +
                 std::to_string(options.chain_max_order);
      }
      if (!reason.empty()) {
        std::vector<BoundVerdict> out;
        for (const char* c : clauses) out.push_back(not_applicable(id, c, reason));
        return out;
      }
      const DimensionReport d = upper_dimension(g);
      const I dim = as_int(d.dim);
      const I updim = as_int(*d.updim);
      return {check(id, clauses[0], 1, dim), check(id, clauses[1], dim, updim),
              check(id, clauses[2], updim, r), check(id, clauses[3], r, n - 1)};
    }
  }
  return {};
}

std::vector<BoundVerdict> verify_bounds(const Graph& g, const InvariantSummary& inv, std::size_t res,
                                        const BoundOptions& options) {
  std::vector<BoundVerdict> out;
  for (PropId id : kAllProps) {
    auto part = verify_bound(id, g, inv, res, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<VertexPair> pairs_of(std::span<const Vertex> a) {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) out.push_back(VertexPair::of(a[i], a[j]));
  }
  return out;
}

CountingCheck counting_lemma_check(const DistanceMatrix& dm, std::size_t res,
                                   std::span<const VertexPair> pairs,
                                   std::span<const std::vector<Vertex>> parts,
                                   std::span<const std::size_t> k) {
  const std::size_t n = dm.order();
  if (k.size() != parts.size()) raise(ErrorKind::InvalidPartition, "one k value is needed per part");
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& part : parts) {
    for (Vertex v : part) {
      if (v >= n || seen[v]) raise(ErrorKind::InvalidPartition, "parts overlap or leave the vertex range");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) raise(ErrorKind::InvalidPartition, "parts do not cover every vertex");
  for (const auto& p : pairs) {
    if (p.first == p.second) raise(ErrorKind::DegeneratePair, "pair with equal ends");
    if (p.first >= n || p.second >= n) raise(ErrorKind::IndexOutOfRange, "pair vertex out of range");
  }

  CountingCheck out;
  out.hypothesis_ok = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      std::size_t unresolved = 0;
      for (const auto& p : pairs) unresolved += dm(v, p.first) == dm(v, p.second) ? 1 : 0;
      if (unresolved < k[i]) out.hypothesis_ok = false;
    }
    out.lhs += static_cast<I>(parts[i].size() * k[i]);
  }
  out.rhs = static_cast<I>(pairs.size()) * (static_cast<I>(res) - 1);
  out.inequality_ok = out.lhs <= out.rhs;
  return out;
}

}  // namespace resnum
