#include "resnum/resolve.hpp"

#include <string>

#include "resnum/error.hpp"
#include "resnum/kernels.hpp"

namespace resnum {

namespace {

using Mask = std::uint32_t;

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap) {
    raise(ErrorKind::TooLarge, std::string(what) + " supports at most " + std::to_string(cap) +
                                   " vertices, got " + std::to_string(g.order()));
  }
}

/// resolvers[p] = vertices resolving the p-th pair (x < y, lexicographic).
std::vector<Mask> resolver_masks(const DistanceMatrix& dm) {
  const std::size_t n = dm.order();
  std::vector<Mask> out;
  out.reserve(n * (n - 1) / 2);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      Mask m = 0;
      for (Vertex u = 0; u < n; ++u) {
        if (dm(u, x) != dm(u, y)) m |= Mask{1} << u;
      }
      out.push_back(m);
    }
  }
  return out;
}

bool resolves_all(Mask set, const std::vector<Mask>& resolvers) {
  for (Mask r : resolvers) {
    if ((set & r) == 0) return false;
  }
  return true;
}

std::vector<Vertex> mask_members(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1U) out.push_back(v);
  }
  return out;
}

/// Visits k-subsets of {0..n-1} in lexicographic order of their sorted
/// member lists until fn returns true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  while (true) {
    Mask m = 0;
    for (Vertex v : idx) m |= Mask{1} << v;
    if (fn(m)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexPair VertexPair::of(Vertex a, Vertex b) {
  if (a == b) raise(ErrorKind::DegeneratePair, "pair {" + std::to_string(a) + "," + std::to_string(b) + "}");
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

std::vector<Vertex> non_resolvers(const DistanceMatrix& dm, VertexPair pair) {
  return non_resolvers(dm, pair.first, pair.second);
}

std::vector<Vertex> non_resolvers(const DistanceMatrix& dm, Vertex x, Vertex y) {
  if (x == y) raise(ErrorKind::DegeneratePair, "x and y coincide");
  if (x >= dm.order() || y >= dm.order()) raise(ErrorKind::IndexOutOfRange, "pair vertex out of range");
  std::vector<Vertex> out;
  const auto rx = dm.row(x);
  const auto ry = dm.row(y);
  for (Vertex u = 0; u < dm.order(); ++u) {
    if (rx[u] == ry[u]) out.push_back(u);
  }
  return out;
}

ResolvingReport resolving_number(const Graph& g) {
  require_connected(g, "resolving_number");
  return resolving_number(g, distance_matrix(g));
}

ResolvingReport resolving_number(const Graph& g, const DistanceMatrix& dm) {
  require_connected(g, "resolving_number");
  const std::size_t n = dm.order();
  ResolvingReport report;
  if (n == 1) return report;

  // d(u,x) = d(u,y) is symmetric in u's row vs column, so comparing rows x
  // and y counts exactly the non-resolvers of {x, y}.
  std::size_t best = 0;
  VertexPair best_pair{0, 1};
  bool found = false;
  for (Vertex x = 0; x < n; ++x) {
    const auto rx = dm.row(x);
    for (Vertex y = x + 1; y < n; ++y) {
      const std::size_t count = kernels::count_equal(rx, dm.row(y));
      if (!found || count > best) {
        best = count;
        best_pair = {x, y};
        found = true;
      }
    }
  }
  report.res = best + 1;
  report.witness_pair = best_pair;
  report.witness_nonresolving_set = non_resolvers(dm, best_pair);
  return report;
}

std::optional<VertexPair> unresolved_pair(const DistanceMatrix& dm, std::span<const Vertex> s) {
  const std::size_t n = dm.order();
  for (Vertex u : s) {
    if (u >= n) raise(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(u) + " out of range");
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      bool resolved = false;
      for (Vertex u : s) {
        if (dm(u, x) != dm(u, y)) {
          resolved = true;
          break;
        }
      }
      if (!resolved) return VertexPair{x, y};
    }
  }
  return std::nullopt;
}

bool is_resolving_set(const DistanceMatrix& dm, std::span<const Vertex> s) {
  return !unresolved_pair(dm, s).has_value();
}

std::size_t resolving_number_oracle(const Graph& g) {
  check_cap(g, kOracleMaxOrder, "resolving_number_oracle");
  require_connected(g, "resolving_number_oracle");
  const std::size_t n = g.order();
  if (n == 1) return 1;
  const DistanceMatrix dm = distance_matrix(g);
  for (std::size_t k = 1; k <= n; ++k) {
    // Looks for a k-subset whose distance vectors collide on some pair.
    const bool has_bad = for_each_combination(n, k, [&](Mask m) {
      const auto members = mask_members(m);
      return !is_resolving_set(dm, members);
    });
    if (!has_bad) return k;
  }
  return n;
}

DimensionReport metric_dimension(const Graph& g) {
  check_cap(g, kDimensionMaxOrder, "metric_dimension");
  require_connected(g, "metric_dimension");
  const std::size_t n = g.order();
  DimensionReport report;
  if (n == 1) {
    report.dim = 1;
    report.witness_min_set = {0};
    return report;
  }
  const auto resolvers = resolver_masks(distance_matrix(g));
  for (std::size_t k = 1; k <= n; ++k) {
    Mask witness = 0;
    const bool found = for_each_combination(n, k, [&](Mask m) {
      if (!resolves_all(m, resolvers)) return false;
      witness = m;
      return true;
    });
    if (found) {
      report.dim = k;
      report.witness_min_set = mask_members(witness);
      return report;
    }
  }
  raise(ErrorKind::TheoremViolation, "vertex set does not resolve the graph");
}

DimensionReport upper_dimension(const Graph& g) {
  check_cap(g, kUpperDimensionMaxOrder, "upper_dimension");
  DimensionReport report = metric_dimension(g);
  const std::size_t n = g.order();
  if (n == 1) {
    report.updim = 1;
    report.witness_max_minimal_set = {0};
    return report;
  }
  const DistanceMatrix dm = distance_matrix(g);
  const auto resolvers = resolver_masks(dm);
  const std::size_t res = resolving_number(g, dm).res;
  for (std::size_t k = res; k >= report.dim; --k) {
    Mask witness = 0;
    const bool found = for_each_combination(n, k, [&](Mask m) {
      if (!resolves_all(m, resolvers)) return false;
      // Supersets of resolving sets resolve, so single deletions decide
      // minimality.
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        if (resolves_all(m & ~(rest & -rest), resolvers)) return false;
      }
      witness = m;
      return true;
    });
    if (found) {
      report.updim = k;
      report.witness_max_minimal_set = mask_members(witness);
      return report;
    }
  }
  raise(ErrorKind::TheoremViolation, "no minimal resolving set between dim and res");
}

}  // namespace resnum
