#include "resnum/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "resnum/error.hpp"

namespace resnum {

namespace {

constexpr std::size_t kUnreached = ~std::size_t{0};

std::size_t effective_min_girth(const EnumConstraints& c) {
  if (c.trees_only) return kUnreached;
  return c.min_girth.value_or(3);
}

/// Hop distance from u to v, kUnreached when they lie in different components.
std::size_t hop_distance(const Graph& g, Vertex u, Vertex v) {
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::queue<Vertex> queue;
  dist[u] = 0;
  queue.push(u);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    if (x == v) return dist[x];
    g.neighbors(x).for_each([&](Vertex y) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    });
  }
  return kUnreached;
}

bool accepts(const EnumConstraints& c, const Graph& g) {
  if ((c.connected_only || c.trees_only) && !is_connected(g)) return false;
  if (c.trees_only && g.size() + 1 != g.order()) return false;
  return true;
}

}  // namespace

void check_enum_constraints(const EnumConstraints& c) {
  if (c.n == 0) raise(ErrorKind::TooLarge, "enumeration needs n >= 1");
  if (c.n > kMaxCanonicalOrder) {
    raise(ErrorKind::TooLarge, "enumeration order " + std::to_string(c.n) + " exceeds the canonical-form cap");
  }
  if (c.trees_only) {
    if (c.n > kTreeMaxOrder) {
      raise(ErrorKind::TooLarge, "tree enumeration supports n <= " + std::to_string(kTreeMaxOrder));
    }
    return;
  }
  if (c.n <= kExhaustiveMaxOrder) return;
  const bool constrained = c.max_degree && *c.max_degree <= 3 && c.min_girth && *c.min_girth >= 5;
  if (!constrained || c.n > kConstrainedMaxOrder) {
    raise(ErrorKind::TooLarge,
          "n = " + std::to_string(c.n) + " requires max degree <= 3 and girth >= 5 (n <= " +
              std::to_string(kConstrainedMaxOrder) + ")");
  }
}

// Edge augmentation one level at a time: every graph with m + 1 edges that
// meets the (hereditary) degree and girth constraints arises from one with m
// edges by adding an edge, so deduplicating each level by canonical form
// reaches every class exactly once.
void enumerate_graphs(const EnumConstraints& c, const std::function<void(const Graph&)>& sink) {
  check_enum_constraints(c);
  const std::size_t n = c.n;
  const std::size_t min_girth = effective_min_girth(c);
  const std::size_t degree_cap = c.max_degree.value_or(n);
  const std::size_t max_edges = c.trees_only ? n - 1 : std::min(n * (n - 1) / 2, n * degree_cap / 2);

  std::vector<Edge> slots;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  std::mt19937_64 rng(c.exploration_seed);

  std::set<CanonicalForm> emitted;
  std::set<CanonicalForm> level{canonical_form(Graph::from_edge_list(n, {}))};
  for (std::size_t m = 0;; ++m) {
    std::set<CanonicalForm> next;
    for (const auto& form : level) {
      const Graph g = to_graph(form);
      if (accepts(c, g)) emitted.insert(form);
      if (m == max_edges) continue;
      if (c.exploration_seed != 0) std::shuffle(slots.begin(), slots.end(), rng);
      for (const auto& [u, v] : slots) {
        if (g.adjacent(u, v) || g.degree(u) >= degree_cap || g.degree(v) >= degree_cap) continue;
        if (min_girth > 3) {
          const std::size_t d = hop_distance(g, u, v);
          if (d != kUnreached && (min_girth == kUnreached || d + 1 < min_girth)) continue;
        }
        next.insert(canonical_form(g.with_edge(u, v)));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  for (const auto& form : emitted) sink(to_graph(form));
}

std::vector<Graph> enumerate_graphs(const EnumConstraints& c) {
  std::vector<Graph> out;
  enumerate_graphs(c, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

struct PairTable {
  std::size_t pairs = 0;
  std::vector<std::pair<Vertex, Vertex>> ends;  // index -> (i, j)
  std::vector<std::vector<std::size_t>> index;  // (i, j) -> index
};

PairTable pair_table(std::size_t n) {
  PairTable t;
  t.index.assign(n, std::vector<std::size_t>(n, 0));
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      t.index[i][j] = t.index[j][i] = t.ends.size();
      t.ends.emplace_back(i, j);
    }
  }
  t.pairs = t.ends.size();
  return t;
}

/// Every relabeling as a map on pair indices.
std::vector<std::vector<std::size_t>> pair_permutations(std::size_t n, const PairTable& t) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    std::vector<std::size_t> map(t.pairs);
    for (std::size_t k = 0; k < t.pairs; ++k) map[k] = t.index[perm[t.ends[k].first]][perm[t.ends[k].second]];
    out.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Bit k of the string is the MSB-first position k, so smaller value means
/// lexicographically smaller string.
std::uint64_t min_over(std::uint64_t subset, const PairTable& t,
                       const std::vector<std::vector<std::size_t>>& perms) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& map : perms) {
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < t.pairs; ++k) {
      if ((subset >> k) & 1U) value |= std::uint64_t{1} << (t.pairs - 1 - map[k]);
    }
    best = std::min(best, value);
  }
  return best;
}

CanonicalForm to_form(std::size_t n, std::size_t pairs, std::uint64_t value) {
  CanonicalForm form;
  form.n = n;
  form.bits[0] = pairs == 0 ? 0 : value << (64 - pairs);
  return form;
}

bool subset_connected(std::size_t n, std::uint64_t subset, const PairTable& t) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t k = 0; k < t.pairs; ++k) {
    if (((subset >> k) & 1U) == 0) continue;
    const Vertex a = find(t.ends[k].first);
    const Vertex b = find(t.ends[k].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

std::set<CanonicalForm> naive_enumeration_oracle(std::size_t n) {
  if (n == 0 || n > kNaiveOracleMaxOrder) {
    raise(ErrorKind::TooLarge, "naive enumeration supports 1 <= n <= " + std::to_string(kNaiveOracleMaxOrder));
  }
  const PairTable t = pair_table(n);
  const auto perms = pair_permutations(n, t);
  std::set<CanonicalForm> classes;
  // Each unvisited edge subset starts a new class; its whole orbit under the
  // n! relabelings is marked so no other member is examined again.
  std::vector<bool> visited(std::size_t{1} << t.pairs, false);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << t.pairs); ++subset) {
    if (visited[subset]) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& map : perms) {
      std::uint64_t image = 0;
      std::uint64_t value = 0;
      for (std::size_t k = 0; k < t.pairs; ++k) {
        if ((subset >> k) & 1U) {
          image |= std::uint64_t{1} << map[k];
          value |= std::uint64_t{1} << (t.pairs - 1 - map[k]);
        }
      }
      visited[image] = true;
      best = std::min(best, value);
    }
    if (subset_connected(n, subset, t)) classes.insert(to_form(n, t.pairs, best));
  }
  return classes;
}

CanonicalForm naive_min_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > 8) raise(ErrorKind::TooLarge, "naive_min_form supports 1 <= n <= 8");
  const PairTable t = pair_table(n);
  std::uint64_t subset = 0;
  for (std::size_t k = 0; k < t.pairs; ++k) {
    if (g.adjacent(t.ends[k].first, t.ends[k].second)) subset |= std::uint64_t{1} << k;
  }
  return to_form(n, t.pairs, min_over(subset, t, pair_permutations(n, t)));
}

}  // namespace resnum
