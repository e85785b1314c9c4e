#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "resnum/enumerate.hpp"
#include "resnum/graph.hpp"

// Reference computations written directly from the definitions. They share no
// code with the library beyond Graph::adjacent.
namespace oracle {

using resnum::Edge;
using resnum::Graph;
using resnum::Vertex;

inline std::vector<Graph> connected_graphs(std::size_t n) {
  resnum::EnumConstraints c;
  c.n = n;
  return resnum::enumerate_graphs(c);
}

inline std::vector<Graph> trees(std::size_t n) {
  resnum::EnumConstraints c;
  c.n = n;
  c.trees_only = true;
  return resnum::enumerate_graphs(c);
}

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(Vertex(u), Vertex(v))) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool resolves(const std::vector<std::vector<int>>& d, const std::vector<Vertex>& s) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool ok = false;
      for (Vertex u : s)
        if (d[u][x] != d[u][y]) ok = true;
      if (!ok) return false;
    }
  return true;
}

// Calls f on every k-subset of {0..n-1}; stops early when f returns false.
template <class F>
bool each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<Vertex> s(k);
  std::iota(s.begin(), s.end(), Vertex{0});
  if (k > n) return true;
  while (true) {
    if (!f(s)) return false;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// Smallest k with every k-subset resolving.
inline std::size_t res(const Graph& g) {
  auto d = floyd(g);
  const std::size_t n = g.order();
  if (n <= 1) return 1;
  for (std::size_t k = 1; k <= n; ++k)
    if (each_subset(n, k, [&](const std::vector<Vertex>& s) { return resolves(d, s); })) return k;
  return n;
}

inline std::size_t dim(const Graph& g) {
  auto d = floyd(g);
  for (std::size_t k = 1; k <= g.order(); ++k)
    if (!each_subset(g.order(), k, [&](const std::vector<Vertex>& s) { return !resolves(d, s); }))
      return k;
  return g.order();
}

inline std::size_t clique(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n > 0 ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && !g.adjacent(Vertex(i), Vertex(j))) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::size_t(__builtin_popcount(mask)));
  }
  return best;
}

// Shortest simple cycle by explicit cycle search; 0 when acyclic.
inline std::size_t girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<char> used(n, 0);
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex s, Vertex v) -> void {
    for (Vertex w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (w == s && path.size() >= 3) {
        if (best == 0 || path.size() < best) best = path.size();
      } else if (w > s && !used[w]) {
        used[w] = 1;
        path.push_back(w);
        self(self, s, w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used.assign(n, 0);
    used[s] = 1;
    path = {s};
    dfs(dfs, s, s);
  }
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex i = 0; i < a.order() && ok; ++i)
      for (Vertex j = i + 1; j < a.order() && ok; ++j)
        if (a.adjacent(i, j) != b.adjacent(p[i], p[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges).permute(random_permutation(n, rng));
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace oracle
