#include "resnum/invariants.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "resnum/error.hpp"

namespace resnum {

std::string Girth::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(length_);
}

Girth girth(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) adj[u] = g.neighbor_list(u);

  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n);
  std::queue<Vertex> queue;
  for (const auto& [a, b] : g.edges()) {
    // Shortest a-b path avoiding the edge ab; stop once it cannot improve.
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[a] = 0;
    queue = {};
    queue.push(a);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      if (dist[u] + 2 >= best) break;
      for (Vertex v : adj[u]) {
        if (dist[v] != kUnseen || (u == a && v == b)) continue;
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
      if (dist[b] != kUnseen) break;
    }
    if (dist[b] != kUnseen) best = std::min(best, dist[b] + 1);
  }
  return best == kUnseen ? Girth::infinite() : Girth::finite(best);
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {
    for (Vertex u = 0; u < g.order(); ++u) rows_.push_back(g.neighbors(u));
  }

  std::vector<Vertex> run() {
    const std::size_t n = g_.order();
    if (n == 0) return {};
    std::vector<Vertex> current;
    expand(current, VertexSet::full(n), VertexSet(n));
    return best_;
  }

 private:
  void expand(std::vector<Vertex>& current, VertexSet candidates, VertexSet excluded) {
    const std::size_t available = candidates.size();
    if (current.size() + available <= best_.size()) return;
    if (available == 0) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    // Pivot with the most candidate neighbours; branching on its
    // non-neighbours still reaches every maximal clique.
    Vertex pivot = candidates.first();
    std::size_t pivot_score = 0;
    auto score = [&](Vertex u) {
      const std::size_t s = (candidates & rows_[u]).size();
      if (s > pivot_score) {
        pivot_score = s;
        pivot = u;
      }
    };
    candidates.for_each(score);
    excluded.for_each(score);

    VertexSet branch = candidates;
    branch.subtract(rows_[pivot]);
    for (Vertex v : branch.members()) {
      current.push_back(v);
      expand(current, candidates & rows_[v], excluded & rows_[v]);
      current.pop_back();
      candidates.erase(v);
      excluded.insert(v);
      if (current.size() + candidates.size() <= best_.size()) return;
    }
  }

  const Graph& g_;
  std::vector<VertexSet> rows_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g) {
  auto clique = CliqueSearch(g).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::size_t clique_number(const Graph& g) { return maximum_clique(g).size(); }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

bool is_path(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 1) return true;
  if (!is_tree(g)) return false;
  std::size_t leaves = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) > 2) return false;
    leaves += g.degree(u) == 1 ? 1 : 0;
  }
  return leaves == 2;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) return false;
  }
  return true;
}

bool is_star(const Graph& g) {
  if (g.order() < 2 || !is_tree(g)) return false;
  return g.max_degree() == g.order() - 1;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n >= 1 && g.size() == n * (n - 1) / 2;
}

std::optional<SpiderLegs> spider_signature(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  std::optional<Vertex> centre;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) > 3) return std::nullopt;
    if (g.degree(u) == 3) {
      if (centre) return std::nullopt;
      centre = u;
    }
  }
  if (!centre) return std::nullopt;
  SpiderLegs legs{};
  const auto starts = g.neighbor_list(*centre);
  for (std::size_t i = 0; i < 3; ++i) {
    Vertex prev = *centre;
    Vertex cur = starts[i];
    std::size_t length = 1;
    while (g.degree(cur) == 2) {
      const auto next = g.neighbor_list(cur);
      const Vertex step = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step;
      ++length;
    }
    legs[i] = length;
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

InvariantSummary invariant_summary(const Graph& g) {
  require_connected(g, "invariant_summary");
  return invariant_summary(g, distance_matrix(g));
}

InvariantSummary invariant_summary(const Graph& g, const DistanceMatrix& dm) {
  require_connected(g, "invariant_summary");
  InvariantSummary s;
  s.order = g.order();
  s.edges = g.size();
  s.diameter = dm.diameter();
  s.girth = girth(g);
  s.omega = clique_number(g);
  s.max_degree = g.max_degree();
  s.is_tree = is_tree(g);
  s.is_path = is_path(g);
  s.is_cycle = is_cycle(g);
  s.is_star = is_star(g);
  s.is_complete = is_complete(g);
  s.spider = spider_signature(g);
  return s;
}

DistanceWindow distance_window(const DistanceMatrix& dm, Vertex u, std::span<const Vertex> a) {
  if (a.empty()) raise(ErrorKind::EmptySet, "distance_window needs a nonempty vertex set");
  const std::size_t n = dm.order();
  if (u >= n) raise(ErrorKind::IndexOutOfRange, "vertex out of range");
  DistanceWindow w;
  w.distance = std::numeric_limits<std::size_t>::max();
  for (Vertex v : a) {
    if (v >= n) raise(ErrorKind::IndexOutOfRange, "vertex out of range");
    w.distance = std::min<std::size_t>(w.distance, dm(u, v));
    for (Vertex x : a) w.set_diameter = std::max<std::size_t>(w.set_diameter, dm(v, x));
  }
  w.window_ok = std::all_of(a.begin(), a.end(), [&](Vertex v) {
    const std::size_t d = dm(u, v);
    return d >= w.distance && d <= w.distance + w.set_diameter;
  });
  return w;
}

}  // namespace resnum
