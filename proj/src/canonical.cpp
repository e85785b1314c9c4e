#include "resnum/canonical.hpp"

#include <algorithm>
#include <string>

#include "resnum/error.hpp"

namespace resnum {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<Vertex>>;

void set_form_bit(CanonicalForm& form, std::size_t k) {
  form.bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
}

bool form_bit(const CanonicalForm& form, std::size_t k) {
  return ((form.bits[k / 64] >> (63 - k % 64)) & 1U) != 0;
}

/// Search state for one graph of at most kMaxCanonicalOrder vertices.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()), adj_(n_, 0) {
    for (Vertex u = 0; u < n_; ++u) adj_[u] = static_cast<Mask>(g.row(u)[0]);
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Cells cells(1);
    for (Vertex v = 0; v < n_; ++v) cells[0].push_back(v);
    search(std::move(cells));
    return best_perm_;
  }

 private:
  // Splits cells by neighbour counts into every current cell until stable.
  // Sub-cells are ordered by their count vectors, so the result depends only
  // on the graph and the incoming ordered partition.
  void refine(Cells& cells) const {
    while (true) {
      std::vector<Mask> cell_masks(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_masks[c] |= Mask{1} << v;
      }
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint8_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::uint8_t> key(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c) {
            key[c] = static_cast<std::uint8_t>(std::popcount(adj_[v] & cell_masks[c]));
          }
          keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        next.push_back({keyed[0].second});
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  bool twins(Vertex u, Vertex v) const {
    const Mask mu = adj_[u] & ~(Mask{1} << v);
    const Mask mv = adj_[v] & ~(Mask{1} << u);
    return mu == mv;
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    // Swapping two twins is an automorphism fixing every individualised
    // vertex, so their subtrees reach the same leaves.
    std::vector<Vertex> reps;
    for (Vertex x : cells[target]) {
      const bool covered = std::any_of(reps.begin(), reps.end(), [&](Vertex r) { return twins(r, x); });
      if (!covered) reps.push_back(x);
    }
    for (Vertex x : reps) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({x});
        std::vector<Vertex> rest;
        for (Vertex v : cells[c]) {
          if (v != x) rest.push_back(v);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> perm(n_);
    std::vector<Vertex> inverse(n_);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      perm[cells[c][0]] = static_cast<Vertex>(c);
      inverse[c] = cells[c][0];
    }
    CanonicalForm form;
    form.n = n_;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if ((adj_[inverse[i]] >> inverse[j]) & 1U) set_form_bit(form, pair_index(i, j));
      }
    }
    if (best_perm_.empty() || form < best_form_) {
      best_form_ = form;
      best_perm_ = std::move(perm);
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  CanonicalForm best_form_;
  std::vector<Vertex> best_perm_;
};

void check_cap(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    raise(ErrorKind::TooLarge, "canonical form supports at most " +
                                   std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                                   std::to_string(g.order()));
  }
}

}  // namespace

CanonicalForm labeled_form(const Graph& g) {
  check_cap(g);
  CanonicalForm form;
  form.n = g.order();
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) set_form_bit(form, pair_index(i, j));
    }
  }
  return form;
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
  check_cap(g);
  return Canonicalizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return labeled_form(canonical_graph(g)); }

Graph canonical_graph(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return g.permute(perm);
}

Graph to_graph(const CanonicalForm& form) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < form.n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (form_bit(form, pair_index(i, j))) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(form.n, edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace resnum
