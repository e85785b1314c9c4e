#include "resnum/families.hpp"

#include <string>

#include "resnum/error.hpp"

namespace resnum {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) raise(ErrorKind::InvalidFamilyParam, what);
}

void add_path(std::vector<Edge>& edges, Vertex from, Vertex first, std::size_t length) {
  Vertex prev = from;
  for (std::size_t i = 0; i < length; ++i) {
    edges.emplace_back(prev, first + static_cast<Vertex>(i));
    prev = first + static_cast<Vertex>(i);
  }
}

std::vector<Edge> cycle_edges(Vertex first, std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.emplace_back(first + static_cast<Vertex>(i), first + static_cast<Vertex>((i + 1) % m));
  }
  return edges;
}

std::vector<Edge> clique_edges(std::size_t a) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = i + 1; j < a; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

Graph proof_witness(int index) {
  require(index >= 1 && index <= 4, "proof witness index must be 1..4");
  constexpr Vertex u = 4, v = 5, w = 6;
  std::vector<Edge> edges = clique_edges(4);
  edges.insert(edges.end(), {{u, 0}, {u, 1}, {v, 1}, {v, 2}});
  if (index == 2) edges.emplace_back(u, v);
  if (index <= 2) return Graph::from_edge_list(6, edges);
  edges.insert(edges.end(), {{w, 1}, {w, 3}});
  if (index == 4) edges.insert(edges.end(), {{u, v}, {v, w}, {u, w}});
  return Graph::from_edge_list(7, edges);
}

}  // namespace

FamilySpec join(FamilySpec left, FamilySpec right) {
  return family::Join{std::make_shared<const FamilySpec>(std::move(left)),
                      std::make_shared<const FamilySpec>(std::move(right))};
}

Graph graph_join(const Graph& left, const Graph& right) {
  const std::size_t a = left.order();
  const std::size_t b = right.order();
  std::vector<Edge> edges = left.edges();
  for (const auto& [x, y] : right.edges()) {
    edges.emplace_back(static_cast<Vertex>(x + a), static_cast<Vertex>(y + a));
  }
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) edges.emplace_back(x, static_cast<Vertex>(y + a));
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph generate(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Path& p) {
            require(p.n >= 1, "path needs n >= 1");
            std::vector<Edge> edges;
            add_path(edges, 0, 1, p.n - 1);
            return Graph::from_edge_list(p.n, edges);
          },
          [](const family::Cycle& c) {
            require(c.n >= 3, "cycle needs n >= 3");
            return Graph::from_edge_list(c.n, cycle_edges(0, c.n));
          },
          [](const family::Complete& k) {
            require(k.n >= 1, "complete graph needs n >= 1");
            return Graph::from_edge_list(k.n, clique_edges(k.n));
          },
          [](const family::Star& s) {
            require(s.a >= 1, "star needs a >= 1");
            std::vector<Edge> edges;
            for (Vertex i = 1; i <= s.a; ++i) edges.emplace_back(0, i);
            return Graph::from_edge_list(s.a + 1, edges);
          },
          [](const family::Spider& s) {
            require(s.a >= 1 && s.b >= 1 && s.c >= 1, "spider legs must be >= 1");
            std::vector<Edge> edges;
            add_path(edges, 0, 1, s.a);
            add_path(edges, 0, static_cast<Vertex>(1 + s.a), s.b);
            add_path(edges, 0, static_cast<Vertex>(1 + s.a + s.b), s.c);
            return Graph::from_edge_list(s.a + s.b + s.c + 1, edges);
          },
          [](const family::Gab& g) {
            require(g.b >= 1 && g.b < g.a, "G_{a,b} needs 1 <= b < a");
            std::vector<Edge> edges = clique_edges(g.a);
            for (Vertex i = 0; i < g.b; ++i) edges.emplace_back(static_cast<Vertex>(g.a), i);
            return Graph::from_edge_list(g.a + 1, edges);
          },
          [](const family::Wheel& w) {
            require(w.m >= 3, "wheel needs m >= 3");
            std::vector<Edge> edges = cycle_edges(1, w.m);
            for (Vertex i = 1; i <= w.m; ++i) edges.emplace_back(0, i);
            return Graph::from_edge_list(w.m + 1, edges);
          },
          [](const family::PendantCycle& p) {
            require(p.a >= 3, "pendant cycle needs a >= 3");
            const std::size_t m = 2 * p.a + 1;
            std::vector<Edge> edges = cycle_edges(0, m);
            edges.emplace_back(0, static_cast<Vertex>(m));
            return Graph::from_edge_list(m + 1, edges);
          },
          [](const family::TriangleTripod& t) {
            require(t.r >= 3, "triangle tripod needs r >= 3");
            std::vector<Edge> edges = cycle_edges(0, 3);
            const std::size_t leg = t.r - 2;
            for (Vertex corner = 0; corner < 3; ++corner) {
              add_path(edges, corner, static_cast<Vertex>(3 + corner * leg), leg);
            }
            return Graph::from_edge_list(3 * (t.r - 1), edges);
          },
          [](const family::ProofWitness& w) { return proof_witness(w.index); },
          [](const family::Join& j) {
            require(j.left && j.right, "join needs two operands");
            return graph_join(generate(*j.left), generate(*j.right));
          },
      },
      spec);
}

std::size_t family_order(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const family::Path& p) { return p.n; },
                        [](const family::Cycle& c) { return c.n; },
                        [](const family::Complete& k) { return k.n; },
                        [](const family::Star& s) { return s.a + 1; },
                        [](const family::Spider& s) { return s.a + s.b + s.c + 1; },
                        [](const family::Gab& g) { return g.a + 1; },
                        [](const family::Wheel& w) { return w.m + 1; },
                        [](const family::PendantCycle& p) { return 2 * p.a + 2; },
                        [](const family::TriangleTripod& t) { return 3 * (t.r - 1); },
                        [](const family::ProofWitness& w) -> std::size_t { return w.index <= 2 ? 6 : 7; },
                        [](const family::Join& j) { return family_order(*j.left) + family_order(*j.right); },
                    },
                    spec);
}

std::string describe(const FamilySpec& spec) {
  auto s = [](std::size_t v) { return std::to_string(v); };
  return std::visit(
      Overloaded{
          [&](const family::Path& p) { return "P" + s(p.n); },
          [&](const family::Cycle& c) { return "C" + s(c.n); },
          [&](const family::Complete& k) { return "K" + s(k.n); },
          [&](const family::Star& st) { return "K1," + s(st.a); },
          [&](const family::Spider& sp) { return "S" + s(sp.a) + "," + s(sp.b) + "," + s(sp.c); },
          [&](const family::Gab& g) { return "G" + s(g.a) + "," + s(g.b); },
          [&](const family::Wheel& w) { return "W1," + s(w.m); },
          [&](const family::PendantCycle& p) { return "C" + s(2 * p.a + 1) + "+pendant"; },
          [&](const family::TriangleTripod& t) { return "Tripod" + s(t.r); },
          [&](const family::ProofWitness& w) { return "G^" + std::to_string(w.index); },
          [&](const family::Join& j) { return "(" + describe(*j.left) + ")+(" + describe(*j.right) + ")"; },
      },
      spec);
}

FamilySpec parse_family(const std::string& name, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count) {
    require(params.size() == count,
            "family " + name + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") { need(1); return family::Path{params[0]}; }
  if (name == "cycle") { need(1); return family::Cycle{params[0]}; }
  if (name == "complete") { need(1); return family::Complete{params[0]}; }
  if (name == "star") { need(1); return family::Star{params[0]}; }
  if (name == "spider") { need(3); return family::Spider{params[0], params[1], params[2]}; }
  if (name == "gab") { need(2); return family::Gab{params[0], params[1]}; }
  if (name == "wheel") { need(1); return family::Wheel{params[0]}; }
  if (name == "pendant-cycle") { need(1); return family::PendantCycle{params[0]}; }
  if (name == "triangle-tripod") { need(1); return family::TriangleTripod{params[0]}; }
  if (name == "witness") { need(1); return family::ProofWitness{static_cast<int>(params[0])}; }
  raise(ErrorKind::InvalidFamilyParam, "unknown family '" + name + "'");
}

}  // namespace resnum
