#include <doctest.h>

#include <random>
#include <vector>

#include "resnum/distance.hpp"
#include "resnum/error.hpp"
#include "resnum/families.hpp"
#include "resnum/invariants.hpp"
#include "support.hpp"

using namespace resnum;

TEST_SUITE("invariants") {

TEST_CASE("summary of C5") {
  auto s = invariant_summary(generate(family::Cycle{5}));
  CHECK(s.diameter == 2);
  CHECK(s.girth == Girth::finite(5));
  CHECK(s.omega == 2);
  CHECK(s.max_degree == 2);
  CHECK(s.is_cycle);
  CHECK_FALSE(s.is_tree);
  CHECK_FALSE(s.spider.has_value());
}

TEST_CASE("summary of K13") {
  auto s = invariant_summary(generate(family::Star{3}));
  CHECK(s.diameter == 2);
  CHECK(s.girth.is_infinite());
  CHECK(s.girth.to_string() == "inf");
  CHECK(s.omega == 2);
  CHECK(s.max_degree == 3);
  CHECK(s.is_star);
  CHECK(s.is_tree);
  REQUIRE(s.spider.has_value());
  CHECK(*s.spider == SpiderLegs{1, 1, 1});
}

TEST_CASE("summary of W15") {
  auto s = invariant_summary(generate(family::Wheel{5}));
  CHECK(s.girth == Girth::finite(3));
  CHECK(s.max_degree == 5);
  CHECK(s.omega == 3);
  CHECK(s.diameter == 2);
}

TEST_CASE("shape predicates") {
  CHECK(is_path(Graph::from_edge_list(1, {})));
  CHECK(is_path(generate(family::Path{2})));
  CHECK(is_path(generate(family::Path{9})));
  CHECK_FALSE(is_path(generate(family::Star{3})));
  CHECK(is_star(generate(family::Path{3})));
  CHECK(is_cycle(generate(family::Cycle{3})));
  CHECK_FALSE(is_cycle(generate(family::Path{4})));
  CHECK(is_complete(generate(family::Complete{6})));
  CHECK(is_tree(generate(family::Spider{2, 3, 4})));
  CHECK_FALSE(is_tree(generate(family::Cycle{4})));
}

TEST_CASE("spider signature") {
  CHECK(spider_signature(generate(family::Spider{2, 3, 3})) == SpiderLegs{2, 3, 3});
  CHECK(spider_signature(generate(family::Spider{4, 1, 2})) == SpiderLegs{1, 2, 4});
  CHECK_FALSE(spider_signature(generate(family::Path{7})).has_value());
  CHECK_FALSE(spider_signature(generate(family::Star{4})).has_value());
  CHECK_FALSE(spider_signature(generate(family::Wheel{5})).has_value());
}

TEST_CASE("distance window examples") {
  auto c5 = generate(family::Cycle{5});
  std::vector<Vertex> all{0, 1, 2, 3, 4};
  auto w = distance_window(distance_matrix(c5), 2, all);
  CHECK(w.distance == 0);
  CHECK(w.window_ok);

  auto c6 = generate(family::Cycle{6});
  std::vector<Vertex> far{3};
  auto w6 = distance_window(distance_matrix(c6), 0, far);
  CHECK(w6.distance == 3);
  CHECK(w6.set_diameter == 0);
  CHECK(w6.window_ok);

  // Wheel: hub is vertex 0, rim 1..5.
  auto wheel = generate(family::Wheel{5});
  auto dm = distance_matrix(wheel);
  std::vector<Vertex> tri{0, 1, 2};
  auto ww = distance_window(dm, 4, tri);
  CHECK(ww.distance == 1);
  CHECK(ww.window_ok);

  std::vector<Vertex> none;
  CHECK_THROWS_AS(distance_window(dm, 0, none), Error);
}

TEST_CASE("clique number and girth match brute force for n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& g : oracle::connected_graphs(n)) {
      auto s = invariant_summary(g);
      CHECK(s.omega == oracle::clique(g));
      auto cl = maximum_clique(g);
      CHECK(cl.size() == s.omega);
      for (std::size_t i = 0; i < cl.size(); ++i)
        for (std::size_t j = i + 1; j < cl.size(); ++j) CHECK(g.adjacent(cl[i], cl[j]));
      std::size_t gb = oracle::girth(g);
      CHECK(s.girth == (gb == 0 ? Girth::infinite() : Girth::finite(gb)));
      CHECK((s.omega >= 3) == s.girth.is(3));
      if (s.is_path || s.is_star || s.spider) CHECK(s.is_tree);
      if (s.spider) CHECK(s.max_degree == 3);
    }
}

TEST_CASE("distance window holds on random samples") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = oracle::random_connected(2 + rng() % 30, 0.1, rng);
    auto dm = distance_matrix(g);
    std::vector<Vertex> a;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 4 == 0) a.push_back(v);
    if (a.empty()) a.push_back(Vertex(rng() % g.order()));
    CHECK(distance_window(dm, Vertex(rng() % g.order()), a).window_ok);
  }
}

}  // TEST_SUITE
