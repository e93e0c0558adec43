#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "racg/graph.hpp"

using namespace racg;

namespace {

std::set<VertexId> as_set(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

SimplicialGraph two_points() { return graphs::edgeless(2); }

SimplicialGraph triangle() { return graphs::complete(3); }

}  // namespace

TEST_CASE("construction rejects loops, duplicate edges and duplicate names") {
  CHECK_THROWS_AS(SimplicialGraph({"a"}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialGraph({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("star and link") {
  auto p = graphs::path(3);
  CHECK(star(p, 1) == std::vector<VertexId>{0, 1, 2});
  CHECK(star(p, 0) == std::vector<VertexId>{0, 1});
  CHECK(link(p, 0) == std::vector<VertexId>{1});
  CHECK(star(two_points(), 0) == std::vector<VertexId>{0});
}

TEST_CASE("clique number and triangle-freeness") {
  CHECK(clique_number(graphs::cycle(5)) == 2);
  CHECK(is_triangle_free(graphs::cycle(5)));
  CHECK(clique_number(triangle()) == 3);
  CHECK_FALSE(is_triangle_free(triangle()));
  CHECK(clique_number(SimplicialGraph()) == 0);
  CHECK(clique_number(graphs::edgeless(3)) == 1);
  CHECK(clique_number(graphs::complete(5)) == 5);
}

TEST_CASE("components of the complement of a star") {
  auto p5 = graphs::path(5);
  auto comps = components_minus_star(p5, 2);
  CHECK(comps == std::vector<std::vector<VertexId>>{{0}, {4}});
  CHECK(components_minus_star(graphs::path(3), 1).empty());
  CHECK(components_minus_star(two_points(), 0) == std::vector<std::vector<VertexId>>{{1}});
}

TEST_CASE("star, link and components agree with set comprehension on random graphs") {
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto g = oracle::random_graph(n, 0.4);
    for (VertexId u = 0; u < n; ++u) {
      std::set<VertexId> st;
      for (VertexId v = 0; v < n; ++v)
        if (v == u || g.adjacent(u, v)) st.insert(v);
      CHECK(as_set(star(g, u)) == st);
      std::set<VertexId> lk = st;
      lk.erase(u);
      CHECK(as_set(link(g, u)) == lk);

      // Two vertices outside star(u) share a component iff connected avoiding star(u).
      auto comps = components_minus_star(g, u);
      std::vector<int> comp_of(n, -1);
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
      oracle::UnionFind uf(n);
      for (auto [a, b] : g.edges())
        if (!st.count(a) && !st.count(b)) uf.unite(a, b);
      for (VertexId a = 0; a < n; ++a) {
        CHECK((comp_of[a] == -1) == (st.count(a) == 1));
        for (VertexId b = 0; b < n; ++b)
          if (!st.count(a) && !st.count(b)) CHECK((comp_of[a] == comp_of[b]) == (uf.find(a) == uf.find(b)));
      }
    }
  }
}

TEST_CASE("graph isomorphism") {
  auto p = graphs::path(3);
  SimplicialGraph q({"x", "y", "z"}, {{0, 1}, {1, 2}});
  auto iso = graph_isomorphic(p, q);
  REQUIRE(iso);
  CHECK(*iso == std::vector<VertexId>{0, 1, 2});
  CHECK_FALSE(graph_isomorphic(graphs::cycle(4), graphs::path(4)));
  CHECK(graph_isomorphic(graphs::tpq(1, 2), graphs::tpq(2, 1)));
  CHECK_FALSE(graph_isomorphic(graphs::tpq(1, 3), graphs::tpq(2, 2)));
}

TEST_CASE("graph isomorphism is an equivalence and returns valid bijections") {
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto a = oracle::random_graph(n, 0.5);
    auto self = graph_isomorphic(a, a);
    REQUIRE(self);
    // A relabelled copy must be found, and the bijection must preserve adjacency.
    std::vector<VertexId> perm(n);
    for (VertexId i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), oracle::rng());
    std::vector<Edge> edges;
    for (auto [u, v] : a.edges()) edges.emplace_back(perm[u], perm[v]);
    SimplicialGraph b(a.names(), edges);
    auto ab = graph_isomorphic(a, b);
    REQUIRE(ab);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) CHECK(a.adjacent(u, v) == b.adjacent((*ab)[u], (*ab)[v]));
    auto c = oracle::random_graph(n, 0.5);
    CHECK(graph_isomorphic(a, c).has_value() == graph_isomorphic(c, a).has_value());
  }
}

TEST_CASE("automorphism orbits") {
  auto p = graphs::path(3);
  CHECK(automorphism_orbit(p, 0) == std::vector<VertexId>{0, 2});
  CHECK(automorphism_orbit(p, 1) == std::vector<VertexId>{1});
  CHECK(automorphism_orbit(graphs::cycle(6), 0).size() == 6);
}

TEST_CASE("trees and forests") {
  CHECK(is_tree(graphs::path(1)));
  CHECK(is_tree(graphs::double_star()));
  CHECK_FALSE(is_tree(graphs::cycle(5)));
  CHECK_FALSE(is_tree(graphs::edgeless(2)));
  CHECK(is_forest(graphs::edgeless(2)));
  CHECK_FALSE(is_tree(SimplicialGraph()));
}

TEST_CASE("tpq has three branch vertices of degree 3") {
  auto t = graphs::tpq(2, 3);
  CHECK(is_tree(t));
  CHECK(t.size() == 2 + 3 + 1 + 5);
  std::size_t branch = 0;
  for (VertexId v = 0; v < t.size(); ++v) branch += t.degree(v) == 3;
  CHECK(branch == 3);
  CHECK(graph_isomorphic(graphs::tpq(1, 1), graphs::tpq(1, 1)));
}

TEST_CASE("tree morphism search") {
  auto found = tree_morphism_search(graphs::tpq(2, 2), graphs::double_star());
  REQUIRE(found);
  CHECK(respects_tree_degrees(graphs::tpq(2, 2), graphs::double_star(), *found));
  CHECK_FALSE(tree_morphism_search(graphs::tpq(1, 2), graphs::tpq(2, 2)));
  auto edge = graphs::path(2);
  auto id = tree_morphism_search(edge, edge);
  REQUIRE(id);
  CHECK(is_graph_morphism(edge, edge, *id));
  CHECK_THROWS_AS(tree_morphism_search(graphs::cycle(5), edge), std::invalid_argument);
}

TEST_CASE("tree morphism search agrees with exhaustive enumeration") {
  std::vector<SimplicialGraph> trees;
  for (std::size_t n = 1; n <= 7; ++n)
    for (auto& t : oracle::all_trees(n)) trees.push_back(std::move(t));
  trees.push_back(graphs::double_star());
  for (const auto& r : trees)
    for (const auto& s : trees) {
      auto found = tree_morphism_search(r, s);
      CHECK(found.has_value() == oracle::tree_morphism_exists(r, s));
      if (found) CHECK(respects_tree_degrees(r, s, *found));
    }
}
