#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "magicdist/search.hpp"
#include "magicdist/structural.hpp"
#include "oracles.hpp"

using namespace magicdist;

TEST_CASE("symm_diff_filter rejects near-twin neighborhoods") {
  // adjacent twins in K4: N(x) xor N(y) = {x, y}
  FilterVerdict k4 = symm_diff_filter(complete_graph(4));
  CHECK_FALSE(k4.pass);
  CHECK(k4.witness.size() == 2);

  // P5: N(1) xor N(3) = {4}
  FilterVerdict p5 = symm_diff_filter(path_graph(5));
  CHECK_FALSE(p5.pass);

  CHECK(symm_diff_filter(cycle_graph(4)).pass);
  CHECK(symm_diff_filter(complete_minus_matching(6)).pass);
  CHECK(symm_diff_filter(path_graph(3)).pass);
  CHECK(symm_diff_filter(Graph::from_edge_list(3, {})).pass);
}

TEST_CASE("symm_diff_filter witness is truthful") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracles::random_graph(6, rng);
    FilterVerdict v = symm_diff_filter(g);
    if (v.pass) continue;
    REQUIRE(v.witness.size() == 2);
    int x = v.witness[0], y = v.witness[1];
    int diff = 0;
    for (int u = 1; u <= 6; ++u)
      if (g.adjacent(u, x) != g.adjacent(u, y)) ++diff;
    CHECK((diff == 1 || diff == 2));
  }
}

TEST_CASE("contains_p3_or_c4 finds a witness exactly when one exists") {
  SubgraphWitness p3 = contains_p3_or_c4(path_graph(3));
  REQUIRE(p3.found);
  CHECK(p3.kind == "P3");
  REQUIRE(p3.vertices.size() == 3);
  CHECK(path_graph(3).adjacent(p3.vertices[0], p3.vertices[1]));
  CHECK(path_graph(3).adjacent(p3.vertices[1], p3.vertices[2]));

  CHECK(contains_p3_or_c4(cycle_graph(4)).found);
  CHECK(contains_p3_or_c4(complete_graph(3)).found);
  CHECK_FALSE(contains_p3_or_c4(Graph::from_edge_list(2, {{1, 2}})).found);
  CHECK_FALSE(contains_p3_or_c4(Graph::from_edge_list(4, {{1, 2}, {3, 4}})).found);
  CHECK_FALSE(contains_p3_or_c4(Graph::from_edge_list(3, {})).found);
}

TEST_CASE("contains_p3_or_c4 against a degree oracle") {
  // a simple graph has P3 or C4 iff some vertex has degree >= 2
  // (two edges at one vertex already span a P3)
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracles::random_graph(5, rng, 0.3);
    std::vector<int> ds = g.degrees();
    bool want = *std::max_element(ds.begin(), ds.end()) >= 2;
    CHECK(contains_p3_or_c4(g).found == want);
  }
}

TEST_CASE("regular_filters") {
  CHECK_FALSE(regular_filters(complete_graph(4)).pass);   // 3-regular
  CHECK_FALSE(regular_filters(cycle_graph(5)).pass);      // 2-regular, component of size 5
  CHECK_FALSE(regular_filters(cycle_graph(6)).pass);
  CHECK(regular_filters(cycle_graph(4)).pass);
  CHECK(regular_filters(disjoint_union(cycle_graph(4), cycle_graph(4))).pass);
  CHECK_FALSE(regular_filters(disjoint_union(cycle_graph(4), cycle_graph(5))).pass);
  CHECK(regular_filters(path_graph(4)).pass);             // not regular: no verdict
  CHECK(regular_filters(complete_minus_matching(8)).pass);
  CHECK(regular_filters(Graph::from_edge_list(3, {})).pass);  // 0-regular
}

TEST_CASE("two_dm_structure splits on the constant") {
  Graph c4 = cycle_graph(4);

  // constant 1: labels 1 sit on a matched pair
  TwoDmStructure odd = two_dm_structure(c4, ModularLabeling(2, {1, 2, 2, 1}));
  CHECK(odd.constant == 1);
  CHECK(odd.label_one_vertices == std::vector<int>{1, 4});
  CHECK(odd.matching == std::vector<std::pair<int, int>>{{1, 4}});
  CHECK(odd.components.empty());

  // constant 0: label-1 vertices induce even components (here: isolated)
  TwoDmStructure even = two_dm_structure(c4, ModularLabeling(2, {1, 2, 1, 2}));
  CHECK(even.constant == 0);
  CHECK(even.label_one_vertices == std::vector<int>{1, 3});
  CHECK(even.components == std::vector<std::vector<int>>{{1}, {3}});
  CHECK(even.matching.empty());

  // rejects labelings that do not verify
  CHECK_THROWS_AS(two_dm_structure(path_graph(4), ModularLabeling(2, {1, 2, 2, 1})),
                  std::domain_error);
}

TEST_CASE("two_dm_structure internal degree parity matches the constant") {
  // In any verified 2-DM labeling the weight of a label-1 vertex counts its
  // label-1 neighbors mod 2, so inside the label-1 subgraph all degrees share
  // the parity of the constant.
  int checked = 0;
  auto probe = [&](const Graph& g, const ModularLabeling& f2) {
    REQUIRE(verify_p_distance_magic(g, f2).ok());
    TwoDmStructure s = two_dm_structure(g, f2);
    for (int v : s.label_one_vertices) {
      int internal = 0;
      for (int u : s.label_one_vertices)
        if (u != v && g.adjacent(u, v)) ++internal;
      CHECK(internal % 2 == s.constant);
    }
    ++checked;
  };

  // reductions of genuine distance magic labelings
  for (const Graph& g : {cycle_graph(4), complete_minus_matching(6),
                         disjoint_union(path_graph(3), cycle_graph(4))})
    for (const auto& values : oracles::brute_force_dm(g)) probe(g, reduce_mod_p(Labeling(values), 2));

  // arbitrary 2-DM labelings of random graphs
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracles::random_graph(5 + trial % 2, rng);
    for (const ModularLabeling& f2 : find_p_dm_labelings(g, 2)) probe(g, f2);
  }
  CHECK(checked > 60);
}
