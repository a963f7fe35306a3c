#include <doctest.h>

#include "fixtures.hpp"
#include "hgraph/graph.hpp"

using namespace hgraph;

TEST_CASE("constructor rejects loops, bad endpoints and disconnected input") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 0}, {0, 1}}), GraphError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(Multigraph(3, {{0, 1}}), GraphError);
  CHECK_THROWS_AS(Multigraph(0, {}), GraphError);
  CHECK_NOTHROW(Multigraph(1, {}));
}

TEST_CASE("genus") {
  for (const auto& t : fixtures::small_trees()) CHECK(genus(t.graph) == 0);
  for (int n = 1; n <= 6; ++n) CHECK(genus(banana_unit(n + 1)) == n);
  for (int l = 1; l <= 4; ++l) CHECK(genus(theta(l)) == 3);
  CHECK(genus(complete(4)) == 3);
}

TEST_CASE("edge connectivity") {
  for (int n = 2; n <= 7; ++n) CHECK(edge_connectivity(cycle(n)) == 2);
  for (int n = 1; n <= 6; ++n) CHECK(edge_connectivity(banana_unit(n)) == n);
  CHECK(edge_connectivity(theta(2)) == 2);
  CHECK(edge_connectivity(complete(4)) == 3);
  CHECK(edge_connectivity(path(1)) == kUnboundedConnectivity);
  CHECK(is_k_edge_connected(path(1), 100));
  CHECK(edge_connectivity(fixtures::two_triangles_with_bridge()) == 1);

  for (const auto& f : fixtures::corpus())
    CHECK_MESSAGE(edge_connectivity_exhaustive(f.graph) == edge_connectivity_maxflow(f.graph), f.name);
  // Above the exhaustive threshold the max-flow path is used.
  CHECK(edge_connectivity(cycle(25)) == 2);
}

TEST_CASE("bridges match 2-edge-connectivity") {
  for (const auto& f : fixtures::corpus())
    CHECK_MESSAGE((edge_connectivity(f.graph) >= 2) == bridges(f.graph).empty(), f.name);
  CHECK(bridges(fixtures::two_triangles_with_bridge()) == std::vector<Edge>{3});
  CHECK(bridges(banana_unit(2)).empty());
  CHECK(bridges(path(4)).size() == 3);
}

TEST_CASE("cut edges are the bipartition boundary") {
  auto g = theta(2);
  for (unsigned mask = 1; mask + 1 < (1u << g.vertex_count()); ++mask) {
    std::vector<bool> side(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) side[v] = mask >> v & 1u;
    auto cut = cut_edges(g, side);
    for (Edge e = 0; e < g.edge_count(); ++e) {
      bool crosses = side[g.ends(e).first] != side[g.ends(e).second];
      CHECK(crosses == std::binary_search(cut.begin(), cut.end(), e));
    }
  }
}

TEST_CASE("bridge contraction") {
  auto bc = contract_bridges(fixtures::two_triangles_with_bridge());
  CHECK(are_isomorphic(bc.graph, fixtures::bowtie()));
  CHECK(bc.edge_map[3] == -1);
  CHECK(bc.vertex_map[2] == bc.vertex_map[3]);

  auto p = contract_bridges(path(3));
  CHECK(p.graph.vertex_count() == 1);
  CHECK(p.graph.edge_count() == 0);
  CHECK(p.vertex_map == std::vector<Vertex>{0, 0, 0});

  auto k = contract_bridges(complete(4));
  CHECK(k.graph == complete(4));

  for (const auto& f : fixtures::corpus()) {
    auto once = contract_bridges(f.graph);
    CHECK(genus(once.graph) == genus(f.graph));
    CHECK(bridges(once.graph).empty());
    CHECK(are_isomorphic(contract_bridges(once.graph).graph, once.graph));
  }
}

TEST_CASE("named families") {
  auto b3 = banana({1, 1, 1});
  CHECK(b3.vertex_count() == 2);
  CHECK(b3.multiplicity(0, 1) == 3);
  CHECK(b3 == banana_unit(3));

  auto b222 = banana({2, 2, 2});
  CHECK(b222.vertex_count() == 5);
  CHECK(b222.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});

  auto phi1 = theta(1);
  CHECK(phi1.vertex_count() == 4);
  CHECK(phi1.edge_count() == 6);
  CHECK(genus(phi1) == 3);
  CHECK(phi1.multiplicity(0, 2) == 2);
  CHECK(phi1.multiplicity(1, 3) == 2);

  CHECK(are_isomorphic(subdivide(banana_unit(2), 2), cycle(4)));
  CHECK(subdivide(complete(4), 1) == complete(4));
  CHECK(are_isomorphic(subdivide(banana_unit(3), 2), b222));
  for (const auto& f : fixtures::corpus())
    for (int k = 1; k <= 3; ++k) CHECK(genus(subdivide(f.graph, k)) == genus(f.graph));

  CHECK_THROWS_AS(banana(std::vector<int>{}), GraphError);
  CHECK_THROWS_AS(banana({1, 0}), GraphError);
  CHECK_THROWS_AS(subdivide(cycle(3), 0), GraphError);
}

TEST_CASE("isomorphism") {
  Multigraph relabeled(4, {{3, 2}, {2, 1}, {1, 0}, {0, 3}});
  CHECK(are_isomorphic(relabeled, cycle(4)));
  CHECK_FALSE(are_isomorphic(cycle(4), star(3)));
  CHECK_FALSE(are_isomorphic(banana({1, 2, 2}), banana({1, 1, 3})));
  CHECK(are_isomorphic(theta(1), Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}})));
  // Doubled edges adjacent instead of opposite.
  CHECK_FALSE(are_isomorphic(theta(1), Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 0}})));
  Multigraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  Multigraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(are_isomorphic(k33, prism));
}

TEST_CASE("vertex automorphisms") {
  CHECK(vertex_automorphisms(cycle(5), 1000).size() == 10);
  CHECK(vertex_automorphisms(complete(4), 1000).size() == 24);
  CHECK(vertex_automorphisms(banana({2, 2, 2}), 1000).size() == 12);
  CHECK_THROWS_AS(vertex_automorphisms(complete(5), 10), BudgetExceeded);
}

TEST_CASE("bridgeless multigraph enumeration") {
  auto small = two_edge_connected_multigraphs(4);
  // |E| = 2: B2.  |E| = 3: B3, C3.  |E| = 4: B4, C4, the triangle with a doubled
  // edge, and two digons sharing a vertex.
  CHECK(small.size() == 7);
  for (const auto& g : small) {
    CHECK(bridges(g).empty());
    CHECK(g.vertex_count() >= 2);
  }
  auto larger = two_edge_connected_multigraphs(6);
  for (std::size_t i = 0; i < larger.size(); ++i)
    for (std::size_t j = i + 1; j < larger.size(); ++j)
      if (larger[i].edge_count() == larger[j].edge_count() &&
          larger[i].vertex_count() == larger[j].vertex_count())
        CHECK_FALSE(are_isomorphic(larger[i], larger[j]));
}
