#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "hgraph/forms.hpp"
#include "hgraph/hyperelliptic.hpp"

using namespace hgraph;

namespace {

bool connected_without(const Multigraph& g, Edge a, Edge b) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = g.vertex_count();
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (e == a || e == b) continue;
    int u = find(g.ends(e).first), v = find(g.ends(e).second);
    if (u != v) {
      parent[u] = v;
      --parts;
    }
  }
  return parts == 1;
}

Matrix<Rational> negated_identity(int n) {
  auto m = identity_matrix(n);
  for (int i = 0; i < n; ++i) m[i][i] = -1;
  return m;
}

GraphMorphism b222_flip() { return automorphism(banana({2, 2, 2}), {1, 0, 2, 3, 4}, {1, 0, 3, 2, 5, 4}); }

std::vector<GraphMorphism> harmonic_fixtures() {
  std::vector<GraphMorphism> out;
  for (const auto& f : fixtures::corpus())
    if (f.graph.vertex_count() >= 2) out.push_back(harmonic_to_edge(f.graph, 1));
  out.push_back(cycle_covering(3, 2));
  out.push_back(cycle_covering(2, 3));
  out.push_back(collapse(fixtures::bowtie(), 2, {2, 3, 4}));
  out.push_back(b222_flip());
  return out;
}

}  // namespace

TEST_CASE("coboundary") {
  OneForm w{{Rational(1)}};
  auto d = coboundary(path(2), w);
  CHECK(d == std::vector<Rational>{-1, 1});
  CHECK_FALSE(is_flow(path(2), w));
  auto b = flow_basis(banana_unit(3));
  CHECK(is_flow(banana_unit(3), b.cycles[0]));
  OneForm sum{b.cycles[0].values};
  for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += b.cycles[1].values[i];
  CHECK(is_flow(banana_unit(3), sum));
  CHECK(w.at({0, false}) == -1);
}

TEST_CASE("flow basis") {
  for (const auto& f : fixtures::corpus()) {
    auto b = flow_basis(f.graph);
    CHECK(static_cast<int>(b.cycles.size()) == genus(f.graph));
    CHECK(b.tree_edges.size() + b.cotree_edges.size() == static_cast<std::size_t>(f.graph.edge_count()));
    for (std::size_t i = 0; i < b.cycles.size(); ++i) {
      CHECK(is_flow(f.graph, b.cycles[i]));
      CHECK(b.cycles[i].values[b.cotree_edges[i]] == 1);
      for (const auto& v : b.cycles[i].values) CHECK((v == 0 || v == 1 || v == -1));
      auto c = coordinates(b, b.cycles[i]);
      for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
    }
    // Round trip through coordinates.
    std::vector<Rational> c(b.cycles.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(static_cast<int>(i) * 3 - 2, 2);
    CHECK(coordinates(b, from_coordinates(f.graph, b, c)) == c);
    CHECK(determinant(gram_matrix(f.graph, b)) == spanning_tree_count(f.graph));
  }
  CHECK(flow_basis(path(4)).cycles.empty());
  CHECK(flow_basis(cycle(5)).cycles.size() == 1);
}

TEST_CASE("push and pull of forms") {
  for (const auto& phi : harmonic_fixtures()) {
    auto c = certificate(phi);
    auto src = flow_basis(phi.source), tgt = flow_basis(phi.target);
    for (const auto& w : tgt.cycles) {
      auto pulled = pull_form(phi, w);
      CHECK(is_flow(phi.source, pulled));
      for (Edge e = 0; e < phi.source.edge_count(); ++e)
        if (phi.emap[e].vertical) CHECK(pulled.values[e] == 0);
      auto back = push_form(phi, pulled);
      for (std::size_t e = 0; e < w.values.size(); ++e) CHECK(back.values[e] == c.degree * w.values[e]);
    }
    for (const auto& w : src.cycles) CHECK(is_flow(phi.target, push_form(phi, w)));
    auto pm = pull_matrix(phi);
    if (!is_constant(phi) && !tgt.cycles.empty()) {
      CHECK(rank(pm) == static_cast<int>(tgt.cycles.size()));
      CHECK(rank(push_matrix(phi)) == static_cast<int>(tgt.cycles.size()));
    }
  }
  auto cover = cycle_covering(3, 2);
  auto pulled = pull_form(cover, flow_basis(cover.target).cycles[0]);
  for (const auto& v : pulled.values) CHECK(abs(v) == 1);

  auto q = quotient(banana({2, 2, 2}), cyclic_group(b222_flip()));
  for (const auto& w : flow_basis(banana({2, 2, 2})).cycles)
    for (const auto& v : push_form(q.projection, w).values) CHECK(v == 0);
}

TEST_CASE("automorphism action") {
  auto b3 = banana_unit(3);
  auto auts = automorphisms(b3);
  CHECK(auts.size() == 12);
  std::set<Matrix<Rational>> mats;
  for (const auto& a : auts) {
    auto m = aut_action_matrix(a);
    mats.insert(m);
    CHECK(gl_integrality_check(a));
  }
  CHECK(mats.size() == 12);
  CHECK(aut_faithfulness_check(b3, auts));
  CHECK(aut_action_matrix(identity_morphism(complete(4))) == identity_matrix(3));
  CHECK(aut_action_matrix(b222_flip()) == negated_identity(2));

  auto k4 = automorphisms(complete(4));
  CHECK(aut_faithfulness_check(complete(4), k4));
  for (std::size_t i = 0; i < k4.size(); i += 5)
    for (std::size_t j = 0; j < k4.size(); j += 7)
      // compose(a, b) is b after a, and pullback reverses order.
      CHECK(aut_action_matrix(compose(k4[i], k4[j])) == multiply(aut_action_matrix(k4[i]), aut_action_matrix(k4[j])));

  CHECK_THROWS_AS(aut_faithfulness_check(cycle(4), automorphisms(cycle(4))), HypothesisError);
  CHECK_THROWS_AS(aut_faithfulness_check(fixtures::two_triangles_with_bridge(), {}), HypothesisError);
}

TEST_CASE("canonical map") {
  CHECK(is_canonical_injective(complete(4)));
  CHECK_FALSE(is_canonical_injective(banana({2, 2, 2})));
  for (int n = 3; n <= 6; ++n) CHECK(is_canonical_injective(banana_unit(n)));
  CHECK(canonical_fibers(banana({2, 2, 2})) == std::vector<std::vector<Edge>>{{0, 1}, {2, 3}, {4, 5}});
  CHECK_THROWS_AS(canonical_map(fixtures::two_triangles_with_bridge()), HypothesisError);

  for (const auto& f : fixtures::corpus()) {
    const auto& g = f.graph;
    if (!bridges(g).empty() || genus(g) < 1) continue;
    auto psi = canonical_map(g);
    for (Edge a = 0; a < g.edge_count(); ++a)
      for (Edge b = a + 1; b < g.edge_count(); ++b)
        CHECK_MESSAGE((psi[a] == psi[b]) == !connected_without(g, a, b), f.name);
    if (genus(g) >= 2) CHECK(is_canonical_injective(g) == is_k_edge_connected(g, 3));
  }
}
