#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "hgraph/morphism.hpp"

using namespace hgraph;

namespace {

GraphMorphism b2_swap() { return automorphism(banana_unit(2), {1, 0}, {0, 1}); }

/// Involution of B(2,2,2) swapping the two hubs.
GraphMorphism b222_flip() { return automorphism(banana({2, 2, 2}), {1, 0, 2, 3, 4}, {1, 0, 3, 2, 5, 4}); }

/// Both edges of B2 onto the first edge of B2.
GraphMorphism rational_not_harmonic() {
  return {banana_unit(2), banana_unit(2), {0, 1}, {EdgeImage::edge(0), EdgeImage::edge(0)}};
}

GraphMorphism constant_map(const Multigraph& g) {
  GraphMorphism phi{g, path(2), std::vector<Vertex>(g.vertex_count(), 0), {}};
  for (Edge e = 0; e < g.edge_count(); ++e) phi.emap.push_back(EdgeImage::vertex(0));
  return phi;
}

/// Harmonic morphisms used for the property checks below.
std::vector<GraphMorphism> harmonic_fixtures() {
  std::vector<GraphMorphism> out;
  for (const auto& f : fixtures::corpus()) {
    if (f.graph.vertex_count() < 2) continue;
    out.push_back(harmonic_to_edge(f.graph, 0));
    out.push_back(identity_morphism(f.graph));
  }
  out.push_back(cycle_covering(3, 2));
  out.push_back(cycle_covering(2, 2));
  out.push_back(cycle_covering(4, 2));
  out.push_back(cycle_covering(2, 3));
  out.push_back(collapse(fixtures::bowtie(), 2, {2, 3, 4}));
  out.push_back(quotient(banana({2, 2, 2}), cyclic_group(b222_flip())).projection);
  out.push_back(b2_swap());
  out.push_back(b222_flip());
  return out;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(identity_morphism(complete(4))));
  CHECK(validate(bridge_contraction_morphism(fixtures::two_triangles_with_bridge())));
  GraphMorphism bad{cycle(3), cycle(3), {0, 0, 1}, {EdgeImage::edge(0), EdgeImage::edge(1), EdgeImage::edge(2)}};
  CHECK_FALSE(validate(bad));
  CHECK(morphism_violation(bad).has_value());
  CHECK_FALSE(morphism_violation(identity_morphism(cycle(3))).has_value());
  // Vertical edge whose ends land on different vertices.
  GraphMorphism split{path(2), path(2), {0, 1}, {EdgeImage::vertex(0)}};
  CHECK_FALSE(validate(split));
}

TEST_CASE("harmonicity and certificates") {
  for (int k = 1; k <= 5; ++k) {
    auto c = certificate(harmonic_to_edge(banana_unit(k), 0));
    CHECK(c.degree == k);
  }
  auto k4 = certificate(harmonic_to_edge(complete(4), 2));
  CHECK(k4.degree == 3);
  CHECK(k4.horizontal == std::vector<int>{1, 1, 3, 1});
  CHECK(k4.vertical == std::vector<int>{2, 2, 0, 2});

  CHECK_FALSE(is_harmonic(bridge_contraction_morphism(fixtures::two_triangles_with_bridge())).has_value());
  CHECK_FALSE(is_harmonic(rational_not_harmonic()).has_value());
  CHECK_THROWS_AS(certificate(rational_not_harmonic()), MorphismError);
  GraphMorphism bad{cycle(3), cycle(3), {0, 0, 1}, {EdgeImage::edge(0), EdgeImage::edge(1), EdgeImage::edge(2)}};
  CHECK_THROWS_AS(is_harmonic(bad), MorphismError);

  auto sw = certificate(b2_swap());
  CHECK(sw.degree == 1);
  CHECK(sw.horizontal == std::vector<int>{1, 1});
  CHECK(sw.vertical == std::vector<int>{0, 0});

  auto cover = certificate(cycle_covering(3, 2));
  CHECK(cover.degree == 2);
  CHECK(covering_check(cycle_covering(3, 2)));
  CHECK_FALSE(covering_check(harmonic_to_edge(banana_unit(3), 0)));

  auto col = collapse(fixtures::bowtie(), 2, {2, 3, 4});
  CHECK(col.target.vertex_count() == 3);
  CHECK(certificate(col).degree == 1);
  CHECK_THROWS(collapse(cycle(4), 0, {0, 1}));

  auto constant = certificate(constant_map(cycle(4)));
  CHECK(constant.degree == 0);
  CHECK(is_constant(constant_map(cycle(4))));
  CHECK_FALSE(is_surjective(constant_map(cycle(4))));
}

TEST_CASE("certificate identities on fixtures") {
  for (const auto& phi : harmonic_fixtures()) {
    auto c = certificate(phi);
    for (Vertex x = 0; x < phi.source.vertex_count(); ++x)
      CHECK(phi.source.degree(x) == phi.target.degree(phi.vmap[x]) * c.horizontal[x] + c.vertical[x]);
    for (Edge e2 = 0; e2 < phi.target.edge_count(); ++e2) {
      int pre = 0;
      for (Edge e = 0; e < phi.source.edge_count(); ++e)
        if (phi.emap[e] == EdgeImage::edge(e2)) ++pre;
      CHECK(pre == c.degree);
    }
    for (Vertex y = 0; y < phi.target.vertex_count(); ++y) {
      int sum = 0;
      for (Vertex x = 0; x < phi.source.vertex_count(); ++x)
        if (phi.vmap[x] == y) sum += c.horizontal[x];
      if (phi.target.vertex_count() > 1) CHECK(sum == c.degree);
    }
    CHECK((c.degree > 0) == is_surjective(phi));
    CHECK((c.degree == 0) == is_constant(phi));
  }
}

TEST_CASE("composition") {
  auto c8c4 = cycle_covering(4, 2);
  auto c4c2 = cycle_covering(2, 2);
  auto stacked = compose(c8c4, c4c2);
  CHECK(validate(stacked));
  CHECK(certificate(stacked).degree == 4);

  auto phi = harmonic_to_edge(banana({1, 3, 5}), 0);
  auto with_id = compose(phi, identity_morphism(phi.target));
  CHECK(with_id.vmap == phi.vmap);
  CHECK(with_id.emap == phi.emap);

  auto twice = compose(b222_flip(), b222_flip());
  CHECK(twice.vmap == identity_morphism(twice.source).vmap);
  CHECK(twice.emap == identity_morphism(twice.source).emap);

  CHECK_THROWS_AS(compose(c4c2, c8c4), MorphismError);
}

TEST_CASE("push and pull on divisors") {
  std::mt19937_64 rng(31);
  for (const auto& phi : harmonic_fixtures()) {
    auto c = certificate(phi);
    const int n = phi.source.vertex_count(), n2 = phi.target.vertex_count();
    for (int trial = 0; trial < 5; ++trial) {
      Divisor d(n), d2(n2);
      for (int i = 0; i < n; ++i) d[i] = static_cast<Chip>(rng() % 7) - 3;
      for (int i = 0; i < n2; ++i) d2[i] = static_cast<Chip>(rng() % 7) - 3;
      CHECK(push_divisor(phi, d).degree() == d.degree());
      CHECK(pull_divisor(phi, c, d2).degree() == c.degree * d2.degree());
      CHECK(push_divisor(phi, pull_divisor(phi, d2)) == Chip(c.degree) * d2);
    }
    CHECK(pull_divisor(phi, Divisor(n2)) == Divisor(n));
  }
  auto phi = harmonic_to_edge(complete(4), 1);
  CHECK(pull_divisor(phi, point(2, 0)) == 3 * point(4, 1));
}

TEST_CASE("functor laws") {
  auto c8c4 = cycle_covering(4, 2);
  auto c4c2 = cycle_covering(2, 2);
  auto both = compose(c8c4, c4c2);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    Divisor d(8), d2(2);
    for (int i = 0; i < 8; ++i) d[i] = static_cast<Chip>(rng() % 5) - 2;
    for (int i = 0; i < 2; ++i) d2[i] = static_cast<Chip>(rng() % 5) - 2;
    CHECK(push_divisor(both, d) == push_divisor(c4c2, push_divisor(c8c4, d)));
    CHECK(pull_divisor(both, d2) == pull_divisor(c8c4, pull_divisor(c4c2, d2)));
    auto cls = class_of(both.source, d - Chip(d.degree()) * point(8, 0));
    CHECK(jac_push(both, cls) == jac_push(c4c2, jac_push(c8c4, cls)));
    auto cls2 = class_of(both.target, d2 - Chip(d2.degree()) * point(2, 0));
    CHECK(jac_pull(both, cls2) == jac_pull(c8c4, jac_pull(c4c2, cls2)));
  }
}

TEST_CASE("functoriality on functions") {
  std::mt19937_64 rng(41);
  for (const auto& phi : harmonic_fixtures()) {
    for (int trial = 0; trial < 5; ++trial) {
      VertexFunction f(phi.source.vertex_count()), f2(phi.target.vertex_count());
      for (auto& x : f) x = static_cast<Chip>(rng() % 9) - 4;
      for (auto& x : f2) x = static_cast<Chip>(rng() % 9) - 4;
      CHECK(functoriality_check(phi, f, f2));
    }
  }
  auto h = harmonic_to_edge(banana({2, 2, 2}), 0);
  CHECK(functoriality_check(h, VertexFunction(5, 7), indicator(2, {1})));
}

TEST_CASE("Jacobian maps") {
  for (const auto& phi : harmonic_fixtures()) {
    if (is_constant(phi)) continue;
    CHECK(jac_push_surjective(phi));
    CHECK(jac_pull_injective(phi));
    CHECK(spanning_tree_count(phi.source) % spanning_tree_count(phi.target) == 0);
    CHECK(is_zero_class(jac_push(phi, class_of(phi.source, Divisor(phi.source.vertex_count())))));
    // Albanese square.
    for (Vertex x = 0; x < phi.source.vertex_count(); ++x)
      CHECK(jac_push(phi, abel_jacobi(phi.source, 0, x)) == abel_jacobi(phi.target, phi.vmap[0], phi.vmap[x]));
  }
  auto cover = cycle_covering(3, 2);
  std::set<DivisorClass> images;
  for (const auto& c : jacobian_elements(cover.target)) images.insert(jac_pull(cover, c));
  CHECK(images.size() == 3);
}

TEST_CASE("rank transfer") {
  auto q = quotient(banana({2, 2, 2}), cyclic_group(b222_flip()));
  Divisor d = point(5, 0) + point(5, 1);
  CHECK(rank(q.projection.source, d) == 1);
  CHECK(rank(q.graph, push_divisor(q.projection, d)) >= 1);
  CHECK(rank_transfer_check(q.projection, d));
  CHECK(rank_transfer_check(cycle_covering(3, 2), point(6, 0)));
  CHECK(rank_transfer_check(cycle_covering(3, 2), -point(6, 0)));
}

TEST_CASE("Riemann-Hurwitz") {
  for (const auto& phi : harmonic_fixtures()) {
    auto rh = riemann_hurwitz(phi);
    CHECK(rh.divisor_identity);
    CHECK(rh.residual == 0);
    if (!is_constant(phi)) {
      CHECK(rh.ramification.degree() >= 0);
      CHECK(genus(phi.source) >= genus(phi.target));
    }
  }
  auto b3 = riemann_hurwitz(harmonic_to_edge(banana_unit(3), 0));
  CHECK(b3.ramification == Divisor(std::vector<Chip>{4, 4}));
  CHECK(riemann_hurwitz(b2_swap()).ramification == Divisor(2));
  CHECK(riemann_hurwitz(cycle_covering(3, 2)).ramification == Divisor(6));
}

TEST_CASE("rational harmonicity") {
  for (const auto& phi : harmonic_fixtures()) CHECK(is_rational_harmonic(phi));
  CHECK(is_rational_harmonic(rational_not_harmonic()));
  CHECK_FALSE(is_rational_harmonic(bridge_contraction_morphism(fixtures::two_triangles_with_bridge())));
}

TEST_CASE("quotients") {
  auto b2 = quotient(banana_unit(2), cyclic_group(b2_swap()));
  CHECK(b2.graph.vertex_count() == 1);
  CHECK(b2.graph.edge_count() == 0);

  auto group = cyclic_group(b222_flip());
  CHECK(group.size() == 2);
  auto q = quotient(banana({2, 2, 2}), group);
  CHECK(are_isomorphic(q.graph, star(3)));
  for (const auto& h : group)
    for (Vertex x = 0; x < 5; ++x) CHECK(q.projection.vmap[h.vmap[x]] == q.projection.vmap[x]);
  CHECK(certificate(q.projection).degree == 2);

  // {id, rot} is not closed under composition.
  auto rot = automorphism(cycle(4), {1, 2, 3, 0}, {1, 2, 3, 0});
  CHECK_THROWS_AS(quotient(cycle(4), {identity_morphism(cycle(4)), rot}), MorphismError);
  CHECK(cyclic_group(rot).size() == 4);
}
