#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgraph/divisor.hpp"
#include "hgraph/jacobian.hpp"

namespace hgraph {

/// Image of a source edge: a target edge, or a target vertex when the edge
/// is collapsed (vertical).
struct EdgeImage {
  bool vertical = false;
  int index = 0;

  static EdgeImage edge(Edge e) { return {false, e}; }
  static EdgeImage vertex(Vertex v) { return {true, v}; }
  friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

struct GraphMorphism {
  Multigraph source;
  Multigraph target;
  std::vector<Vertex> vmap;
  std::vector<EdgeImage> emap;
};

/// Reason the morphism axiom fails, or nullopt if phi is a morphism.  A
/// horizontal edge xy must map to an edge whose two ends are phi(x), phi(y).
std::optional<std::string> morphism_violation(const GraphMorphism& phi);
bool validate(const GraphMorphism& phi);

struct HarmonicCertificate {
  std::vector<int> horizontal;  // m_phi
  std::vector<int> vertical;    // v_phi
  int degree = 0;
};

/// Throws MorphismError when phi is not a morphism.
std::optional<HarmonicCertificate> is_harmonic(const GraphMorphism& phi);
/// Throws MorphismError when phi is not harmonic.
HarmonicCertificate certificate(const GraphMorphism& phi);

bool is_constant(const GraphMorphism& phi);
bool is_surjective(const GraphMorphism& phi);
bool is_nondegenerate(const HarmonicCertificate& c);

GraphMorphism identity_morphism(const Multigraph& g);
/// psi after phi.
GraphMorphism compose(const GraphMorphism& phi, const GraphMorphism& psi);
/// Automorphism given as vertex and edge permutations.
GraphMorphism automorphism(const Multigraph& g, std::vector<Vertex> vmap, std::vector<Edge> emap);
/// Orientation of phi(e) relative to the stored orientations; +1 when the
/// first end of e maps to the first end of phi(e).  e must be horizontal.
int edge_orientation(const GraphMorphism& phi, Edge e);

Divisor push_divisor(const GraphMorphism& phi, const Divisor& d);
Divisor pull_divisor(const GraphMorphism& phi, const HarmonicCertificate& c, const Divisor& d);
Divisor pull_divisor(const GraphMorphism& phi, const Divisor& d);
VertexFunction push_function(const GraphMorphism& phi, const HarmonicCertificate& c,
                             const VertexFunction& f);
VertexFunction pull_function(const GraphMorphism& phi, const VertexFunction& f);
/// phi_* div(f) = div(phi_* f) and phi^* div(f') = div(phi^* f').
bool functoriality_check(const GraphMorphism& phi, const VertexFunction& f,
                         const VertexFunction& f_target);

DivisorClass jac_push(const GraphMorphism& phi, const DivisorClass& c);
DivisorClass jac_pull(const GraphMorphism& phi, const DivisorClass& c);
/// Exhaustive: the image of Jac(G) under phi_* is all of Jac(G').
bool jac_push_surjective(const GraphMorphism& phi, std::size_t bound = kDefaultClassBound);
/// Exhaustive: no nonzero class of Jac(G') pulls back to zero.
bool jac_pull_injective(const GraphMorphism& phi, std::size_t bound = kDefaultClassBound);

/// r_{G'}(phi_* D) >= r_G(D).
bool rank_transfer_check(const GraphMorphism& phi, const Divisor& d);

struct RiemannHurwitzReport {
  Divisor ramification;      // R_G
  bool divisor_identity;     // K_G == phi^* K_G' + R_G
  Chip residual;             // 2g-2 - deg(phi)(2g'-2) - deg(R_G)
};
RiemannHurwitzReport riemann_hurwitz(const GraphMorphism& phi);

/// Harmonicity with rational coefficients, by a linear-algebra membership
/// test at every vertex.
bool is_rational_harmonic(const GraphMorphism& phi);

// ---------------------------------------------------------------------------
// Constructions.

/// Onto the one-edge path: x to vertex 0, every other vertex to vertex 1.
GraphMorphism harmonic_to_edge(const Multigraph& g, Vertex x);
/// Collapse the side of cut vertex p given by `side` (which contains p) to
/// p.  The remaining vertices form the target, renumbered in order.
GraphMorphism collapse(const Multigraph& g, Vertex p, const std::vector<Vertex>& side);
/// Harmonic, non-degenerate, m = 1 and v = 0 everywhere.
bool covering_check(const GraphMorphism& phi);
/// n-fold wrap of the cycle of length n*k onto the cycle of length k.
GraphMorphism cycle_covering(int k, int n);

struct Quotient {
  Multigraph graph;
  GraphMorphism projection;
};
/// G/H for a group H of automorphisms (each with source = target = g).
/// Throws MorphismError when H is not closed under composition.
Quotient quotient(const Multigraph& g, const std::vector<GraphMorphism>& group);
/// The group generated by one automorphism.
std::vector<GraphMorphism> cyclic_group(const GraphMorphism& alpha);

/// G -> G with every bridge contracted, as a morphism.
GraphMorphism bridge_contraction_morphism(const Multigraph& g);

}  // namespace hgraph
