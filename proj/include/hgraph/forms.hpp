#pragma once

#include <vector>

#include "hgraph/linalg.hpp"
#include "hgraph/morphism.hpp"

namespace hgraph {

/// Antisymmetric edge function, stored as its value on each edge in the
/// stored orientation (first end -> second end).
struct OneForm {
  std::vector<Rational> values;

  Rational at(const DirectedEdge& d) const { return d.forward ? values[d.edge] : -values[d.edge]; }
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// delta(w)(x) = sum of w over directed edges ending at x.
std::vector<Rational> coboundary(const Multigraph& g, const OneForm& w);
bool is_flow(const Multigraph& g, const OneForm& w);

/// Fundamental-cycle basis of the flow space.  The spanning tree comes from
/// BFS at vertex 0 scanning incident edges in id order; the i-th flow is the
/// cycle of the i-th non-tree edge, +1 on that edge in its stored direction.
struct FlowBasis {
  std::vector<Edge> tree_edges;
  std::vector<Edge> cotree_edges;
  std::vector<OneForm> cycles;
};

FlowBasis flow_basis(const Multigraph& g);
/// Coordinates of a flow in the basis (its values on the cotree edges).
std::vector<Rational> coordinates(const FlowBasis& b, const OneForm& w);
OneForm from_coordinates(const Multigraph& g, const FlowBasis& b, const std::vector<Rational>& c);

/// <l_i, l_j> = sum over edges of l_i(e) l_j(e).  det = kappa(G).
Matrix<BigInt> gram_matrix(const Multigraph& g, const FlowBasis& b);

OneForm pull_form(const GraphMorphism& phi, const OneForm& w);
OneForm push_form(const GraphMorphism& phi, const OneForm& w);

/// Matrix of phi^* : H1(G') -> H1(G), columns are images of basis flows.
Matrix<Rational> pull_matrix(const GraphMorphism& phi);
/// Matrix of phi_* : H1(G) -> H1(G').
Matrix<Rational> push_matrix(const GraphMorphism& phi);
Matrix<Rational> aut_action_matrix(const GraphMorphism& alpha);

/// Only the identity among `automorphisms` acts as the identity matrix.
/// Throws HypothesisError unless G is 2-edge-connected of genus >= 2.
bool aut_faithfulness_check(const Multigraph& g, const std::vector<GraphMorphism>& automorphisms);
/// The action matrix and its inverse are integral (det = +-1).
bool gl_integrality_check(const GraphMorphism& alpha);

/// Per edge, the functional w -> w(e) in basis coordinates, scaled so the
/// first nonzero entry is 1.  Throws HypothesisError when G has a bridge.
std::vector<std::vector<Rational>> canonical_map(const Multigraph& g);
/// Edges grouped by equal canonical image, each group ascending, groups
/// ordered by smallest edge.
std::vector<std::vector<Edge>> canonical_fibers(const Multigraph& g);
bool is_canonical_injective(const Multigraph& g);

}  // namespace hgraph
