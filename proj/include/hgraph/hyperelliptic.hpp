#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgraph/morphism.hpp"

namespace hgraph {

inline constexpr std::size_t kDefaultAutomorphismLimit = 200000;

/// All automorphisms, including every bijection between parallel classes.
/// |V| <= 10.  Throws BudgetExceeded past `limit`.
std::vector<GraphMorphism> automorphisms(const Multigraph& g,
                                         std::size_t limit = kDefaultAutomorphismLimit);
bool is_involution(const GraphMorphism& alpha);
std::vector<GraphMorphism> involutions(const Multigraph& g,
                                       std::size_t limit = kDefaultAutomorphismLimit);
/// No directed edge is fixed.
bool is_mixing(const GraphMorphism& iota);
/// G / <iota> is a tree.
bool has_tree_quotient(const GraphMorphism& iota);

struct HyperellipticWitness {
  Divisor divisor;
  GraphMorphism involution;
  Multigraph quotient_tree;
  GraphMorphism quotient_map;
};

/// Witness when some degree-2 divisor has rank 1.  Genus < 2 gives nullopt.
/// Throws HypothesisError when G has a bridge.
std::optional<HyperellipticWitness> is_hyperelliptic(const Multigraph& g);

struct WitnessConditions {
  bool rank_one_divisor;       // deg D = 2, r(D) = 1
  bool tree_quotient;          // involution with G/iota a tree
  bool double_cover_of_tree;   // degree-2 harmonic map to a tree, non-degenerate
  bool all() const { return rank_one_divisor && tree_quotient && double_cover_of_tree; }
};
WitnessConditions verify_witness(const Multigraph& g, const HyperellipticWitness& w);

/// Throws HypothesisError when G is not hyperelliptic.
GraphMorphism hyperelliptic_involution(const Multigraph& g);
/// Exactly one vertex map among the involutions of G has a tree quotient.
bool uniqueness_check(const Multigraph& g);
/// The hyperelliptic involution commutes with every automorphism on vertices.
bool centrality_check(const Multigraph& g);

struct PmOneReport {
  bool hyperelliptic_involution;  // iota is the constructed involution
  bool jac_push_negates;
  bool jac_pull_negates;
  bool forms_push_negates;
  bool forms_pull_negates;
  bool agree() const;
};
/// Throws HypothesisError unless G is 2-edge-connected of genus >= 2.
PmOneReport pm_one_criteria_check(const Multigraph& g, const GraphMorphism& iota);

/// The mixing involution whose quotient is phi, for phi non-degenerate
/// harmonic of degree 2.  Throws MorphismError otherwise.
GraphMorphism involution_from_double_cover(const GraphMorphism& phi);

/// {x : r(g (x)) >= 1}.
std::vector<Vertex> weierstrass_points(const Multigraph& g);

struct Classification {
  enum class Kind { BananaUnit, OddTripleBanana, Theta, NotInFamilies };
  Kind kind = Kind::NotInFamilies;
  std::vector<int> parameters;
  std::string describe() const;
};
/// Throws HypothesisError unless G is 2-edge-connected and hyperelliptic.
Classification classify_weierstrass_free(const Multigraph& g);

bool subdivision_invariance_check(const Multigraph& g, int k);
/// r_G(D) = r(rho_* D) on the bridge contraction, and D ~ 0 iff rho_* D ~ 0.
bool bridge_equivalence_check(const Multigraph& g, const Divisor& d);

}  // namespace hgraph
