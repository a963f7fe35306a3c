#pragma once

#include <optional>

#include "hgraph/forms.hpp"
#include "hgraph/morphism.hpp"

namespace hgraph {

/// A flow w with 2w integral, w not integral, and <w, l> integral for every
/// integral flow l.  Exists exactly when the number of spanning trees is even.
std::optional<OneForm> two_torsion_flow(const Multigraph& g);

/// Nonempty cut meeting every vertex in an even number of edges.  side_a
/// contains vertex 0.
std::optional<Cut> eulerian_cut(const Multigraph& g);
bool is_eulerian_cut(const Multigraph& g, const Cut& cut);

/// Non-constant harmonic morphism onto B_2 (vertices 0, 1; edges 0, 1).
/// The side of the cut containing vertex 0 maps to vertex 0.
std::optional<GraphMorphism> morphism_to_B2(const Multigraph& g);

}  // namespace hgraph
