#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "hgraph/errors.hpp"

namespace hgraph {

/// Dense vertex index, 0 .. |V|-1.
using Vertex = int;
/// Dense edge index, 0 .. |E|-1.  Parallel edges have distinct ids.
using Edge = int;

/// An edge with one of its two orientations.  `forward` follows the
/// orientation in which the edge was stored (first end -> second end).
struct DirectedEdge {
  Edge edge = 0;
  bool forward = true;

  DirectedEdge reversed() const { return {edge, !forward}; }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/**
 * A finite, connected, loopless multigraph.
 *
 * Vertices are 0..n-1 and edges are numbered in insertion order.  The
 * constructor rejects loops, out-of-range endpoints and disconnected input,
 * so every Multigraph value satisfies the invariants the rest of the library
 * relies on.  Values are immutable after construction.
 */
class Multigraph {
 public:
  Multigraph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::pair<Vertex, Vertex> ends(Edge e) const { return edges_[e]; }
  Vertex other_end(Edge e, Vertex v) const;
  bool incident(Edge e, Vertex v) const;

  Vertex origin(DirectedEdge d) const;
  Vertex terminus(DirectedEdge d) const;

  /// Edge ids incident to `v`, ascending.
  std::span<const Edge> incident_edges(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }
  /// Number of parallel edges joining u and v (0 when u == v).
  int multiplicity(Vertex u, Vertex v) const;
  /// Edge ids joining u and v, ascending.
  std::vector<Edge> edges_between(Vertex u, Vertex v) const;

  bool is_simple() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Edge>> incidence_;
};

/// |E| - |V| + 1, the dimension of the cycle space.
int genus(const Multigraph& g);

/// Nonempty proper vertex subset together with its boundary edges.
struct Cut {
  std::vector<bool> side_a;
  std::vector<Edge> edges;
};

/// Boundary of the vertex set `side_a`: edges with exactly one end inside.
std::vector<Edge> cut_edges(const Multigraph& g, const std::vector<bool>& side_a);

/// Returned by edge_connectivity for the one-vertex graph, which has no
/// nonempty cut and is k-edge-connected for every k.
inline constexpr int kUnboundedConnectivity = std::numeric_limits<int>::max();

/// Minimum cut size.  Exhaustive over all bipartitions for |V| <= 20,
/// max-flow above that.
int edge_connectivity(const Multigraph& g);
int edge_connectivity_exhaustive(const Multigraph& g);
int edge_connectivity_maxflow(const Multigraph& g);
bool is_k_edge_connected(const Multigraph& g, int k);

std::vector<Edge> bridges(const Multigraph& g);

struct BridgeContraction {
  Multigraph graph;
  /// vertex_map[x] is the image of source vertex x.
  std::vector<Vertex> vertex_map;
  /// Image edge id of each source edge, or -1 for contracted bridges.
  std::vector<Edge> edge_map;
};

/// Contract every bridge.  Contracted vertices are numbered by the smallest
/// source vertex they contain; surviving edges keep their relative order.
BridgeContraction contract_bridges(const Multigraph& g);

// ---------------------------------------------------------------------------
// Named families.  Labelings are fixed and documented in README.md.

/// Two vertices x = 0, y = 1 joined by internally disjoint paths of the given
/// lengths.  Internal vertices are numbered from 2 upward, path by path,
/// walking from x towards y; edges are listed in the same walk order.
Multigraph banana(std::span<const int> lengths);
Multigraph banana(std::initializer_list<int> lengths);
/// B_n: two vertices joined by n parallel edges.
Multigraph banana_unit(int n);
/// Two paths x_0..x_l (vertices 0..l) and y_0..y_l (vertices l+1..2l+1),
/// plus two parallel edges x_0y_0 and two parallel edges x_ly_l.
Multigraph theta(int l);
/// Cycle on vertices 0..n-1, edge i joins i and (i+1) mod n.  n >= 2.
Multigraph cycle(int n);
/// Path on n vertices 0..n-1.
Multigraph path(int n);
/// Star with centre 0 and leaves 1..leaves.
Multigraph star(int leaves);
/// Complete simple graph; edges in lexicographic order of endpoints.
Multigraph complete(int n);
/// Replace each edge by a path of k edges.  Original vertices keep their
/// ids; new vertices are appended edge by edge, walking from the stored first
/// end.  subdivide(g, 1) == g.
Multigraph subdivide(const Multigraph& g, int k);

// ---------------------------------------------------------------------------
// Isomorphism.

/// Labeling-independent description of a multigraph: the vertex count and
/// the upper triangle of the adjacency-multiplicity matrix under a canonical
/// ordering.  Two graphs are isomorphic iff their forms are equal.
struct CanonicalForm {
  int vertex_count = 0;
  std::vector<int> upper_triangle;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Multigraph& g);
bool are_isomorphic(const Multigraph& a, const Multigraph& b);

/// All vertex permutations preserving edge multiplicities.  Throws
/// BudgetExceeded when more than `limit` are found.
std::vector<std::vector<Vertex>> vertex_automorphisms(const Multigraph& g, std::size_t limit);

/// Connected loopless multigraphs with no bridge, 2 <= |V| and |E| <= max_edges,
/// one representative per isomorphism class, ordered by (|E|, |V|, canonical form).
std::vector<Multigraph> two_edge_connected_multigraphs(int max_edges);

}  // namespace hgraph
