#pragma once

#include <string>
#include <vector>

#include "hgraph/graph.hpp"

namespace fixtures {

using hgraph::Multigraph;

struct Named {
  std::string name;
  Multigraph graph;
};

inline Multigraph two_triangles_with_bridge() {
  return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
}

inline Multigraph bowtie() { return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

/// Trees on at most five vertices, one per isomorphism class.
inline std::vector<Named> small_trees() {
  return {
      {"K1", hgraph::path(1)},
      {"P2", hgraph::path(2)},
      {"P3", hgraph::path(3)},
      {"P4", hgraph::path(4)},
      {"star3", hgraph::star(3)},
      {"P5", hgraph::path(5)},
      {"star4", hgraph::star(4)},
      {"fork5", Multigraph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})},
  };
}

/// The shared test corpus.
inline std::vector<Named> corpus() {
  std::vector<Named> out = small_trees();
  for (int n = 3; n <= 6; ++n) out.push_back({"C" + std::to_string(n), hgraph::cycle(n)});
  for (int n = 2; n <= 5; ++n) out.push_back({"B" + std::to_string(n), hgraph::banana_unit(n)});
  out.push_back({"B(1,1,2)", hgraph::banana({1, 1, 2})});
  out.push_back({"B(2,2,2)", hgraph::banana({2, 2, 2})});
  out.push_back({"B(1,3,5)", hgraph::banana({1, 3, 5})});
  out.push_back({"B(3,3,3,3)", hgraph::banana({3, 3, 3, 3})});
  out.push_back({"Phi(1)", hgraph::theta(1)});
  out.push_back({"Phi(2)", hgraph::theta(2)});
  out.push_back({"K4", hgraph::complete(4)});
  out.push_back({"triangles+bridge", two_triangles_with_bridge()});
  return out;
}

}  // namespace fixtures
