#include "hgraph/parity.hpp"

#include <algorithm>
#include <queue>

namespace hgraph {

std::optional<OneForm> two_torsion_flow(const Multigraph& g) {
  auto basis = flow_basis(g);
  auto gram = gram_matrix(g, basis);
  Matrix<int> mod2(gram.size(), std::vector<int>(gram.size()));
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) mod2[i][j] = gram[i][j] % 2 != 0 ? 1 : 0;
  auto kernel = gf2_kernel(mod2);
  if (kernel.empty()) return std::nullopt;
  std::vector<Rational> c;
  for (int bit : kernel.front()) c.push_back(Rational(bit, 2));
  return from_coordinates(g, basis, c);
}

bool is_eulerian_cut(const Multigraph& g, const Cut& cut) {
  if (cut.edges.empty()) return false;
  if (cut_edges(g, cut.side_a) != cut.edges) return false;
  std::vector<int> meet(g.vertex_count(), 0);
  for (Edge e : cut.edges) {
    ++meet[g.ends(e).first];
    ++meet[g.ends(e).second];
  }
  return std::all_of(meet.begin(), meet.end(), [](int m) { return m % 2 == 0; });
}

std::optional<Cut> eulerian_cut(const Multigraph& g) {
  auto w = two_torsion_flow(g);
  if (!w) return std::nullopt;
  std::vector<bool> odd(g.edge_count());
  for (Edge e = 0; e < g.edge_count(); ++e) odd[e] = denominator(w->values[e]) != 1;
  // Parity of odd edges along any path from vertex 0.
  std::vector<int> parity(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  parity[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Edge e : g.incident_edges(x)) {
      Vertex y = g.other_end(e, x);
      if (parity[y] < 0) {
        parity[y] = parity[x] ^ static_cast<int>(odd[e]);
        queue.push(y);
      }
    }
  }
  Cut cut;
  cut.side_a.resize(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) cut.side_a[x] = parity[x] == 0;
  cut.edges = cut_edges(g, cut.side_a);
  for (Edge e = 0; e < g.edge_count(); ++e)
    if (odd[e] != std::binary_search(cut.edges.begin(), cut.edges.end(), e))
      throw std::logic_error("odd edges of the half-integral flow do not form a cut");
  return cut;
}

std::optional<GraphMorphism> morphism_to_B2(const Multigraph& g) {
  auto cut = eulerian_cut(g);
  if (!cut) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<bool> in_cut(g.edge_count(), false), used(g.edge_count(), false);
  for (Edge e : cut->edges) in_cut[e] = true;
  std::vector<int> label(g.edge_count(), -1);

  // Walk unused cut edges; whenever the walk revisits a vertex on the current
  // path, the closed part is a simple cycle and is split off.
  std::vector<std::size_t> cursor(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    std::vector<Vertex> path_v{start};
    std::vector<Edge> path_e;
    std::vector<int> on_path(n, -1);
    on_path[start] = 0;
    while (true) {
      Vertex x = path_v.back();
      auto inc = g.incident_edges(x);
      while (cursor[x] < inc.size() && (!in_cut[inc[cursor[x]]] || used[inc[cursor[x]]])) ++cursor[x];
      if (cursor[x] == inc.size()) break;  // only possible at `start` with an empty path
      Edge e = inc[cursor[x]];
      used[e] = true;
      Vertex y = g.other_end(e, x);
      path_e.push_back(e);
      if (on_path[y] >= 0) {
        std::size_t from = static_cast<std::size_t>(on_path[y]);
        for (std::size_t i = from; i < path_e.size(); ++i) label[path_e[i]] = static_cast<int>((i - from) % 2);
        for (std::size_t i = from + 1; i < path_v.size(); ++i) on_path[path_v[i]] = -1;
        path_v.resize(from + 1);
        path_e.resize(from);
      } else {
        on_path[y] = static_cast<int>(path_v.size());
        path_v.push_back(y);
      }
    }
  }

  GraphMorphism phi{g, banana_unit(2), std::vector<Vertex>(n), {}};
  for (Vertex x = 0; x < n; ++x) phi.vmap[x] = cut->side_a[x] ? 0 : 1;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (in_cut[e])
      phi.emap.push_back(EdgeImage::edge(label[e]));
    else
      phi.emap.push_back(EdgeImage::vertex(phi.vmap[g.ends(e).first]));
  }
  return phi;
}

}  // namespace hgraph
