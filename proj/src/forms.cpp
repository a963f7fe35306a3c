#include "hgraph/forms.hpp"

#include <algorithm>
#include <queue>

namespace hgraph {

std::vector<Rational> coboundary(const Multigraph& g, const OneForm& w) {
  std::vector<Rational> out(g.vertex_count(), 0);
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.ends(e);
    out[v] += w.values[e];
    out[u] -= w.values[e];
  }
  return out;
}

bool is_flow(const Multigraph& g, const OneForm& w) {
  auto d = coboundary(g, w);
  return std::all_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; });
}

FlowBasis flow_basis(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> parent_edge(n, -1);
  std::vector<bool> seen(n, false), in_tree(g.edge_count(), false);
  FlowBasis b;
  std::queue<Vertex> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Edge e : g.incident_edges(x)) {
      Vertex y = g.other_end(e, x);
      if (seen[y]) continue;
      seen[y] = true;
      parent_edge[y] = e;
      in_tree[e] = true;
      b.tree_edges.push_back(e);
      queue.push(y);
    }
  }
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    b.cotree_edges.push_back(e);
    OneForm w{std::vector<Rational>(g.edge_count(), 0)};
    w.values[e] = 1;
    auto [u, v] = g.ends(e);
    // Climb from v with +1 and from u with -1 in the child-to-parent direction.
    auto climb = [&](Vertex start, int sign) {
      for (Vertex x = start; parent_edge[x] >= 0;) {
        Edge te = parent_edge[x];
        int dir = g.ends(te).first == x ? 1 : -1;
        w.values[te] += sign * dir;
        x = g.other_end(te, x);
      }
    };
    climb(v, 1);
    climb(u, -1);
    b.cycles.push_back(std::move(w));
  }
  return b;
}

std::vector<Rational> coordinates(const FlowBasis& b, const OneForm& w) {
  std::vector<Rational> c;
  for (Edge e : b.cotree_edges) c.push_back(w.values[e]);
  return c;
}

OneForm from_coordinates(const Multigraph& g, const FlowBasis& b, const std::vector<Rational>& c) {
  OneForm w{std::vector<Rational>(g.edge_count(), 0)};
  for (std::size_t i = 0; i < b.cycles.size(); ++i)
    for (Edge e = 0; e < g.edge_count(); ++e) w.values[e] += c[i] * b.cycles[i].values[e];
  return w;
}

Matrix<BigInt> gram_matrix(const Multigraph& g, const FlowBasis& b) {
  const std::size_t k = b.cycles.size();
  Matrix<BigInt> m(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (Edge e = 0; e < g.edge_count(); ++e) s += b.cycles[i].values[e] * b.cycles[j].values[e];
      m[i][j] = numerator(s);
    }
  return m;
}

OneForm pull_form(const GraphMorphism& phi, const OneForm& w) {
  OneForm out{std::vector<Rational>(phi.source.edge_count(), 0)};
  for (Edge e = 0; e < phi.source.edge_count(); ++e) {
    if (phi.emap[e].vertical) continue;
    out.values[e] = edge_orientation(phi, e) * w.values[phi.emap[e].index];
  }
  return out;
}

OneForm push_form(const GraphMorphism& phi, const OneForm& w) {
  OneForm out{std::vector<Rational>(phi.target.edge_count(), 0)};
  for (Edge e = 0; e < phi.source.edge_count(); ++e) {
    if (phi.emap[e].vertical) continue;
    out.values[phi.emap[e].index] += edge_orientation(phi, e) * w.values[e];
  }
  return out;
}

namespace {

Matrix<Rational> columns_to_matrix(const std::vector<std::vector<Rational>>& columns, std::size_t rows) {
  Matrix<Rational> m(rows, std::vector<Rational>(columns.size(), 0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = columns[j][i];
  return m;
}

}  // namespace

Matrix<Rational> pull_matrix(const GraphMorphism& phi) {
  auto source_basis = flow_basis(phi.source);
  auto target_basis = flow_basis(phi.target);
  std::vector<std::vector<Rational>> columns;
  for (const auto& l : target_basis.cycles)
    columns.push_back(coordinates(source_basis, pull_form(phi, l)));
  return columns_to_matrix(columns, source_basis.cycles.size());
}

Matrix<Rational> push_matrix(const GraphMorphism& phi) {
  auto source_basis = flow_basis(phi.source);
  auto target_basis = flow_basis(phi.target);
  std::vector<std::vector<Rational>> columns;
  for (const auto& l : source_basis.cycles)
    columns.push_back(coordinates(target_basis, push_form(phi, l)));
  return columns_to_matrix(columns, target_basis.cycles.size());
}

Matrix<Rational> aut_action_matrix(const GraphMorphism& alpha) { return pull_matrix(alpha); }

bool aut_faithfulness_check(const Multigraph& g, const std::vector<GraphMorphism>& automorphisms) {
  if (!bridges(g).empty()) throw HypothesisError("graph has a bridge; contract bridges first");
  if (genus(g) < 2) throw HypothesisError("faithfulness needs genus at least 2");
  const auto id = identity_matrix(genus(g));
  const auto trivial = identity_morphism(g);
  for (const auto& a : automorphisms) {
    bool is_identity = a.vmap == trivial.vmap && a.emap == trivial.emap;
    if (!is_identity && aut_action_matrix(a) == id) return false;
  }
  return true;
}

bool gl_integrality_check(const GraphMorphism& alpha) {
  auto m = aut_action_matrix(alpha);
  auto integral = [](const Matrix<Rational>& a) {
    for (const auto& row : a)
      for (const auto& x : row)
        if (denominator(x) != 1) return false;
    return true;
  };
  if (!integral(m)) return false;
  auto inv = inverse(m);
  return inv && integral(*inv);
}

std::vector<std::vector<Rational>> canonical_map(const Multigraph& g) {
  if (!bridges(g).empty()) throw HypothesisError("graph has a bridge; the canonical map needs 2-edge-connectivity");
  auto b = flow_basis(g);
  std::vector<std::vector<Rational>> out;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    std::vector<Rational> row;
    for (const auto& l : b.cycles) row.push_back(l.values[e]);
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    if (lead != row.end()) {
      Rational s = *lead;
      for (auto& x : row) x /= s;
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Edge>> canonical_fibers(const Multigraph& g) {
  auto psi = canonical_map(g);
  std::vector<std::vector<Edge>> fibers;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto it = std::find_if(fibers.begin(), fibers.end(),
                           [&](const std::vector<Edge>& f) { return psi[f.front()] == psi[e]; });
    if (it == fibers.end())
      fibers.push_back({e});
    else
      it->push_back(e);
  }
  return fibers;
}

bool is_canonical_injective(const Multigraph& g) {
  return static_cast<int>(canonical_fibers(g).size()) == g.edge_count();
}

}  // namespace hgraph
