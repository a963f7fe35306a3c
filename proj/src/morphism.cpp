#include "hgraph/morphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hgraph {

std::optional<std::string> morphism_violation(const GraphMorphism& phi) {
  const auto& g = phi.source;
  const auto& t = phi.target;
  if (static_cast<int>(phi.vmap.size()) != g.vertex_count())
    return "vertex map has " + std::to_string(phi.vmap.size()) + " entries, expected " +
           std::to_string(g.vertex_count());
  if (static_cast<int>(phi.emap.size()) != g.edge_count())
    return "edge map has " + std::to_string(phi.emap.size()) + " entries, expected " +
           std::to_string(g.edge_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (phi.vmap[x] < 0 || phi.vmap[x] >= t.vertex_count())
      return "vertex " + std::to_string(x) + " maps outside the target";
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.ends(e);
    Vertex a = phi.vmap[u], b = phi.vmap[v];
    const EdgeImage& img = phi.emap[e];
    std::string where = "edge " + std::to_string(e);
    if (img.vertical) {
      if (img.index != a || img.index != b)
        return where + " is collapsed to vertex " + std::to_string(img.index) +
               " but its ends map to " + std::to_string(a) + " and " + std::to_string(b);
    } else {
      if (img.index < 0 || img.index >= t.edge_count()) return where + " maps outside the target";
      auto [p, q] = t.ends(img.index);
      if (!((a == p && b == q) || (a == q && b == p)))
        return where + " maps to edge " + std::to_string(img.index) +
               " whose ends are not the images of its own ends";
    }
  }
  return std::nullopt;
}

bool validate(const GraphMorphism& phi) { return !morphism_violation(phi).has_value(); }

std::optional<HarmonicCertificate> is_harmonic(const GraphMorphism& phi) {
  if (auto why = morphism_violation(phi)) throw MorphismError(*why);
  const auto& g = phi.source;
  const auto& t = phi.target;
  HarmonicCertificate c;
  c.horizontal.assign(g.vertex_count(), 0);
  c.vertical.assign(g.vertex_count(), 0);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    std::map<Edge, int> count;
    for (Edge e : g.incident_edges(x)) {
      if (phi.emap[e].vertical)
        ++c.vertical[x];
      else
        ++count[phi.emap[e].index];
    }
    auto targets = t.incident_edges(phi.vmap[x]);
    int m = -1;
    for (Edge f : targets) {
      auto it = count.find(f);
      int k = it == count.end() ? 0 : it->second;
      if (m < 0) m = k;
      if (k != m) return std::nullopt;
    }
    c.horizontal[x] = std::max(m, 0);
  }
  if (t.vertex_count() > 1) {
    for (Edge e = 0; e < g.edge_count(); ++e)
      if (!phi.emap[e].vertical && phi.emap[e].index == 0) ++c.degree;
  }
  return c;
}

HarmonicCertificate certificate(const GraphMorphism& phi) {
  auto c = is_harmonic(phi);
  if (!c) throw MorphismError("morphism is not harmonic");
  return *c;
}

bool is_constant(const GraphMorphism& phi) {
  return std::all_of(phi.vmap.begin(), phi.vmap.end(),
                     [&](Vertex v) { return v == phi.vmap.front(); });
}

bool is_surjective(const GraphMorphism& phi) {
  std::vector<bool> hit_v(phi.target.vertex_count(), false), hit_e(phi.target.edge_count(), false);
  for (Vertex v : phi.vmap) hit_v[v] = true;
  for (const auto& img : phi.emap)
    if (!img.vertical) hit_e[img.index] = true;
  return std::all_of(hit_v.begin(), hit_v.end(), [](bool b) { return b; }) &&
         std::all_of(hit_e.begin(), hit_e.end(), [](bool b) { return b; });
}

bool is_nondegenerate(const HarmonicCertificate& c) {
  return std::all_of(c.horizontal.begin(), c.horizontal.end(), [](int m) { return m >= 1; });
}

GraphMorphism identity_morphism(const Multigraph& g) {
  GraphMorphism phi{g, g, {}, {}};
  for (Vertex x = 0; x < g.vertex_count(); ++x) phi.vmap.push_back(x);
  for (Edge e = 0; e < g.edge_count(); ++e) phi.emap.push_back(EdgeImage::edge(e));
  return phi;
}

GraphMorphism compose(const GraphMorphism& phi, const GraphMorphism& psi) {
  if (!(phi.target == psi.source)) throw MorphismError("composition: target and source differ");
  GraphMorphism out{phi.source, psi.target, {}, {}};
  for (Vertex v : phi.vmap) out.vmap.push_back(psi.vmap[v]);
  for (const auto& img : phi.emap)
    out.emap.push_back(img.vertical ? EdgeImage::vertex(psi.vmap[img.index]) : psi.emap[img.index]);
  return out;
}

GraphMorphism automorphism(const Multigraph& g, std::vector<Vertex> vmap, std::vector<Edge> emap) {
  GraphMorphism phi{g, g, std::move(vmap), {}};
  for (Edge e : emap) phi.emap.push_back(EdgeImage::edge(e));
  return phi;
}

int edge_orientation(const GraphMorphism& phi, Edge e) {
  auto [u, v] = phi.source.ends(e);
  (void)v;
  return phi.vmap[u] == phi.target.ends(phi.emap[e].index).first ? 1 : -1;
}

Divisor push_divisor(const GraphMorphism& phi, const Divisor& d) {
  Divisor out(phi.target.vertex_count());
  for (Vertex x = 0; x < phi.source.vertex_count(); ++x) out[phi.vmap[x]] += d[x];
  return out;
}

Divisor pull_divisor(const GraphMorphism& phi, const HarmonicCertificate& c, const Divisor& d) {
  Divisor out(phi.source.vertex_count());
  for (Vertex x = 0; x < phi.source.vertex_count(); ++x) out[x] = c.horizontal[x] * d[phi.vmap[x]];
  return out;
}

Divisor pull_divisor(const GraphMorphism& phi, const Divisor& d) {
  return pull_divisor(phi, certificate(phi), d);
}

VertexFunction push_function(const GraphMorphism& phi, const HarmonicCertificate& c,
                             const VertexFunction& f) {
  VertexFunction out(phi.target.vertex_count(), 0);
  for (Vertex x = 0; x < phi.source.vertex_count(); ++x) out[phi.vmap[x]] += c.horizontal[x] * f[x];
  return out;
}

VertexFunction pull_function(const GraphMorphism& phi, const VertexFunction& f) {
  VertexFunction out(phi.source.vertex_count());
  for (Vertex x = 0; x < phi.source.vertex_count(); ++x) out[x] = f[phi.vmap[x]];
  return out;
}

bool functoriality_check(const GraphMorphism& phi, const VertexFunction& f,
                         const VertexFunction& f_target) {
  auto c = certificate(phi);
  bool push_ok = push_divisor(phi, principal(phi.source, f)) ==
                 principal(phi.target, push_function(phi, c, f));
  bool pull_ok = pull_divisor(phi, c, principal(phi.target, f_target)) ==
                 principal(phi.source, pull_function(phi, f_target));
  return push_ok && pull_ok;
}

DivisorClass jac_push(const GraphMorphism& phi, const DivisorClass& c) {
  return class_of(phi.target, push_divisor(phi, c.representative));
}

DivisorClass jac_pull(const GraphMorphism& phi, const DivisorClass& c) {
  return class_of(phi.source, pull_divisor(phi, c.representative));
}

bool jac_push_surjective(const GraphMorphism& phi, std::size_t bound) {
  const auto& t = phi.target;
  BigInt order = spanning_tree_count(t);
  if (order > bound) throw BudgetExceeded("target Jacobian exceeds the enumeration bound");
  // The image is generated by the images of the generators S_0(x).
  std::vector<DivisorClass> generators;
  for (Vertex x = 1; x < phi.source.vertex_count(); ++x)
    generators.push_back(jac_push(phi, abel_jacobi(phi.source, 0, x)));
  std::set<DivisorClass> image;
  std::deque<DivisorClass> queue;
  DivisorClass zero{Divisor(t.vertex_count())};
  image.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    DivisorClass c = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      DivisorClass next = class_sum(t, c, s);
      if (image.insert(next).second) queue.push_back(next);
    }
  }
  return BigInt(image.size()) == order;
}

bool jac_pull_injective(const GraphMorphism& phi, std::size_t bound) {
  certificate(phi);
  for (const auto& c : jacobian_elements(phi.target, bound))
    if (!is_zero_class(c) && is_zero_class(jac_pull(phi, c))) return false;
  return true;
}

bool rank_transfer_check(const GraphMorphism& phi, const Divisor& d) {
  return rank(phi.target, push_divisor(phi, d)) >= rank(phi.source, d);
}

RiemannHurwitzReport riemann_hurwitz(const GraphMorphism& phi) {
  auto c = certificate(phi);
  const auto& g = phi.source;
  Divisor r(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) r[x] = 2 * (c.horizontal[x] - 1) + c.vertical[x];
  Divisor pulled = pull_divisor(phi, c, canonical_divisor(phi.target));
  bool identity = canonical_divisor(g) == pulled + r;
  Chip residual = Chip{2} * genus(g) - 2 - Chip{c.degree} * (Chip{2} * genus(phi.target) - 2) -
                  r.degree();
  return {std::move(r), identity, residual};
}

bool is_rational_harmonic(const GraphMorphism& phi) {
  if (auto why = morphism_violation(phi)) throw MorphismError(*why);
  const auto& g = phi.source;
  const auto& t = phi.target;
  const int n = t.vertex_count();
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    Vertex y = phi.vmap[x];
    // f' -> Laplacian of f' at y, and f' -> Laplacian of f' o phi at x.
    std::vector<Rational> ty(n, 0), lx(n, 0);
    for (Edge e : t.incident_edges(y)) {
      ty[y] += 1;
      ty[t.other_end(e, y)] -= 1;
    }
    for (Edge e : g.incident_edges(x)) {
      lx[y] += 1;
      lx[phi.vmap[g.other_end(e, x)]] -= 1;
    }
    if (rank(Matrix<Rational>{ty, lx}) != rank(Matrix<Rational>{ty})) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

GraphMorphism harmonic_to_edge(const Multigraph& g, Vertex x) {
  if (x < 0 || x >= g.vertex_count()) throw GraphError("vertex out of range");
  if (g.vertex_count() < 2) throw GraphError("harmonic_to_edge needs at least two vertices");
  GraphMorphism phi{g, path(2), std::vector<Vertex>(g.vertex_count(), 1), {}};
  phi.vmap[x] = 0;
  for (Edge e = 0; e < g.edge_count(); ++e)
    phi.emap.push_back(g.incident(e, x) ? EdgeImage::edge(0) : EdgeImage::vertex(1));
  return phi;
}

GraphMorphism collapse(const Multigraph& g, Vertex p, const std::vector<Vertex>& side) {
  const int n = g.vertex_count();
  std::vector<bool> in_side(n, false);
  for (Vertex v : side) {
    if (v < 0 || v >= n) throw GraphError("collapse: vertex out of range");
    in_side[v] = true;
  }
  if (p < 0 || p >= n || !in_side[p]) throw GraphError("collapse: side must contain the cut vertex");
  if (side.size() < 2) throw GraphError("collapse: side must contain more than the cut vertex");
  for (auto [u, v] : g.edges()) {
    bool a = in_side[u] && u != p, b = in_side[v] && v != p;
    if ((a && !in_side[v]) || (b && !in_side[u]))
      throw GraphError("collapse: side is not separated from the rest by the cut vertex");
  }
  std::vector<Vertex> renumber(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!in_side[v] || v == p) renumber[v] = next++;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<EdgeImage> emap;
  for (auto [u, v] : g.edges()) {
    if (in_side[u] && in_side[v]) {
      emap.push_back(EdgeImage::vertex(renumber[p]));
    } else {
      emap.push_back(EdgeImage::edge(static_cast<Edge>(edges.size())));
      edges.emplace_back(renumber[u], renumber[v]);
    }
  }
  std::vector<Vertex> vmap(n);
  for (Vertex v = 0; v < n; ++v) vmap[v] = in_side[v] ? renumber[p] : renumber[v];
  return {g, Multigraph(next, std::move(edges)), std::move(vmap), std::move(emap)};
}

bool covering_check(const GraphMorphism& phi) {
  auto c = is_harmonic(phi);
  if (!c) return false;
  return std::all_of(c->horizontal.begin(), c->horizontal.end(), [](int m) { return m == 1; }) &&
         std::all_of(c->vertical.begin(), c->vertical.end(), [](int v) { return v == 0; });
}

GraphMorphism cycle_covering(int k, int n) {
  if (k < 2 || n < 1) throw GraphError("cycle covering needs k >= 2 and n >= 1");
  Multigraph source = cycle(n * k), target = cycle(k);
  GraphMorphism phi{source, target, {}, {}};
  for (int i = 0; i < n * k; ++i) {
    phi.vmap.push_back(i % k);
    phi.emap.push_back(EdgeImage::edge(i % k));
  }
  return phi;
}

namespace {

bool same_map(const GraphMorphism& a, const GraphMorphism& b) {
  return a.vmap == b.vmap && a.emap == b.emap;
}

}  // namespace

std::vector<GraphMorphism> cyclic_group(const GraphMorphism& alpha) {
  GraphMorphism id = identity_morphism(alpha.source);
  std::vector<GraphMorphism> out{id};
  GraphMorphism power = alpha;
  while (!same_map(power, id)) {
    out.push_back(power);
    power = compose(power, alpha);
    if (out.size() > 100000) throw MorphismError("automorphism has unbounded order");
  }
  return out;
}

Quotient quotient(const Multigraph& g, const std::vector<GraphMorphism>& group) {
  for (const auto& h : group) {
    if (!(h.source == g) || !(h.target == g)) throw MorphismError("group element is not an automorphism of G");
    if (auto why = morphism_violation(h)) throw MorphismError(*why);
  }
  for (const auto& a : group)
    for (const auto& b : group) {
      GraphMorphism ab = compose(a, b);
      if (std::none_of(group.begin(), group.end(), [&](const auto& h) { return same_map(h, ab); }))
        throw MorphismError("automorphism set is not closed under composition");
    }
  const int n = g.vertex_count();
  std::vector<Vertex> vertex_rep(n), edge_rep(g.edge_count());
  for (Vertex x = 0; x < n; ++x) {
    vertex_rep[x] = x;
    for (const auto& h : group) vertex_rep[x] = std::min(vertex_rep[x], h.vmap[x]);
  }
  for (Edge e = 0; e < g.edge_count(); ++e) {
    edge_rep[e] = e;
    for (const auto& h : group) {
      if (h.emap[e].vertical) throw MorphismError("group element collapses an edge");
      edge_rep[e] = std::min(edge_rep[e], h.emap[e].index);
    }
  }
  std::vector<Vertex> vertex_class(n, -1);
  int classes = 0;
  for (Vertex x = 0; x < n; ++x)
    if (vertex_rep[x] == x) vertex_class[x] = classes++;
  for (Vertex x = 0; x < n; ++x) vertex_class[x] = vertex_class[vertex_rep[x]];

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Edge> edge_class(g.edge_count(), -1);
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (edge_rep[e] != e) continue;
    auto [u, v] = g.ends(e);
    if (vertex_class[u] == vertex_class[v]) continue;
    edge_class[e] = static_cast<Edge>(edges.size());
    edges.emplace_back(vertex_class[u], vertex_class[v]);
  }
  Multigraph q(classes, std::move(edges));
  GraphMorphism pi{g, q, vertex_class, {}};
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.ends(e);
    if (vertex_class[u] == vertex_class[v])
      pi.emap.push_back(EdgeImage::vertex(vertex_class[u]));
    else
      pi.emap.push_back(EdgeImage::edge(edge_class[edge_rep[e]]));
  }
  return {std::move(q), std::move(pi)};
}

GraphMorphism bridge_contraction_morphism(const Multigraph& g) {
  auto bc = contract_bridges(g);
  GraphMorphism rho{g, bc.graph, bc.vertex_map, {}};
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (bc.edge_map[e] < 0)
      rho.emap.push_back(EdgeImage::vertex(bc.vertex_map[g.ends(e).first]));
    else
      rho.emap.push_back(EdgeImage::edge(bc.edge_map[e]));
  }
  return rho;
}

}  // namespace hgraph
