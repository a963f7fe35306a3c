#include "hgraph/hyperelliptic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hgraph/forms.hpp"

namespace hgraph {

std::vector<GraphMorphism> automorphisms(const Multigraph& g, std::size_t limit) {
  if (g.vertex_count() > 10) throw BudgetExceeded("automorphism enumeration limited to 10 vertices");
  std::vector<std::pair<Vertex, Vertex>> classes;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (g.multiplicity(u, v) > 0) classes.emplace_back(u, v);

  std::vector<GraphMorphism> out;
  for (const auto& sigma : vertex_automorphisms(g, limit)) {
    std::vector<Edge> emap(g.edge_count(), -1);
    auto assign = [&](auto&& self, std::size_t c) -> void {
      if (c == classes.size()) {
        if (out.size() >= limit)
          throw BudgetExceeded("more than " + std::to_string(limit) + " automorphisms");
        out.push_back(automorphism(g, sigma, emap));
        return;
      }
      auto [u, v] = classes[c];
      auto from = g.edges_between(u, v);
      auto to = g.edges_between(sigma[u], sigma[v]);
      do {
        for (std::size_t i = 0; i < from.size(); ++i) emap[from[i]] = to[i];
        self(self, c + 1);
      } while (std::next_permutation(to.begin(), to.end()));
    };
    assign(assign, 0);
  }
  return out;
}

bool is_involution(const GraphMorphism& alpha) {
  auto sq = compose(alpha, alpha);
  auto id = identity_morphism(alpha.source);
  return sq.vmap == id.vmap && sq.emap == id.emap;
}

std::vector<GraphMorphism> involutions(const Multigraph& g, std::size_t limit) {
  std::vector<GraphMorphism> out;
  for (auto& a : automorphisms(g, limit))
    if (is_involution(a)) out.push_back(std::move(a));
  return out;
}

bool is_mixing(const GraphMorphism& iota) {
  for (Edge e = 0; e < iota.source.edge_count(); ++e) {
    const auto& img = iota.emap[e];
    if (img.vertical || img.index != e) continue;
    auto [u, v] = iota.source.ends(e);
    if (iota.vmap[u] != v) return false;
  }
  return true;
}

bool has_tree_quotient(const GraphMorphism& iota) {
  return genus(quotient(iota.source, cyclic_group(iota)).graph) == 0;
}

namespace {

// f with div(f) = d and f(0) = 0; d must be principal.
std::vector<Rational> potential(const Multigraph& g, const Divisor& d) {
  const int n = g.vertex_count();
  auto lap = reduced_laplacian(g);
  Matrix<Rational> a(n - 1, std::vector<Rational>(n - 1));
  std::vector<Rational> b(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) a[i][j] = Rational(lap[i][j]);
    b[i] = Rational(d[i + 1]);
  }
  auto x = solve(std::move(a), std::move(b));
  if (!x) throw std::logic_error("reduced Laplacian is singular");
  std::vector<Rational> f{0};
  f.insert(f.end(), x->begin(), x->end());
  return f;
}

}  // namespace

std::optional<HyperellipticWitness> is_hyperelliptic(const Multigraph& g) {
  if (!bridges(g).empty())
    throw HypothesisError("graph has a bridge; contract bridges before testing hyperellipticity");
  if (genus(g) < 2) return std::nullopt;
  const int n = g.vertex_count();

  std::optional<Divisor> found;
  for (Vertex x = 0; x < n && !found; ++x)
    for (Vertex y = x; y < n && !found; ++y) {
      Divisor d = point(n, x) + point(n, y);
      if (rank_at_least(g, d, 1)) found = d;
    }
  if (!found) return std::nullopt;
  const Divisor& d = *found;

  std::vector<Vertex> vmap(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    Divisor rest = d - point(n, x);
    for (Vertex y = 0; y < n; ++y)
      if (is_equivalent(g, rest, point(n, y))) {
        vmap[x] = y;
        break;
      }
    if (vmap[x] < 0) throw std::logic_error("no partner vertex for the involution");
  }

  std::vector<Edge> emap(g.edge_count(), -1);
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.ends(e);
    if (vmap[x] == y) {
      emap[e] = e;
      continue;
    }
    Divisor d1 = point(n, x) + point(n, vmap[x]);
    Divisor d2 = point(n, y) + point(n, vmap[y]);
    auto f = potential(g, d1 - d2);
    Rational top = *std::max_element(f.begin(), f.end());
    std::vector<bool> level(n);
    for (Vertex z = 0; z < n; ++z) level[z] = f[z] == top;
    auto delta = cut_edges(g, level);
    if (delta.size() != 2 || (delta[0] != e && delta[1] != e))
      throw std::logic_error("maximum level set of the potential is not a 2-cut through the edge");
    emap[e] = delta[0] == e ? delta[1] : delta[0];
  }

  GraphMorphism iota = automorphism(g, vmap, emap);
  if (!validate(iota) || !is_involution(iota))
    throw std::logic_error("constructed map is not an involution");
  auto q = quotient(g, cyclic_group(iota));
  return HyperellipticWitness{d, std::move(iota), q.graph, q.projection};
}

WitnessConditions verify_witness(const Multigraph& g, const HyperellipticWitness& w) {
  WitnessConditions c{};
  c.rank_one_divisor = w.divisor.degree() == 2 && rank(g, w.divisor) == 1;
  c.tree_quotient = validate(w.involution) && is_involution(w.involution) && has_tree_quotient(w.involution);
  if (g.vertex_count() == 2) {
    c.double_cover_of_tree = true;
  } else {
    auto cert = validate(w.quotient_map) ? is_harmonic(w.quotient_map) : std::nullopt;
    c.double_cover_of_tree = cert && cert->degree == 2 && is_nondegenerate(*cert) &&
                             genus(w.quotient_map.target) == 0 && w.quotient_map.target == w.quotient_tree;
  }
  return c;
}

GraphMorphism hyperelliptic_involution(const Multigraph& g) {
  auto w = is_hyperelliptic(g);
  if (!w) throw HypothesisError("graph is not hyperelliptic");
  return w->involution;
}

bool uniqueness_check(const Multigraph& g) {
  auto iota = hyperelliptic_involution(g);
  std::set<std::vector<Vertex>> tree_quotients;
  for (const auto& a : involutions(g))
    if (has_tree_quotient(a)) tree_quotients.insert(a.vmap);
  return tree_quotients.size() == 1 && *tree_quotients.begin() == iota.vmap;
}

bool centrality_check(const Multigraph& g) {
  auto iota = hyperelliptic_involution(g);
  for (const auto& a : automorphisms(g))
    if (compose(a, iota).vmap != compose(iota, a).vmap) return false;
  return true;
}

bool PmOneReport::agree() const {
  return hyperelliptic_involution == jac_push_negates && jac_push_negates == jac_pull_negates &&
         jac_pull_negates == forms_push_negates && forms_push_negates == forms_pull_negates;
}

PmOneReport pm_one_criteria_check(const Multigraph& g, const GraphMorphism& iota) {
  if (!bridges(g).empty()) throw HypothesisError("graph has a bridge");
  if (genus(g) < 2) throw HypothesisError("the +-1 criteria need genus at least 2");
  PmOneReport r{};
  auto w = is_hyperelliptic(g);
  r.hyperelliptic_involution =
      w && w->involution.vmap == iota.vmap && w->involution.emap == iota.emap;
  r.jac_push_negates = r.jac_pull_negates = true;
  for (Vertex x = 1; x < g.vertex_count(); ++x) {
    auto s = abel_jacobi(g, 0, x);
    auto neg = class_negate(g, s);
    if (jac_push(iota, s) != neg) r.jac_push_negates = false;
    if (jac_pull(iota, s) != neg) r.jac_pull_negates = false;
  }
  Matrix<Rational> minus = identity_matrix(genus(g));
  for (auto& row : minus)
    for (auto& x : row) x = -x;
  r.forms_push_negates = push_matrix(iota) == minus;
  r.forms_pull_negates = pull_matrix(iota) == minus;
  return r;
}

GraphMorphism involution_from_double_cover(const GraphMorphism& phi) {
  auto c = certificate(phi);
  if (c.degree != 2 || !is_nondegenerate(c))
    throw MorphismError("expected a non-degenerate harmonic morphism of degree 2");
  const auto& g = phi.source;
  std::vector<Vertex> vmap(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    vmap[x] = x;
    for (Vertex y = 0; y < g.vertex_count(); ++y)
      if (y != x && phi.vmap[y] == phi.vmap[x]) vmap[x] = y;
  }
  std::map<Edge, std::vector<Edge>> fibers;
  for (Edge e = 0; e < g.edge_count(); ++e)
    if (!phi.emap[e].vertical) fibers[phi.emap[e].index].push_back(e);
  std::vector<Edge> emap(g.edge_count());
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (phi.emap[e].vertical) {
      emap[e] = e;
      continue;
    }
    const auto& fiber = fibers[phi.emap[e].index];
    emap[e] = fiber[0] == e ? fiber[1] : fiber[0];
  }
  return automorphism(g, std::move(vmap), std::move(emap));
}

std::vector<Vertex> weierstrass_points(const Multigraph& g) {
  const int n = g.vertex_count();
  const Chip gen = genus(g);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n; ++x)
    if (rank_at_least(g, gen * point(n, x), 1)) out.push_back(x);
  return out;
}

std::string Classification::describe() const {
  std::ostringstream s;
  switch (kind) {
    case Kind::BananaUnit: s << "BananaUnit"; break;
    case Kind::OddTripleBanana: s << "OddTripleBanana"; break;
    case Kind::Theta: s << "Theta"; break;
    case Kind::NotInFamilies: return "NotInFamilies";
  }
  s << '(';
  for (std::size_t i = 0; i < parameters.size(); ++i) s << (i ? "," : "") << parameters[i];
  s << ')';
  return s.str();
}

namespace {

// Lengths of the maximal degree-2 paths leaving x.
std::vector<int> branch_lengths(const Multigraph& g, Vertex x) {
  std::vector<int> out;
  for (Edge first : g.incident_edges(x)) {
    Edge e = first;
    Vertex cur = g.other_end(e, x);
    int len = 1;
    while (g.degree(cur) == 2 && cur != x) {
      auto inc = g.incident_edges(cur);
      e = inc[0] == e ? inc[1] : inc[0];
      cur = g.other_end(e, cur);
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Classification classify_weierstrass_free(const Multigraph& g) {
  if (!bridges(g).empty()) throw HypothesisError("graph has a bridge");
  if (!is_hyperelliptic(g)) throw HypothesisError("graph is not hyperelliptic");
  using Kind = Classification::Kind;
  const int n = g.vertex_count(), m = g.edge_count();
  if (n == 2) return {Kind::BananaUnit, {m}};

  std::vector<Vertex> branch;
  bool others_two = true;
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) == 3)
      branch.push_back(x);
    else if (g.degree(x) != 2)
      others_two = false;
  }
  if (branch.size() == 2 && others_two) {
    auto lengths = branch_lengths(g, branch[0]);
    bool odd = std::all_of(lengths.begin(), lengths.end(), [](int l) { return l % 2 == 1; });
    if (lengths.size() == 3 && odd && are_isomorphic(g, banana(lengths)))
      return {Kind::OddTripleBanana, lengths};
  }
  if (n % 2 == 0 && n >= 4) {
    int l = n / 2 - 1;
    if (m == 2 * l + 4 && are_isomorphic(g, theta(l))) return {Kind::Theta, {l}};
  }
  return {Kind::NotInFamilies, {}};
}

bool subdivision_invariance_check(const Multigraph& g, int k) {
  bool before = is_hyperelliptic(contract_bridges(g).graph).has_value();
  bool after = is_hyperelliptic(contract_bridges(subdivide(g, k)).graph).has_value();
  return before == after;
}

bool bridge_equivalence_check(const Multigraph& g, const Divisor& d) {
  auto rho = bridge_contraction_morphism(g);
  Divisor pushed = push_divisor(rho, d);
  if (rank(g, d) != rank(rho.target, pushed)) return false;
  bool zero_here = is_equivalent(g, d, Divisor(g.vertex_count()));
  bool zero_there = is_equivalent(rho.target, pushed, Divisor(rho.target.vertex_count()));
  return zero_here == zero_there;
}

}  // namespace hgraph
