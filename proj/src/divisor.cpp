#include "hgraph/divisor.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace hgraph {

Chip Divisor::degree() const { return std::accumulate(coeffs.begin(), coeffs.end(), Chip{0}); }

bool Divisor::is_effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Chip c) { return c >= 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Divisor operator-(Divisor a) {
  for (auto& c : a.coeffs) c = -c;
  return a;
}

Divisor operator*(Chip k, Divisor a) {
  for (auto& c : a.coeffs) c *= k;
  return a;
}

Divisor point(int vertex_count, Vertex x) {
  Divisor d(vertex_count);
  d[x] = 1;
  return d;
}

Divisor principal(const Multigraph& g, const VertexFunction& f) {
  Divisor d(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    d[u] += f[u] - f[v];
    d[v] += f[v] - f[u];
  }
  return d;
}

VertexFunction indicator(int vertex_count, const std::vector<Vertex>& set) {
  VertexFunction f(vertex_count, 0);
  for (Vertex v : set) f[v] = 1;
  return f;
}

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) k[x] = g.degree(x) - 2;
  return k;
}

Divisor sample_divisor(int vertex_count, Chip degree, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<Chip> coeff(-spread, spread);
  std::uniform_int_distribution<Vertex> vertex(0, vertex_count - 1);
  Divisor d(vertex_count);
  for (auto& c : d.coeffs) c = coeff(rng);
  for (Chip deg = d.degree(); deg != degree; deg += deg < degree ? 1 : -1) d[vertex(rng)] += deg < degree ? 1 : -1;
  return d;
}

namespace {

std::vector<int> bfs_distance(const Multigraph& g, Vertex q) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[q] = 0;
  queue.push(q);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Edge e : g.incident_edges(x)) {
      Vertex y = g.other_end(e, x);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

// Vertices left unburnt by Dhar's burning from q.  Assumes d >= 0 off q.
std::vector<bool> unburnt_set(const Multigraph& g, const Divisor& d, Vertex q) {
  const int n = g.vertex_count();
  std::vector<bool> burnt(n, false);
  std::vector<Chip> fire(n, 0);
  std::vector<Vertex> stack{q};
  burnt[q] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Edge e : g.incident_edges(x)) {
      Vertex y = g.other_end(e, x);
      if (burnt[y]) continue;
      if (++fire[y] > d[y]) {
        burnt[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<bool> unburnt(n);
  for (int i = 0; i < n; ++i) unburnt[i] = !burnt[i];
  return unburnt;
}

}  // namespace

ReducedDivisor reduce(const Multigraph& g, const Divisor& d, Vertex q) {
  const int n = g.vertex_count();
  Divisor cur = d;

  // Phase 1: sweep distance levels inward so every x != q is nonnegative.
  auto dist = bfs_distance(g, q);
  int max_dist = *std::max_element(dist.begin(), dist.end());
  for (int level = max_dist; level >= 1; --level) {
    Chip t = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (dist[x] != level || cur[x] >= 0) continue;
      Chip inward = 0;
      for (Edge e : g.incident_edges(x))
        if (dist[g.other_end(e, x)] == level - 1) ++inward;
      t = std::max(t, (-cur[x] + inward - 1) / inward);
    }
    if (t == 0) continue;
    // Add t * div(indicator of {dist >= level}).
    for (auto [u, v] : g.edges()) {
      bool a = dist[u] >= level, b = dist[v] >= level;
      if (a == b) continue;
      Vertex in = a ? u : v, out = a ? v : u;
      cur[in] += t;
      cur[out] -= t;
    }
  }

  // Phase 2: fire the unburnt set until everything burns.
  while (true) {
    auto unburnt = unburnt_set(g, cur, q);
    std::vector<Chip> outdeg(n, 0);
    bool any = false;
    for (Vertex x = 0; x < n; ++x) any = any || unburnt[x];
    if (!any) break;
    for (auto [u, v] : g.edges()) {
      if (unburnt[u] && !unburnt[v]) ++outdeg[u];
      if (unburnt[v] && !unburnt[u]) ++outdeg[v];
    }
    Chip t = -1;
    for (Vertex x = 0; x < n; ++x)
      if (unburnt[x] && outdeg[x] > 0) {
        Chip s = cur[x] / outdeg[x];
        t = t < 0 ? s : std::min(t, s);
      }
    for (auto [u, v] : g.edges()) {
      if (unburnt[u] == unburnt[v]) continue;
      Vertex in = unburnt[u] ? u : v, out = unburnt[u] ? v : u;
      cur[in] -= t;
      cur[out] += t;
    }
  }
  return {q, std::move(cur)};
}

bool is_reduced(const Multigraph& g, const Divisor& d, Vertex q) {
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (x != q && d[x] < 0) return false;
  auto unburnt = unburnt_set(g, d, q);
  return std::none_of(unburnt.begin(), unburnt.end(), [](bool b) { return b; });
}

bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  if (a.degree() != b.degree()) return false;
  return reduce(g, a, 0) == reduce(g, b, 0);
}

bool has_effective_rep(const Multigraph& g, const Divisor& d) {
  if (d.is_effective()) return true;
  if (d.degree() < 0) return false;
  return reduce(g, d, 0).divisor[0] >= 0;
}

namespace {

bool all_effective_after_removing(const Multigraph& g, const Divisor& d, int k) {
  return for_each_effective(g.vertex_count(), k,
                            [&](const Divisor& e) { return has_effective_rep(g, d - e); });
}

}  // namespace

int rank_by_definition(const Multigraph& g, const Divisor& d) {
  if (!has_effective_rep(g, d)) return -1;
  // The rank is a class function, so work from the reduced representative.
  Divisor base = reduce(g, d, 0).divisor;
  const Chip deg = d.degree();
  for (int k = 1; k <= deg; ++k)
    if (!all_effective_after_removing(g, base, k)) return k - 1;
  return static_cast<int>(deg);
}

int rank(const Multigraph& g, const Divisor& d) {
  const Chip deg = d.degree();
  if (deg < 0) return -1;
  if (deg >= 2 * genus(g) - 1) return static_cast<int>(deg - genus(g));
  return rank_by_definition(g, d);
}

bool rank_at_least(const Multigraph& g, const Divisor& d, int k) {
  if (k < 0) return true;
  const Chip deg = d.degree();
  if (deg < k) return false;
  if (deg >= 2 * genus(g) - 1) return deg - genus(g) >= k;
  if (!has_effective_rep(g, d)) return false;
  return all_effective_after_removing(g, reduce(g, d, 0).divisor, k);
}

Chip riemann_roch_residual(const Multigraph& g, const Divisor& d) {
  Divisor dual = canonical_divisor(g) - d;
  return rank_by_definition(g, d) - rank_by_definition(g, dual) - (d.degree() + 1 - genus(g));
}

CliffordResult clifford_check(const Multigraph& g, const Divisor& d) {
  if (!has_effective_rep(g, d) || !has_effective_rep(g, canonical_divisor(g) - d))
    return CliffordResult::NotApplicable;
  return 2 * rank(g, d) <= d.degree() ? CliffordResult::Holds : CliffordResult::Fails;
}

Divisor order_divisor(const Multigraph& g, const std::vector<Vertex>& ordering) {
  const int n = g.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[ordering[i]] = i;
  Divisor nu(n);
  for (Vertex x = 0; x < n; ++x) nu[x] = -1;
  for (auto [u, v] : g.edges()) {
    if (position[u] < position[v])
      ++nu[v];
    else
      ++nu[u];
  }
  return nu;
}

std::vector<Divisor> order_divisors(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw BudgetExceeded("ordering enumeration limited to 8 vertices");
  std::vector<Vertex> ordering(n);
  std::iota(ordering.begin(), ordering.end(), 0);
  std::set<Divisor> seen;
  do {
    seen.insert(order_divisor(g, ordering));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return {seen.begin(), seen.end()};
}

bool dichotomy_check(const Multigraph& g, const Divisor& d, const std::vector<Divisor>& nus) {
  bool first = has_effective_rep(g, d);
  bool second = std::any_of(nus.begin(), nus.end(),
                            [&](const Divisor& nu) { return has_effective_rep(g, nu - d); });
  return first != second;
}

bool dichotomy_check(const Multigraph& g, const Divisor& d) {
  return dichotomy_check(g, d, order_divisors(g));
}

}  // namespace hgraph
