#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hgraph/graph.hpp"

namespace hgraph {

using Chip = std::int64_t;

/// Integer combination of vertices, one coefficient per vertex.
struct Divisor {
  std::vector<Chip> coeffs;

  Divisor() = default;
  explicit Divisor(int vertex_count) : coeffs(vertex_count, 0) {}
  explicit Divisor(std::vector<Chip> c) : coeffs(std::move(c)) {}

  int size() const { return static_cast<int>(coeffs.size()); }
  Chip& operator[](Vertex v) { return coeffs[v]; }
  Chip operator[](Vertex v) const { return coeffs[v]; }

  Chip degree() const;
  bool is_effective() const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(Divisor a);
  friend Divisor operator*(Chip k, Divisor a);
  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;
};

/// The divisor (x) on a graph with n vertices.
Divisor point(int vertex_count, Vertex x);

using VertexFunction = std::vector<Chip>;

/// Laplacian: div(f)(x) = sum over edges xy of f(x) - f(y).
Divisor principal(const Multigraph& g, const VertexFunction& f);
/// Indicator function of a vertex set.
VertexFunction indicator(int vertex_count, const std::vector<Vertex>& set);

Divisor canonical_divisor(const Multigraph& g);

/// Random divisor of the given degree: coefficients start uniform in
/// [-spread, spread] and single chips are then added or removed at random
/// vertices until the degree matches.
Divisor sample_divisor(int vertex_count, Chip degree, std::mt19937_64& rng, int spread = 2);

struct ReducedDivisor {
  Vertex base = 0;
  Divisor divisor;
  friend bool operator==(const ReducedDivisor&, const ReducedDivisor&) = default;
};

/// The q-reduced divisor equivalent to D.
ReducedDivisor reduce(const Multigraph& g, const Divisor& d, Vertex q);
/// Nonnegative away from q and no nonempty A in V \ {q} can fire.
bool is_reduced(const Multigraph& g, const Divisor& d, Vertex q);

bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b);
bool has_effective_rep(const Multigraph& g, const Divisor& d);

/// r(D).  Uses r(D) = deg(D) - g once deg(D) >= 2g - 1.
int rank(const Multigraph& g, const Divisor& d);
/// r(D) straight from the definition, no degree shortcut.
int rank_by_definition(const Multigraph& g, const Divisor& d);
/// r(D) >= k, stopping at the first witness of failure.
bool rank_at_least(const Multigraph& g, const Divisor& d, int k);

/// Calls visit(E) for each effective divisor of degree k, in colexicographic
/// order of the sorted vertex multiset.  Stops early when visit returns false.
template <class Visit>
bool for_each_effective(int vertex_count, int k, Visit&& visit);

/// r(D) - r(K - D) - (deg D + 1 - g), both ranks by definition.
Chip riemann_roch_residual(const Multigraph& g, const Divisor& d);

enum class CliffordResult { Holds, Fails, NotApplicable };
CliffordResult clifford_check(const Multigraph& g, const Divisor& d);

/// nu(x) = #{edges xy with y before x} - 1.  ordering[i] is the i-th vertex.
Divisor order_divisor(const Multigraph& g, const std::vector<Vertex>& ordering);
/// Distinct order divisors over all |V|! orderings.  |V| <= 8.
std::vector<Divisor> order_divisors(const Multigraph& g);
/// Exactly one of r(D) >= 0 and r(nu - D) >= 0 for some ordering.
bool dichotomy_check(const Multigraph& g, const Divisor& d);
/// Same, reusing a precomputed order_divisors(g).
bool dichotomy_check(const Multigraph& g, const Divisor& d, const std::vector<Divisor>& nus);

// ---------------------------------------------------------------------------

template <class Visit>
bool for_each_effective(int vertex_count, int k, Visit&& visit) {
  // support[i] is the i-th point; kept nondecreasing and advanced colex-first.
  if (k < 0) return true;
  std::vector<Vertex> support(k, 0);
  Divisor e(vertex_count);
  if (k > 0) e[0] = k;
  while (true) {
    if (!visit(static_cast<const Divisor&>(e))) return false;
    int i = 0;
    // Colex successor: bump the first position that can grow.
    while (i < k && (i + 1 < k ? support[i] == support[i + 1] : support[i] == vertex_count - 1)) ++i;
    if (i == k) return true;
    --e[support[i]];
    ++support[i];
    ++e[support[i]];
    for (int j = 0; j < i; ++j) {
      --e[support[j]];
      support[j] = 0;
      ++e[0];
    }
  }
}

}  // namespace hgraph
