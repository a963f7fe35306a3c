#include "hgraph/jacobian.hpp"

#include <deque>
#include <set>

namespace hgraph {

Matrix<BigInt> reduced_laplacian(const Multigraph& g) {
  const int n = g.vertex_count() - 1;
  Matrix<BigInt> l(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : g.edges()) {
    if (u > 0) l[u - 1][u - 1] += 1;
    if (v > 0) l[v - 1][v - 1] += 1;
    if (u > 0 && v > 0) {
      l[u - 1][v - 1] -= 1;
      l[v - 1][u - 1] -= 1;
    }
  }
  return l;
}

BigInt spanning_tree_count(const Multigraph& g) { return determinant(reduced_laplacian(g)); }

std::vector<BigInt> JacobianStructure::nontrivial_factors() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors)
    if (d != 1) out.push_back(d);
  return out;
}

JacobianStructure jacobian_structure(const Multigraph& g) {
  JacobianStructure s;
  s.invariant_factors = smith_diagonal(reduced_laplacian(g));
  s.order = 1;
  for (const auto& d : s.invariant_factors) s.order *= d;
  return s;
}

DivisorClass class_of(const Multigraph& g, const Divisor& d) { return {reduce(g, d, 0).divisor}; }

DivisorClass class_sum(const Multigraph& g, const DivisorClass& a, const DivisorClass& b) {
  return class_of(g, a.representative + b.representative);
}

DivisorClass class_negate(const Multigraph& g, const DivisorClass& a) {
  return class_of(g, -a.representative);
}

bool is_zero_class(const DivisorClass& a) {
  for (Chip c : a.representative.coeffs)
    if (c != 0) return false;
  return true;
}

BigInt class_order(const Multigraph& g, const DivisorClass& a) {
  BigInt n = 1;
  DivisorClass acc = a;
  while (!is_zero_class(acc)) {
    acc = class_sum(g, acc, a);
    ++n;
  }
  return n;
}

DivisorClass abel_jacobi(const Multigraph& g, Vertex x0, Vertex x) {
  const int n = g.vertex_count();
  return class_of(g, point(n, x) - point(n, x0));
}

DivisorClass symmetric_power(const Multigraph& g, Vertex x0, const Divisor& e) {
  return class_of(g, e - e.degree() * point(g.vertex_count(), x0));
}

std::vector<DivisorClass> jacobian_elements(const Multigraph& g, std::size_t bound) {
  const int n = g.vertex_count();
  std::vector<DivisorClass> generators;
  for (Vertex x = 1; x < n; ++x) generators.push_back(abel_jacobi(g, 0, x));
  std::set<DivisorClass> seen;
  std::deque<DivisorClass> queue;
  DivisorClass zero{Divisor(n)};
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    DivisorClass c = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      DivisorClass next = class_sum(g, c, s);
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw BudgetExceeded("Jacobian has more than " + std::to_string(bound) + " elements");
        queue.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool sk_injectivity(const Multigraph& g, int k) {
  if (k < 1) throw GraphError("k must be at least 1");
  if (g.vertex_count() > 12) throw BudgetExceeded("S^(k) injectivity limited to 12 vertices");
  std::set<Divisor> images;
  // Equal degree, so classes of E themselves can be compared.
  return for_each_effective(g.vertex_count(), k, [&](const Divisor& e) {
    return images.insert(reduce(g, e, 0).divisor).second;
  });
}

}  // namespace hgraph
