#pragma once

#include <cstddef>
#include <vector>

#include "hgraph/divisor.hpp"
#include "hgraph/linalg.hpp"

namespace hgraph {

/// Laplacian with the row and column of vertex 0 removed.
Matrix<BigInt> reduced_laplacian(const Multigraph& g);

BigInt spanning_tree_count(const Multigraph& g);

struct JacobianStructure {
  /// All |V|-1 invariant factors d1 | d2 | ..., ones included.
  std::vector<BigInt> invariant_factors;
  BigInt order;

  /// Factors greater than one.
  std::vector<BigInt> nontrivial_factors() const;
};

JacobianStructure jacobian_structure(const Multigraph& g);

/// An element of Pic(G), stored as its reduced representative at vertex 0.
struct DivisorClass {
  Divisor representative;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass class_of(const Multigraph& g, const Divisor& d);
DivisorClass class_sum(const Multigraph& g, const DivisorClass& a, const DivisorClass& b);
DivisorClass class_negate(const Multigraph& g, const DivisorClass& a);
bool is_zero_class(const DivisorClass& a);
/// Smallest n >= 1 with n * a = 0, for a degree-zero class.
BigInt class_order(const Multigraph& g, const DivisorClass& a);

/// S_{x0}(x) = [(x) - (x0)].
DivisorClass abel_jacobi(const Multigraph& g, Vertex x0, Vertex x);
/// S^{(k)}_{x0}(E) = [E - deg(E) (x0)] for effective E.
DivisorClass symmetric_power(const Multigraph& g, Vertex x0, const Divisor& e);

inline constexpr std::size_t kDefaultClassBound = 5000;

/// Every element of Jac(G), by closure under the generators S_0(x).
/// Throws BudgetExceeded when the group exceeds `bound`.
std::vector<DivisorClass> jacobian_elements(const Multigraph& g,
                                            std::size_t bound = kDefaultClassBound);

/// Injectivity of S^{(k)} on Div_+^k by exhaustive comparison.  |V| <= 12.
bool sk_injectivity(const Multigraph& g, int k);

}  // namespace hgraph
