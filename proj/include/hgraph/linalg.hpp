#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free Gaussian elimination.  Empty matrix has determinant 1.
BigInt determinant(Matrix<BigInt> a);

/// Diagonal of the Smith normal form of a square integer matrix, with
/// nonnegative entries d1 | d2 | ... (zeros last).
std::vector<BigInt> smith_diagonal(Matrix<BigInt> a);

int rank(Matrix<Rational> a);
/// Some x with a x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(Matrix<Rational> a, std::vector<Rational> b);
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a);
Rational determinant(Matrix<Rational> a);

Matrix<Rational> multiply(const Matrix<Rational>& a, const Matrix<Rational>& b);
Matrix<Rational> identity_matrix(int n);

/// Basis of {x in GF(2)^n : a x = 0}, entries 0/1.
std::vector<std::vector<int>> gf2_kernel(Matrix<int> a);

}  // namespace hgraph
