#include "hgraph/linalg.hpp"

#include <algorithm>
#include <utility>

namespace hgraph {

BigInt determinant(Matrix<BigInt> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> smith_diagonal(Matrix<BigInt> a) {
  const int n = static_cast<int>(a.size());
  for (int t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      std::swap(a[t], a[pi]);
      for (int i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (int i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
  }
  std::vector<BigInt> d(n);
  for (int i = 0; i < n; ++i) d[i] = abs(a[i][i]);
  // Nonzero entries already form a divisor chain; zeros go last.
  std::stable_partition(d.begin(), d.end(), [](const BigInt& x) { return x != 0; });
  return d;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Matrix<Rational>& a, int columns) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  int r = 0;
  for (int c = 0; c < columns && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix<Rational> a) {
  if (a.empty()) return 0;
  return static_cast<int>(row_reduce(a, static_cast<int>(a[0].size())).size());
}

std::optional<std::vector<Rational>> solve(Matrix<Rational> a, std::vector<Rational> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a, cols);
  for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a) {
  const int n = static_cast<int>(a.size());
  Matrix<Rational> aug(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  if (static_cast<int>(row_reduce(aug, n).size()) < n) return std::nullopt;
  Matrix<Rational> out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

Rational determinant(Matrix<Rational> a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

Matrix<Rational> multiply(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix<Rational> out(n, std::vector<Rational>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Matrix<Rational> identity_matrix(int n) {
  Matrix<Rational> out(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

std::vector<std::vector<int>> gf2_kernel(Matrix<int> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (auto& row : a)
    for (auto& x : row) x = ((x % 2) + 2) % 2;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = 0; i < rows; ++i)
      if (i != r && a[i][c])
        for (int j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hgraph
