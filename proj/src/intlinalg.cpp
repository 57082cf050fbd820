#include "burnside/intlinalg.hpp"

#include <stdexcept>

namespace burnside {

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
  size_t m = a.size();
  size_t k = m ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != k) throw std::invalid_argument("ragged matrix");

  // Work on columns of A while mirroring every operation on T (identity at
  // the start), so A_work = A * T with T unimodular throughout.
  std::vector<std::vector<Int>> acol(k, std::vector<Int>(m));
  std::vector<std::vector<Int>> tcol(k, std::vector<Int>(k, 0));
  for (size_t j = 0; j < k; ++j) {
    tcol[j][j] = 1;
    for (size_t i = 0; i < m; ++i) acol[j][i] = a[i][j];
  }

  size_t pinned = 0;
  for (size_t r = 0; r < m && pinned < k; ++r) {
    // Combine active columns pairwise until row r has one nonzero left.
    for (;;) {
      size_t j1 = k;
      for (size_t j = pinned; j < k; ++j)
        if (acol[j][r] != 0) {
          j1 = j;
          break;
        }
      if (j1 == k) break;
      size_t j2 = k;
      for (size_t j = j1 + 1; j < k; ++j)
        if (acol[j][r] != 0) {
          j2 = j;
          break;
        }
      if (j2 == k) {
        // Single nonzero: pin it at position `pinned`.
        std::swap(acol[j1], acol[pinned]);
        std::swap(tcol[j1], tcol[pinned]);
        ++pinned;
        break;
      }
      Int x = acol[j1][r], y = acol[j2][r];
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
                 y.get_mpz_t());
      Int xg = x / g, yg = y / g;
      // [ s  -yg ]
      // [ t   xg ]  has determinant s*xg + t*yg = 1, so the pair of column
      // operations below is unimodular.
      for (size_t i = 0; i < m; ++i) {
        Int c1 = s * acol[j1][i] + t * acol[j2][i];
        Int c2 = -yg * acol[j1][i] + xg * acol[j2][i];
        acol[j1][i] = c1;
        acol[j2][i] = c2;
      }
      for (size_t i = 0; i < k; ++i) {
        Int c1 = s * tcol[j1][i] + t * tcol[j2][i];
        Int c2 = -yg * tcol[j1][i] + xg * tcol[j2][i];
        tcol[j1][i] = c1;
        tcol[j2][i] = c2;
      }
    }
  }

  std::vector<std::vector<Int>> basis;
  for (size_t j = pinned; j < k; ++j) {
    bool zero = true;
    for (size_t i = 0; i < m; ++i)
      if (acol[j][i] != 0) zero = false;
    if (!zero) throw std::logic_error("integer_kernel: reduction failed");
    basis.push_back(tcol[j]);
  }
  return basis;
}

std::optional<std::vector<Rat>> rational_solve(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
  size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("rhs has wrong size");
  size_t k = m ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != k) throw std::invalid_argument("ragged matrix");

  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = a[i][j];
    aug[i][k] = b[i];
  }

  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < k && row < m; ++col) {
    size_t p = row;
    while (p < m && aug[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[row]);
    Rat inv = Rat(1) / aug[row][col];
    for (size_t j = col; j <= k; ++j) aug[row][j] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (aug[i][k] != 0) return std::nullopt;

  std::vector<Rat> x(k, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][k];
  return x;
}

}  // namespace burnside
