#include "nilcox/linalg.hpp"

#include <stdexcept>

namespace nilcox {

void normalize_row(CycloRow& row) {
  mpz_class L(1);
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    mpz_class d = x.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
    L = L / g * d;
  }
  mpz_class G(0);
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    mpz_class c = x.content() * (L / x.denominator());
    mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), c.get_mpz_t());
    if (G == 1 && L == 1) return;
  }
  if (G == 0) return;  // zero row
  mpq_class scale(L, G);
  scale.canonicalize();
  if (scale == 1) return;
  for (auto& x : row) x = x.mul_rational(scale);
}

long rank_fraction_free(CycloMatrix rows) {
  // Bareiss: cross-multiply then divide by the previous pivot; the division
  // is exact over Z[xi] by the Sylvester minor identity, which keeps entry
  // growth polynomial.
  size_t nrows = rows.size();
  if (nrows == 0) return 0;
  size_t ncols = rows[0].size();
  for (auto& r : rows) normalize_row(r);
  const CycloField* F = nullptr;
  for (const auto& r : rows)
    for (const auto& x : r)
      if (x.field()) F = x.field();
  if (!F) return 0;
  Cyclotomic prev_inv = F->one();
  size_t top = 0;
  for (size_t col = 0; col < ncols && top < nrows; ++col) {
    size_t piv = top;
    while (piv < nrows && rows[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[top], rows[piv]);
    const Cyclotomic p = rows[top][col];
    for (size_t r = top + 1; r < nrows; ++r) {
      const Cyclotomic a = rows[r][col];
      if (a.is_zero()) {
        for (size_t c = col; c < ncols; ++c)
          if (!rows[r][c].is_zero()) rows[r][c] = rows[r][c] * p * prev_inv;
      } else {
        for (size_t c = col; c < ncols; ++c)
          rows[r][c] = (rows[r][c] * p - rows[top][c] * a) * prev_inv;
      }
    }
    prev_inv = p.inv();
    ++top;
  }
  return (long)top;
}

CycloMatrix left_kernel(const CycloMatrix& rows) {
  size_t nrows = rows.size();
  if (nrows == 0) return {};
  size_t ncols = rows[0].size();
  // Augment with the identity and eliminate the data columns.
  CycloMatrix M = rows;
  const CycloField* F = nullptr;
  for (const auto& r : rows)
    for (const auto& x : r)
      if (x.field()) F = x.field();
  Cyclotomic one = F ? F->one() : Cyclotomic();
  for (size_t r = 0; r < nrows; ++r) {
    M[r].resize(ncols + nrows);
    if (F) M[r][ncols + r] = one;
  }
  if (!F) {
    // all-zero matrix: kernel is everything, but without a field we cannot
    // write coefficients; treat as no field meaning truly empty data
    throw std::invalid_argument("left_kernel needs at least one nonzero entry");
  }
  size_t top = 0;
  for (size_t col = 0; col < ncols && top < nrows; ++col) {
    size_t piv = top;
    while (piv < nrows && M[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(M[top], M[piv]);
    Cyclotomic pinv = M[top][col].inv();
    for (size_t c = col; c < ncols + nrows; ++c)
      if (!M[top][c].is_zero()) M[top][c] = M[top][c] * pinv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == top || M[r][col].is_zero()) continue;
      Cyclotomic a = M[r][col];
      for (size_t c = col; c < ncols + nrows; ++c)
        if (!M[top][c].is_zero()) M[r][c] = M[r][c] - M[top][c] * a;
    }
    ++top;
  }
  CycloMatrix kernel;
  for (size_t r = top; r < nrows; ++r) {
    CycloRow v(M[r].begin() + ncols, M[r].end());
    normalize_row(v);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<int> rref_in_place(CycloMatrix& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t nrows = rows.size();
  size_t ncols = rows[0].size();
  size_t top = 0;
  for (size_t col = 0; col < ncols && top < nrows; ++col) {
    size_t piv = top;
    while (piv < nrows && rows[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[top], rows[piv]);
    Cyclotomic pinv = rows[top][col].inv();
    for (size_t c = col; c < ncols; ++c)
      if (!rows[top][c].is_zero()) rows[top][c] = rows[top][c] * pinv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == top || rows[r][col].is_zero()) continue;
      Cyclotomic a = rows[r][col];
      for (size_t c = col; c < ncols; ++c)
        if (!rows[top][c].is_zero()) rows[r][c] = rows[r][c] - rows[top][c] * a;
    }
    pivots.push_back((int)col);
    ++top;
  }
  rows.resize(top);
  return pivots;
}

Cyclotomic determinant(CycloMatrix rows) {
  size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  if (rows[0].size() != n) throw std::invalid_argument("determinant needs a square matrix");
  const CycloField* F = nullptr;
  for (const auto& r : rows)
    for (const auto& x : r)
      if (x.field()) F = x.field();
  if (!F) return Cyclotomic();
  Cyclotomic det = F->one();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && rows[piv][col].is_zero()) ++piv;
    if (piv == n) return Cyclotomic();
    if (piv != col) {
      std::swap(rows[col], rows[piv]);
      det = -det;
    }
    det *= rows[col][col];
    Cyclotomic pinv = rows[col][col].inv();
    for (size_t r = col + 1; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      Cyclotomic a = rows[r][col] * pinv;
      for (size_t c = col; c < n; ++c)
        if (!rows[col][c].is_zero()) rows[r][c] = rows[r][c] - rows[col][c] * a;
    }
  }
  return det;
}

bool in_row_span(const CycloMatrix& rows, const CycloRow& v) {
  bool vzero = true;
  for (const auto& x : v)
    if (!x.is_zero()) vzero = false;
  if (vzero) return true;
  CycloMatrix M = rows;
  long r0 = rank_fraction_free(M);
  M.push_back(v);
  return rank_fraction_free(M) == r0;
}

}  // namespace nilcox
