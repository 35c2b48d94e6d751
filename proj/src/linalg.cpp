#include "pgnlab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pgnlab {

RatMatrix inverse(const RatMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::domain_error("inverse of non-square matrix");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col) { a.row(piv).swap(a.row(col)); inv.row(piv).swap(inv.row(col)); }
    Rat d = a(col, col);
    for (int c = 0; c < n; ++c) { a(col, c) /= d; inv(col, c) /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rat f = a(r, col);
      for (int c = 0; c < n; ++c) { a(r, c) -= f * a(col, c); inv(r, c) -= f * inv(col, c); }
    }
  }
  return inv;
}

Rat determinant(const RatMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::domain_error("determinant of non-square matrix");
  RatMatrix a = m;
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) { a.row(piv).swap(a.row(col)); det = -det; }
    det *= a(col, col);
    Rat d = a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / d;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

int rank(const RatMatrix& m) {
  RatMatrix a = m;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rk) a.row(piv).swap(a.row(rk));
    Rat d = a(rk, col);
    for (int r = rk + 1; r < rows; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / d;
      for (int c = col; c < cols; ++c) a(r, c) -= f * a(col, c);
    }
    ++rk;
  }
  return rk;
}

IntMatrix identity_int(int d) {
  IntMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = (i == j) ? 1 : 0;
  return m;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

bool independent(const IntMatrix& m) {
  return rank(to_rat(m)) == m.cols();
}

namespace {

// Applies the unimodular 2-row transform sending (row a, row b) to
// (u*a + v*b, -(y/g)*a + (x/g)*b) where g = gcd(x, y) at the given column.
void gcd_rows(IntMatrix& a, IntMatrix& track, int r1, int r2, int col) {
  Int x = a(r1, col), y = a(r2, col);
  if (y == 0) return;
  if (x == 0) { a.row(r1).swap(a.row(r2)); track.row(r1).swap(track.row(r2)); return; }
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Int xs = x / g, ys = y / g;
  for (IntMatrix* mp : {&a, &track}) {
    IntMatrix& m = *mp;
    for (int c = 0; c < m.cols(); ++c) {
      Int t1 = u * m(r1, c) + v * m(r2, c);
      Int t2 = -ys * m(r1, c) + xs * m(r2, c);
      m(r1, c) = t1;
      m(r2, c) = t2;
    }
  }
}

}  // namespace

IntMatrix saturate_and_complete(const IntMatrix& w) {
  const int d = static_cast<int>(w.rows());
  const int q = static_cast<int>(w.cols());
  IntMatrix a = w;
  IntMatrix r = identity_int(d);  // row transform: r * w = [H; 0]
  int pivot_row = 0;
  for (int col = 0; col < q; ++col) {
    int nz = -1;
    for (int i = pivot_row; i < d; ++i)
      if (a(i, col) != 0) { nz = i; break; }
    if (nz < 0) throw std::domain_error("saturate_and_complete: rank-deficient input");
    if (nz != pivot_row) { a.row(nz).swap(a.row(pivot_row)); r.row(nz).swap(r.row(pivot_row)); }
    for (int i = pivot_row + 1; i < d; ++i)
      if (a(i, col) != 0) gcd_rows(a, r, pivot_row, i, col);
    ++pivot_row;
  }
  // z in Q-span(w)  <=>  (r z)_{q..d-1} = 0, so the first q columns of r^-1
  // generate the saturation.
  RatMatrix rinv = inverse(to_rat(r));
  IntMatrix c(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (rinv(i, j).get_den() != 1)
        throw std::logic_error("saturate_and_complete: non-integer inverse");
      c(i, j) = rinv(i, j).get_num();
    }
  return c;
}

}  // namespace pgnlab
