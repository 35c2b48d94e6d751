#include "pgnlab/lll.hpp"

#include <stdexcept>
#include <vector>

#include "pgnlab/linalg.hpp"

namespace pgnlab {

namespace {

struct Gso {
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
  std::vector<Rat> norm2;            // |b*_i|^2
};

Gso compute_gso(const RatMatrix& b) {
  const int n = static_cast<int>(b.cols());
  Gso g;
  g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  g.norm2.assign(n, Rat(0));
  RatMatrix bstar = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      Rat dot = 0;
      for (int r = 0; r < b.rows(); ++r) dot += b(r, i) * bstar(r, j);
      g.mu[i][j] = dot / g.norm2[j];
      for (int r = 0; r < b.rows(); ++r) bstar(r, i) -= g.mu[i][j] * bstar(r, j);
    }
    Rat n2 = 0;
    for (int r = 0; r < b.rows(); ++r) n2 += bstar(r, i) * bstar(r, i);
    if (n2 == 0) throw std::domain_error("lll_reduce: dependent columns");
    g.norm2[i] = n2;
  }
  return g;
}

}  // namespace

LLLResult lll_reduce(const RatMatrix& basis, const Rat& delta) {
  const int n = static_cast<int>(basis.cols());
  LLLResult res;
  res.reduced = basis;
  res.transform = identity_int(n);
  if (n <= 1) return res;

  RatMatrix& b = res.reduced;
  IntMatrix& u = res.transform;
  Gso g = compute_gso(b);

  int k = 1;
  while (k < n) {
    // size-reduce column k
    for (int j = k - 1; j >= 0; --j) {
      Int r = round_nearest(g.mu[k][j]);
      if (r != 0) {
        Rat rq(r);
        for (int row = 0; row < b.rows(); ++row) b(row, k) -= rq * b(row, j);
        for (int row = 0; row < n; ++row) u(row, k) -= r * u(row, j);
        for (int i = 0; i < j; ++i) g.mu[k][i] -= rq * g.mu[j][i];
        g.mu[k][j] -= rq;
      }
    }
    // Lovasz condition
    Rat lhs = g.norm2[k];
    Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      b.col(k).swap(b.col(k - 1));
      u.col(k).swap(u.col(k - 1));
      g = compute_gso(b);
      k = std::max(k - 1, 1);
    }
  }
  return res;
}

}  // namespace pgnlab
