#include "pgnlab/exterior.hpp"

#include <algorithm>
#include <stdexcept>

#include "pgnlab/linalg.hpp"

namespace pgnlab {

long binom(int d, int k) {
  if (k < 0 || k > d) return 0;
  k = std::min(k, d - k);
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (d - k + i) / i;
  return r;
}

SubsetIndex subset_lex(int d, int k, long rank) {
  if (rank < 1 || rank > binom(d, k))
    throw std::out_of_range("subset rank out of range");
  SubsetIndex s;
  s.d = d;
  s.k = k;
  s.rank = rank;
  long rem = rank - 1;
  int next = 1;
  for (int slot = 0; slot < k; ++slot) {
    for (int v = next; v <= d; ++v) {
      long block = binom(d - v, k - slot - 1);
      if (rem < block) { s.members.push_back(v); next = v + 1; break; }
      rem -= block;
    }
  }
  return s;
}

long rank_of(int d, const std::vector<int>& members) {
  const int k = static_cast<int>(members.size());
  for (int i = 0; i < k; ++i) {
    if (members[i] < 1 || members[i] > d) throw std::out_of_range("member out of range");
    if (i > 0 && members[i] <= members[i - 1])
      throw std::invalid_argument("members must be strictly increasing");
  }
  long rank = 1;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < members[i]; ++v) rank += binom(d - v, k - i - 1);
    prev = members[i];
  }
  return rank;
}

int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b) {
  long inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Multivector::Multivector(int d_, int p_) : d(d_), p(p_) {
  if (p < 0 || p > d) throw std::invalid_argument("grade out of range");
  coords = RatVector::Zero(binom(d, p));
}

Multivector Multivector::basis_vector(int d, int i) {
  return basis(d, {i});
}

Multivector Multivector::basis(int d, const std::vector<int>& members) {
  Multivector m(d, static_cast<int>(members.size()));
  m.coords(rank_of(d, members) - 1) = 1;
  return m;
}

Multivector Multivector::from_vector(const RatVector& v) {
  Multivector m(static_cast<int>(v.size()), 1);
  m.coords = v;
  return m;
}

Rat& Multivector::at(const std::vector<int>& members) {
  return coords(rank_of(d, members) - 1);
}

const Rat& Multivector::at(const std::vector<int>& members) const {
  return coords(rank_of(d, members) - 1);
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  if (a.d != b.d || a.p != b.p) throw std::invalid_argument("grade mismatch");
  Multivector r(a.d, a.p);
  r.coords = a.coords + b.coords;
  return r;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  if (a.d != b.d || a.p != b.p) throw std::invalid_argument("grade mismatch");
  Multivector r(a.d, a.p);
  r.coords = a.coords - b.coords;
  return r;
}

Multivector operator*(const Rat& c, const Multivector& a) {
  Multivector r(a.d, a.p);
  r.coords = c * a.coords;
  return r;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.d != b.d) throw std::invalid_argument("dimension mismatch");
  const int d = a.d;
  if (a.p + b.p > d) throw std::invalid_argument("grade overflow");
  Multivector r(d, a.p + b.p);

  const long ra = binom(d, a.p), rb = binom(d, b.p);
  for (long i = 0; i < ra; ++i) {
    if (a.coords(i) == 0) continue;
    auto sa = subset_lex(d, a.p, i + 1);
    for (long j = 0; j < rb; ++j) {
      if (b.coords(j) == 0) continue;
      auto sb = subset_lex(d, b.p, j + 1);
      // disjointness; repeated index kills the term
      std::vector<int> merged;
      merged.reserve(sa.members.size() + sb.members.size());
      std::merge(sa.members.begin(), sa.members.end(), sb.members.begin(),
                 sb.members.end(), std::back_inserter(merged));
      bool repeat = false;
      for (size_t t = 1; t < merged.size(); ++t)
        if (merged[t] == merged[t - 1]) { repeat = true; break; }
      if (repeat) continue;
      int sign = shuffle_sign(sa.members, sb.members);
      r.at(merged) += Rat(sign) * a.coords(i) * b.coords(j);
    }
  }
  return r;
}

Multivector hodge_star(const Multivector& a) {
  const int d = a.d;
  Multivector r(d, d - a.p);
  const long ra = binom(d, a.p);
  for (long i = 0; i < ra; ++i) {
    if (a.coords(i) == 0) continue;
    auto s = subset_lex(d, a.p, i + 1);
    std::vector<int> comp;
    comp.reserve(d - a.p);
    size_t idx = 0;
    for (int v = 1; v <= d; ++v) {
      if (idx < s.members.size() && s.members[idx] == v) { ++idx; continue; }
      comp.push_back(v);
    }
    // E_S ^ (sign E_comp) = E_{1..d}
    int sign = shuffle_sign(s.members, comp);
    r.at(comp) += Rat(sign) * a.coords(i);
  }
  return r;
}

RatMatrix compound_matrix(const RatMatrix& m, int p) {
  if (m.rows() != m.cols()) throw std::invalid_argument("compound of non-square matrix");
  const int d = static_cast<int>(m.rows());
  if (p < 0 || p > d) throw std::invalid_argument("compound grade out of range");
  const long r = binom(d, p);
  RatMatrix c(r, r);
  for (long i = 0; i < r; ++i) {
    auto rows = subset_lex(d, p, i + 1);
    for (long j = 0; j < r; ++j) {
      auto cols = subset_lex(d, p, j + 1);
      RatMatrix minor(p, p);
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          minor(a, b) = m(rows.members[a] - 1, cols.members[b] - 1);
      c(i, j) = determinant(minor);
    }
  }
  return c;
}

CompoundProblem compound_problem(const ProblemContext& ctx, int p) {
  if (p < 1 || p > ctx.dims.d - 1)
    throw std::invalid_argument("compound grade must be in 1..d-1");
  CompoundProblem cp;
  cp.p = p;
  cp.r = static_cast<int>(binom(ctx.dims.d, p));
  cp.basis = compound_matrix(ctx.lattice_basis, p);
  return cp;
}

RatVector compound_weights(const RatVector& weights, int p) {
  const int d = static_cast<int>(weights.size());
  const long r = binom(d, p);
  RatVector hatted(r);
  for (long j = 0; j < r; ++j) {
    auto s = subset_lex(d, p, j + 1);
    Rat prod = 1;
    for (int i : s.members) prod *= weights(i - 1);
    hatted(j) = prod;
  }
  return hatted;
}

}  // namespace pgnlab
