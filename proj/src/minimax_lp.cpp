#include "pgnlab/minimax_lp.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace pgnlab {

namespace {

struct Interval {
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  bool empty = false;

  void clip_lo(const Rat& v) {
    if (!has_lo || v > lo) { lo = v; has_lo = true; }
    check();
  }
  void clip_hi(const Rat& v) {
    if (!has_hi || v < hi) { hi = v; has_hi = true; }
    check();
  }
  void check() {
    if (has_lo && has_hi && lo > hi) empty = true;
  }
  Rat clamp(const Rat& v) const {
    if (has_lo && v < lo) return lo;
    if (has_hi && v > hi) return hi;
    return v;
  }
};

// One free variable: exact convex piecewise-linear minimization over an
// interval cut out by the constraints.
LPResult solve_1d(const MinimaxLP& lp) {
  LPResult res;
  Interval iv;
  for (int r = 0; r < lp.con.rows(); ++r) {
    const Rat& a = lp.con(r, 0);
    const Rat& b = lp.con_off(r);
    const Rat& c = lp.cap(r);
    if (a == 0) {
      if (abs_rat(b) > c) return res;  // infeasible
      continue;
    }
    Rat x1 = (-c - b) / a, x2 = (c - b) / a;
    if (x1 > x2) std::swap(x1, x2);
    iv.clip_lo(x1);
    iv.clip_hi(x2);
    if (iv.empty) return res;
  }

  // Candidate minimizers of max_i |o_i + a_i x|: pairwise envelope
  // intersections plus the interval endpoints.
  std::vector<Rat> cands;
  const int ro = static_cast<int>(lp.obj.rows());
  for (int i = 0; i < ro; ++i) {
    for (int j = i; j < ro; ++j) {
      const Rat &ai = lp.obj(i, 0), &aj = lp.obj(j, 0);
      const Rat &oi = lp.obj_off(i), &oj = lp.obj_off(j);
      Rat dsame = ai - aj;
      if (dsame != 0) cands.push_back((oj - oi) / dsame);
      Rat dopp = ai + aj;
      if (dopp != 0) cands.push_back(-(oi + oj) / dopp);
    }
  }
  if (iv.has_lo) cands.push_back(iv.lo);
  if (iv.has_hi) cands.push_back(iv.hi);
  if (cands.empty()) cands.push_back(Rat(0));

  bool first = true;
  for (const Rat& raw : cands) {
    Rat x = iv.clamp(raw);
    Rat val = 0;
    for (int i = 0; i < ro; ++i) {
      Rat t = abs_rat(lp.obj_off(i) + lp.obj(i, 0) * x);
      if (t > val) val = t;
    }
    if (first || val < res.value) {
      res.value = val;
      res.x = RatVector::Constant(1, x);
      first = false;
    }
  }
  res.feasible = true;
  return res;
}

// Gaussian solve of a square system; nullopt when singular.
std::optional<RatVector> solve_square(RatMatrix a, RatVector b) {
  const int n = static_cast<int>(a.rows());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != col) { a.row(piv).swap(a.row(col)); std::swap(b(piv), b(col)); }
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b(r) -= f * b(col);
    }
  }
  RatVector x(n);
  for (int r = n - 1; r >= 0; --r) {
    Rat s = b(r);
    for (int c = r + 1; c < n; ++c) s -= a(r, c) * x(c);
    x(r) = s / a(r, r);
  }
  return x;
}

// General case: vertex enumeration over the (x, beta) polyhedron
//   +-(obj_off + obj x) <= beta,  +-(con_off + con x) <= cap.
// The polyhedron is pointed once directions null for every row are projected
// out, beta >= 0 bounds the objective below, so the optimum sits on a vertex.
LPResult solve_vertex(const MinimaxLP& lp) {
  const int k = static_cast<int>(lp.obj.cols());
  const int ro = static_cast<int>(lp.obj.rows());
  const int rc = static_cast<int>(lp.con.rows());

  // rows: g . (x, beta) <= h
  const int nrows = 2 * (ro + rc);
  RatMatrix g = RatMatrix::Zero(nrows, k + 1);
  RatVector h(nrows);
  int at = 0;
  for (int i = 0; i < ro; ++i) {
    for (int c = 0; c < k; ++c) g(at, c) = lp.obj(i, c);
    g(at, k) = -1; h(at) = -lp.obj_off(i); ++at;
    for (int c = 0; c < k; ++c) g(at, c) = -lp.obj(i, c);
    g(at, k) = -1; h(at) = lp.obj_off(i); ++at;
  }
  for (int r = 0; r < rc; ++r) {
    for (int c = 0; c < k; ++c) g(at, c) = lp.con(r, c);
    h(at) = lp.cap(r) - lp.con_off(r); ++at;
    for (int c = 0; c < k; ++c) g(at, c) = -lp.con(r, c);
    h(at) = lp.cap(r) + lp.con_off(r); ++at;
  }

  // Project out x-directions that no row sees (lineality space), otherwise no
  // vertex exists. Kept columns are the pivot columns of the stacked rows.
  std::vector<int> keep;
  {
    RatMatrix stacked(ro + rc, k);
    for (int i = 0; i < ro; ++i) stacked.row(i) = lp.obj.row(i);
    for (int r = 0; r < rc; ++r) stacked.row(ro + r) = lp.con.row(r);
    RatMatrix a = stacked;
    int rk = 0;
    for (int col = 0; col < k && rk < a.rows(); ++col) {
      int piv = -1;
      for (int r = rk; r < a.rows(); ++r)
        if (a(r, col) != 0) { piv = r; break; }
      if (piv < 0) continue;
      a.row(piv).swap(a.row(rk));
      for (int r = rk + 1; r < a.rows(); ++r) {
        if (a(r, col) == 0) continue;
        Rat f = a(r, col) / a(rk, col);
        for (int c = col; c < k; ++c) a(r, c) -= f * a(rk, c);
      }
      keep.push_back(col);
      ++rk;
    }
  }
  const int kk = static_cast<int>(keep.size());
  RatMatrix gr(nrows, kk + 1);
  for (int r = 0; r < nrows; ++r) {
    for (int c = 0; c < kk; ++c) gr(r, c) = g(r, keep[c]);
    gr(r, kk) = g(r, k);
  }

  LPResult res;
  const int nb = kk + 1;  // basis size
  std::vector<int> idx(nb);
  for (int i = 0; i < nb; ++i) idx[i] = i;
  bool have = false;
  RatVector best_x;
  Rat best_val;

  auto consider = [&](const std::vector<int>& rows_sel) {
    RatMatrix a(nb, nb);
    RatVector b(nb);
    for (int i = 0; i < nb; ++i) {
      for (int c = 0; c < nb; ++c) a(i, c) = gr(rows_sel[i], c);
      b(i) = h(rows_sel[i]);
    }
    auto sol = solve_square(a, b);
    if (!sol) return;
    // feasibility of all rows
    for (int r = 0; r < nrows; ++r) {
      Rat lhs = 0;
      for (int c = 0; c < nb; ++c) lhs += gr(r, c) * (*sol)(c);
      if (lhs > h(r)) return;
    }
    Rat beta = (*sol)(kk);
    if (!have || beta < best_val) {
      have = true;
      best_val = beta;
      best_x = *sol;
    }
  };

  // all (kk+1)-subsets of rows
  std::vector<int> sel(nb);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == nb) { consider(sel); return; }
    for (int r = start; r <= nrows - (nb - depth); ++r) {
      sel[depth] = r;
      self(self, r + 1, depth + 1);
    }
  };
  if (nb <= nrows) rec(rec, 0, 0);

  if (!have) return res;  // empty polyhedron
  res.feasible = true;
  res.value = best_val;
  res.x = RatVector::Zero(k);
  for (int c = 0; c < kk; ++c) res.x(keep[c]) = best_x(c);
  return res;
}

}  // namespace

LPResult solve_minimax(const MinimaxLP& lp) {
  const int k = static_cast<int>(lp.obj.cols());
  if (lp.obj.rows() < 1) throw std::invalid_argument("minimax LP needs objective rows");

  if (k == 0) {
    LPResult res;
    for (int r = 0; r < lp.con.rows(); ++r)
      if (abs_rat(lp.con_off(r)) > lp.cap(r)) return res;
    res.feasible = true;
    res.value = 0;
    for (int i = 0; i < lp.obj.rows(); ++i) {
      Rat t = abs_rat(lp.obj_off(i));
      if (t > res.value) res.value = t;
    }
    res.x = RatVector(0);
    return res;
  }
  if (k == 1) return solve_1d(lp);
  return solve_vertex(lp);
}

}  // namespace pgnlab
