#include "pgnlab/problem.hpp"

#include "pgnlab/linalg.hpp"

namespace pgnlab {

Real GridPoint::s() const {
  return Real(static_cast<long>(n_for_s)) * Real::log_of(u);
}

ProblemContext make_problem(int m, int n, const RatMatrix& theta) {
  if (m < 1 || n < 1) throw dimension_error("m and n must be positive");
  if (m + n < 3) throw dimension_error("m + n must be at least 3");
  if (theta.rows() != n || theta.cols() != m)
    throw dimension_error("theta must be n x m");

  const int d = m + n;
  ProblemContext ctx;
  ctx.dims = {m, n, d};
  ctx.theta = theta;

  ctx.T = RatMatrix::Zero(d, d);
  ctx.T_inv = RatMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) { ctx.T(i, i) = 1; ctx.T_inv(i, i) = 1; }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      ctx.T(m + i, j) = theta(i, j);
      ctx.T_inv(m + i, j) = -theta(i, j);
    }

  ctx.lattice_basis = ctx.T_inv;
  ctx.dual_basis = ctx.T.transpose();
  return ctx;
}

GridPoint weights_at(const ProblemContext& ctx, const Rat& u) {
  if (u <= 0) throw dimension_error("u must be positive");
  const auto& [m, n, d] = ctx.dims;
  GridPoint gp;
  gp.u = u;
  gp.n_for_s = n;
  gp.weights = RatVector(d);
  Rat head = pow_int(u, n);
  Rat tail = pow_int(u, -static_cast<long>(m));
  for (int i = 0; i < m; ++i) gp.weights(i) = head;
  for (int i = m; i < d; ++i) gp.weights(i) = tail;
  return gp;
}

std::vector<GridPoint> make_grid(const ProblemContext& ctx, const GridSpec& spec) {
  if (spec.u_start <= 1) throw dimension_error("u_start must exceed 1");
  if (spec.u_factor <= 1) throw dimension_error("u_factor must exceed 1");
  if (spec.steps < 1) throw dimension_error("steps must be positive");
  std::vector<GridPoint> grid;
  grid.reserve(spec.steps);
  Rat u = spec.u_start;
  for (int i = 0; i < spec.steps; ++i) {
    grid.push_back(weights_at(ctx, u));
    u *= spec.u_factor;
  }
  return grid;
}

ProblemContext transpose_problem(const ProblemContext& ctx) {
  return make_problem(ctx.dims.n, ctx.dims.m, RatMatrix(-ctx.theta.transpose()));
}

IntMatrix block_swap_permutation(const Dims& dims) {
  const int m = dims.m, n = dims.n, d = dims.d;
  IntMatrix p(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(i, j) = 0;
  // starred coordinate j < n is original coordinate m + j; starred n + i is
  // original i.
  for (int j = 0; j < n; ++j) p(m + j, j) = 1;
  for (int i = 0; i < m; ++i) p(i, n + i) = 1;
  return p;
}

}  // namespace pgnlab
