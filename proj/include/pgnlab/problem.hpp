#pragma once

#include <vector>

#include "pgnlab/rational.hpp"
#include "pgnlab/real.hpp"

namespace pgnlab {

struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Dims {
  int m = 0;  // number of x-variables
  int n = 0;  // number of y-equations
  int d = 0;  // m + n
};

/// The exact setup for one approximation problem: the matrix of the linear
/// system, the unit-lower-triangular transformation T, the lattice T^-1 Z^d
/// and its dual T^t Z^d.
struct ProblemContext {
  Dims dims;
  RatMatrix theta;          // n x m
  RatMatrix T;              // [[E_m, 0], [theta, E_n]]
  RatMatrix T_inv;          // [[E_m, 0], [-theta, E_n]]
  RatMatrix lattice_basis;  // columns of T_inv
  RatMatrix dual_basis;     // columns of T^t
};

/// One sampled flow time. u > 1 makes every box half-width an exact rational:
/// the m head widths are u^n, the n tail widths u^-m, so they multiply to 1.
struct GridPoint {
  Rat u;
  RatVector weights;  // d half-widths
  Real s() const;     // n * ln(u), display only
  int n_for_s = 0;
};

struct GridSpec {
  Rat u_start;
  Rat u_factor;
  int steps = 0;
};

ProblemContext make_problem(int m, int n, const RatMatrix& theta);

GridPoint weights_at(const ProblemContext& ctx, const Rat& u);

std::vector<GridPoint> make_grid(const ProblemContext& ctx, const GridSpec& spec);

/// Context of the transposed system. Built for -theta^t with the roles of the
/// two variable blocks swapped; after swapping the coordinate blocks back its
/// lattice is the dual of the original one.
ProblemContext transpose_problem(const ProblemContext& ctx);

/// Block-swap permutation P with P * (starred coords) = original coords.
IntMatrix block_swap_permutation(const Dims& dims);

}  // namespace pgnlab
