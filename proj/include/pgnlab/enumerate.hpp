#pragma once

#include <vector>

#include "pgnlab/minimax_lp.hpp"
#include "pgnlab/rational.hpp"

namespace pgnlab {

struct budget_error : std::runtime_error {
  long nodes;
  explicit budget_error(long n)
      : std::runtime_error("enumeration node budget exhausted"), nodes(n) {}
};

/// Exact integer minimax search over c in Z^ncols:
///
///   minimize   max_i |(obj * c)_i|
///   subject to |(con * c)_r| <= cap_r   (strict where cap_strict)
///              (c_avoid_prefix, ..., c_{ncols-1}) != 0
///
/// Branch and bound, one coordinate per tree level (outermost level last
/// column). Pruning uses the exact real relaxation at each node; since the
/// relaxed value is convex in the scanned coordinate, a two-sided scan from
/// the relaxed minimizer is complete.
struct EnumTask {
  RatMatrix obj;
  RatMatrix con;   // 0 x n when unconstrained
  RatVector cap;
  std::vector<bool> cap_strict;
  int avoid_prefix = 0;
  bool has_beta_init = false;
  Rat beta_init;   // valid upper bound for the minimum, or an inclusive cap
};

struct EnumOptions {
  long node_budget = 4'000'000;
  int tie_cap = 64;
};

struct EnumOutcome {
  bool found = false;
  Rat value;
  std::vector<IntVector> argmins;  // all minimizers seen, up to tie_cap
  bool ties_complete = true;
  long nodes = 0;
};

EnumOutcome enumerate_min(const EnumTask& task, const EnumOptions& opts = {});

}  // namespace pgnlab
