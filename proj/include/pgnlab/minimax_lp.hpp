#pragma once

#include "pgnlab/rational.hpp"

namespace pgnlab {

/// Exact linear minimax program in k real variables:
///
///   minimize   max_i | obj_off(i) + (obj * x)_i |
///   subject to | con_off(r) + (con * x)_r | <= cap(r)
///
/// Solved exactly over the rationals. Small k only (enumeration tree levels).
struct MinimaxLP {
  RatMatrix obj;      // R_o x k, R_o >= 1
  RatVector obj_off;  // R_o
  RatMatrix con;      // R_c x k (R_c may be 0)
  RatVector con_off;  // R_c
  RatVector cap;      // R_c
};

struct LPResult {
  bool feasible = false;
  Rat value;      // optimal objective when feasible
  RatVector x;    // a minimizer (size k)
};

LPResult solve_minimax(const MinimaxLP& lp);

}  // namespace pgnlab
