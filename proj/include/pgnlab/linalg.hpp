#pragma once

#include "pgnlab/rational.hpp"

namespace pgnlab {

/// Exact Gauss-Jordan inverse. Throws std::domain_error on singular input.
RatMatrix inverse(const RatMatrix& m);

/// Exact determinant (fraction-based Gaussian elimination).
Rat determinant(const RatMatrix& m);

/// Rank over Q.
int rank(const RatMatrix& m);

IntMatrix identity_int(int d);
RatMatrix to_rat(const IntMatrix& m);

/// Unimodular completion of a full-column-rank integer matrix `w` (d x q):
/// returns a d x d unimodular C whose first q columns generate the
/// saturation { z in Z^d : z in Q-span(columns of w) }.
IntMatrix saturate_and_complete(const IntMatrix& w);

/// true iff the columns of `m` are linearly independent over Q.
bool independent(const IntMatrix& m);

}  // namespace pgnlab
