#pragma once

#include "pgnlab/rational.hpp"

namespace pgnlab {

struct LLLResult {
  RatMatrix reduced;     // = input * transform
  IntMatrix transform;   // unimodular
};

/// Exact rational LLL reduction of the (full-rank) columns of `basis`.
/// Correctness of downstream enumeration never depends on reduction quality;
/// this only shrinks the search region.
LLLResult lll_reduce(const RatMatrix& basis, const Rat& delta = Rat(3, 4));

}  // namespace pgnlab
