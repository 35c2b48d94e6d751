#pragma once

#include <vector>

#include "pgnlab/problem.hpp"
#include "pgnlab/rational.hpp"

namespace pgnlab {

long binom(int d, int k);

/// A k-element subset of {1,...,d} together with its 1-based position in the
/// lexicographic enumeration of all such subsets.
struct SubsetIndex {
  int d = 0;
  int k = 0;
  std::vector<int> members;  // strictly increasing, values in 1..d
  long rank = 0;
};

SubsetIndex subset_lex(int d, int k, long rank);
long rank_of(int d, const std::vector<int>& members);

/// Sign of the shuffle merging two disjoint increasing index sequences, i.e.
/// the parity of the permutation sorting their concatenation.
int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b);

/// Element of wedge^p(Q^d), dense in lexicographic Grassmann coordinates.
struct Multivector {
  int d = 0;
  int p = 0;
  RatVector coords;  // size binom(d, p)

  Multivector() = default;
  Multivector(int d_, int p_);

  static Multivector basis_vector(int d, int i);              // e_i, 1-based
  static Multivector basis(int d, const std::vector<int>& members);
  static Multivector from_vector(const RatVector& v);

  Rat& at(const std::vector<int>& members);
  const Rat& at(const std::vector<int>& members) const;

  bool operator==(const Multivector& o) const = default;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator*(const Rat& c, const Multivector& a);

Multivector wedge(const Multivector& a, const Multivector& b);

Multivector hodge_star(const Multivector& a);

/// p-th compound: entry (i,j) is the p x p minor of m on rows sigma_i and
/// columns sigma_j.
RatMatrix compound_matrix(const RatMatrix& m, int p);

/// The induced problem on wedge^p: lattice basis is the p-th compound of the
/// original basis; box half-widths are the subset products of the original
/// ones.
struct CompoundProblem {
  int r = 0;  // binom(d, p)
  int p = 0;
  RatMatrix basis;  // r x r, determinant 1 when det(original) = 1
};

CompoundProblem compound_problem(const ProblemContext& ctx, int p);
RatVector compound_weights(const RatVector& weights, int p);

}  // namespace pgnlab
