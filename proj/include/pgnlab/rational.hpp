#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace pgnlab {

using Int = mpz_class;
using Rat = mpq_class;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "3", "-7/10" or a plain decimal like "0.7" (= 7/10) exactly.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);

/// q^e for integer e (e < 0 requires q != 0).
Rat pow_int(const Rat& q, long e);

/// Exact k-th root if q is a perfect k-th power of a rational, else nullopt.
std::optional<Rat> root_if_perfect(const Rat& q, unsigned long k);

/// q^(num/den) when exactly representable as a rational, else nullopt.
std::optional<Rat> pow_exact(const Rat& q, long num, long den);

/// Smallest integer i with i >= q^(1/k); q > 0.
Int root_ceil(const Rat& q, unsigned long k);

Int floor_int(const Rat& q);
Int ceil_int(const Rat& q);

/// Nearest integer, halves rounded towards +infinity.
Int round_nearest(const Rat& q);

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace pgnlab

namespace Eigen {

template <>
struct NumTraits<pgnlab::Rat> : GenericNumTraits<pgnlab::Rat> {
  typedef pgnlab::Rat Real;
  typedef pgnlab::Rat NonInteger;
  typedef pgnlab::Rat Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<pgnlab::Int> : GenericNumTraits<pgnlab::Int> {
  typedef pgnlab::Int Real;
  typedef pgnlab::Rat NonInteger;
  typedef pgnlab::Int Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
