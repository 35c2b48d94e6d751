#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "pgnlab/rational.hpp"

namespace pgnlab {

/// Fixed-precision (256-bit) floating point value. Used only for display and
/// for liminf/limsup estimation; every exact check stays in Rat.
class Real {
 public:
  static constexpr mpfr_prec_t kPrec = 256;

  Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
  explicit Real(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
  explicit Real(long i) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, i, MPFR_RNDN); }
  explicit Real(const Rat& q) {
    mpfr_init2(v_, kPrec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  ~Real() { mpfr_clear(v_); }

  Real& operator=(Real o) { mpfr_swap(v_, o.v_); return *this; }

  static Real log_of(const Rat& q);   // natural log, q > 0

  Real operator+(const Real& o) const { Real r; mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator-(const Real& o) const { Real r; mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator*(const Real& o) const { Real r; mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator/(const Real& o) const { Real r; mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
  bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
  bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
  bool operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }

  Real abs() const { Real r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal rendering with `digits` significant digits.
  std::string str(int digits = 30) const;

 private:
  mpfr_t v_;
};

}  // namespace pgnlab
