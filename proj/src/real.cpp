#include "pgnlab/real.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace pgnlab {

Real Real::log_of(const Rat& q) {
  if (q <= 0) throw std::domain_error("log of non-positive rational");
  Real x(q);
  Real r;
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (digits < 2) digits = 2;
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

}  // namespace pgnlab
