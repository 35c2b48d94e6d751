#include "pgnlab/rational.hpp"

#include <cctype>

namespace pgnlab {

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw parse_error("mixed decimal/fraction literal: " + text);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw parse_error("malformed decimal literal: " + text);
    Int num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw parse_error("malformed decimal literal: " + text);
    Int den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw parse_error("malformed rational literal: " + text);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw parse_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat pow_int(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-(e + 1)) + 1
                        : static_cast<unsigned long>(e);
  if (inv && q == 0) throw std::domain_error("0 raised to negative power");
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), k);
  if (inv) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  r.canonicalize();
  return r;
}

std::optional<Rat> root_if_perfect(const Rat& q, unsigned long k) {
  if (k == 0) throw std::domain_error("0-th root");
  if (q < 0 && k % 2 == 0) return std::nullopt;
  Int num = q.get_num(), den = q.get_den();
  Int rn, rd;
  bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) != 0;
  bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) != 0;
  if (num == 0) exact_n = true;
  if (!exact_n || !exact_d) return std::nullopt;
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<Rat> pow_exact(const Rat& q, long num, long den) {
  if (den == 0) throw std::domain_error("zero exponent denominator");
  if (den < 0) { num = -num; den = -den; }
  auto base = root_if_perfect(q, static_cast<unsigned long>(den));
  if (!base) return std::nullopt;
  return pow_int(*base, num);
}

Int root_ceil(const Rat& q, unsigned long k) {
  if (q <= 0) throw std::domain_error("root_ceil needs q > 0");
  // floor root of floor(q), then bump until r^k >= q
  Int f = floor_int(q);
  Int r;
  mpz_root(r.get_mpz_t(), f.get_mpz_t(), k);
  while (pow_int(Rat(r), static_cast<long>(k)) < q) r += 1;
  return r;
}

Int floor_int(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Int ceil_int(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Int round_nearest(const Rat& q) {
  return floor_int(q + Rat(1, 2));
}

}  // namespace pgnlab
