#ifndef HM_RATIONAL_HPP
#define HM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "hm/errors.hpp"

namespace hm {

// Exact arithmetic carriers. Every bound value, LP weight and degree in this
// library is a BigInt or a Rational; there is no floating point on any
// decision path.
using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den reduced to lowest terms with den > 0. Throws invalid_input on den == 0.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw invalid_input("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

/// Accepts "p", "-p", or "p/q" in base 10.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw invalid_input("rational: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw invalid_input("rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline BigInt floor_rational(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

inline BigInt ceil_rational(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

/// base^exp for a non-negative integer exponent.
inline Rational pow_rational(const Rational& base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
  out.canonicalize();
  return out;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// "p" when den == 1, else "p/q".
inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace hm

#endif  // HM_RATIONAL_HPP
