#ifndef VVJACK_RATIONAL_HPP
#define VVJACK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "vvjack/errors.hpp"

namespace vvjack {

// Exact arbitrary-precision rationals. mpq_class keeps the canonical form
// gcd(|num|,den)=1, den>=1 as long as values are built through these helpers.
using BigInt = mpz_class;
using BigQ = mpq_class;

// The two-argument mpq_class constructor takes an unsigned denominator, so a
// negative one must be folded into the numerator before construction.
inline BigQ bigq(long num, long den = 1) {
  if (den == 0) throw DivisionByZero();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigQ q(num, static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

inline BigQ bigq(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  BigQ q(num, den);
  q.canonicalize();  // also flips a negative denominator
  return q;
}

// Accepts "n" or "n/m" with optional sign.
BigQ bigq_parse(const std::string& text);

std::string bigq_str(const BigQ& q);

BigQ bigq_pow(const BigQ& base, unsigned long e);

BigInt factorial(unsigned n);

}  // namespace vvjack

#endif
