#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace symcone {

// Canonical form is maintained by GMP after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q", leading '-' or U+2212; rejects q == 0 and whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// num/den in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return abs(q); }

Rational pow(const Rational& base, unsigned exp);

// Floor and ceiling as integers.
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// Decimal rendering with `digits` significant digits; display only.
std::string to_decimal(const Rational& q, int digits = 15);

}  // namespace symcone
