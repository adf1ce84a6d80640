#pragma once

#include <string>

#include "symcone/poly.hpp"

namespace symcone {

// Rational function in the symbol n; reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(UniPoly::constant(Rational(1))) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(Rational(1))) {}  // NOLINT
  explicit RatFunc(const UniPoly& num) : num_(num), den_(UniPoly::constant(Rational(1))) {}
  RatFunc(const UniPoly& num, const UniPoly& den);

  static RatFunc n() { return RatFunc(UniPoly::x()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  // Throws when n is a pole.
  Rational at(const Rational& n) const;
  // Limit as n -> infinity; throws "no limit" when it diverges.
  Rational limit() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  UniPoly num_, den_;
};

// (n - shift)(n - shift - 1)...(n - shift - count + 1)
UniPoly falling_factorial(int shift, int count);

}  // namespace symcone
