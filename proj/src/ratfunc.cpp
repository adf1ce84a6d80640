#include "symcone/ratfunc.hpp"

#include "symcone/roots.hpp"

namespace symcone {

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly::constant(Rational(1));
    return;
  }
  UniPoly g = poly_gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  Rational lead = den_.leading();
  num_ = (1 / lead) * num_;
  den_ = (1 / lead) * den_;
}

Rational RatFunc::at(const Rational& n) const {
  Rational d = den_(n);
  if (sgn(d) == 0) throw MathError("rational function evaluated at a pole");
  return num_(n) / d;
}

Rational RatFunc::limit() const {
  if (num_.is_zero() || num_.degree() < den_.degree()) return 0;
  if (num_.degree() > den_.degree()) throw MathError("no limit");
  return num_.leading() / den_.leading();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw MathError("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return "(" + symcone::to_string(num_, "n") + ")";
  return "(" + symcone::to_string(num_, "n") + ")/(" + symcone::to_string(den_, "n") + ")";
}

UniPoly falling_factorial(int shift, int count) {
  UniPoly r = UniPoly::constant(Rational(1));
  for (int i = 0; i < count; ++i) r = r * linear_factor(Rational(shift + i));
  return r;
}

}  // namespace symcone
