#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }

template <class F>
bool is_zero_value(const F& x) {
  return x.is_zero();
}

// Dense univariate polynomial, coefficient i multiplies x^i.
// The coefficient type must be a commutative ring; division helpers need a field.
template <class F>
class Poly {
 public:
  using Coeff = F;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const F& c) : c_{c} { trim(); }
  static Poly constant(const F& c) { return Poly(c); }
  static Poly monomial(const F& c, int deg) {
    std::vector<F> v(static_cast<std::size_t>(deg) + 1);
    v[static_cast<std::size_t>(deg)] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  F coeff(int i) const {
    if (i < 0 || i > degree()) return F();
    return c_[static_cast<std::size_t>(i)];
  }
  const F& leading() const {
    assert(!c_.empty());
    return c_.back();
  }
  const std::vector<F>& coeffs() const { return c_; }

  template <class T>
  T eval(const T& x) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + T(*it);
    }
    return acc;
  }
  F operator()(const F& x) const { return eval<F>(x); }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const F& s, const Poly& p) {
    std::vector<F> r = p.c_;
    for (auto& v : r) v = s * v;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const F& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using UniPoly = Poly<Rational>;

// Polynomials in x whose coefficients are polynomials in a parameter.
using BiPoly = Poly<UniPoly>;

// Quotient and remainder over a field.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly<F>(), a};
  std::vector<F> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  F inv_lead = F(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    F q = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (is_zero_value(q)) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

template <class F>
Poly<F> make_monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  return (F(1) / p.leading()) * p;
}

// x - r
inline UniPoly linear_factor(const Rational& r) { return UniPoly(std::vector<Rational>{Rational(-r), Rational(1)}); }

std::string to_string(const UniPoly& p, const std::string& var = "x");

// Multiplies by the lcm of denominators and divides by the content; leading coefficient positive.
UniPoly primitive_part(const UniPoly& p);

}  // namespace symcone
