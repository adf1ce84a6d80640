#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "symcone/poly.hpp"

namespace symcone {

// h(x,y) = c[0] x^4 + c[1] x^3 y + c[2] x^2 y^2 + c[3] x y^3 + c[4] y^4.
struct BinaryQuartic {
  std::array<Rational, 5> c;

  Rational operator()(const Rational& x, const Rational& y) const;
  // h(x, 1) as a polynomial in x.
  UniPoly dehomogenized() const;
  bool is_zero() const;
  friend bool operator==(const BinaryQuartic& a, const BinaryQuartic& b) { return a.c == b.c; }
};

std::string to_string(const BinaryQuartic& h);

// Classical discriminant of a x^4 + b x^3 + c x^2 + d x + e; equals Res(f, f')/a when a != 0.
template <class R>
R quartic_discriminant(const R& a, const R& b, const R& c, const R& d, const R& e) {
  auto k = [](long v) { return R(v); };
  R a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
  R r = k(256) * a2 * a * e2 * e;
  r = r - k(192) * a2 * b * d * e2;
  r = r - k(128) * a2 * c2 * e2;
  r = r + k(144) * a2 * c * d2 * e;
  r = r - k(27) * a2 * d2 * d2;
  r = r + k(144) * a * b2 * c * e2;
  r = r - k(6) * a * b2 * d2 * e;
  r = r - k(80) * a * b * c2 * d * e;
  r = r + k(18) * a * b * c * d2 * d;
  r = r + k(16) * a * c2 * c2 * e;
  r = r - k(4) * a * c2 * c * d2;
  r = r - k(27) * b2 * b2 * e2;
  r = r + k(18) * b2 * b * c * d * e;
  r = r - k(4) * b2 * b * d2 * d;
  r = r - k(4) * b2 * c2 * c * e;
  r = r + b2 * c2 * d2;
  return r;
}

Rational disc_binary_quartic(const BinaryQuartic& h);

bool binary_quartic_nonneg(const BinaryQuartic& h);

// h > 0 away from the origin.
bool binary_quartic_positive(const BinaryQuartic& h);

// Some real (x, y) != 0 with h(x, y) = 0, including the point at infinity.
bool has_real_projective_root(const BinaryQuartic& h);

// A rational point with h(x, y) < 0, present iff h is not nonnegative.
std::optional<std::pair<Rational, Rational>> negative_point(const BinaryQuartic& h);

}  // namespace symcone
