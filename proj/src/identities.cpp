#include "symcone/identities.hpp"

#include <stdexcept>

#include "symcone/positivity.hpp"

namespace symcone {

namespace {

UniPoly k_poly() { return UniPoly::x(); }
UniPoly constant(const Rational& c) { return UniPoly::constant(c); }

}  // namespace

SymFormP boundary_family_form(const BoundaryParams& p) {
  if (sgn(p.a) == 0) throw std::invalid_argument("boundary family needs a != 0");
  if (sgn(p.c) == 0 && sgn(p.d) == 0) throw std::invalid_argument("boundary family needs (c, d) != (0, 0)");
  const auto& [a, b, c, d] = p;
  return SymFormP::quartic({Rational(a * a), Rational(2 * a * b), Rational(c * c - a * a),
                            Rational(2 * c * d + b * b - 2 * a * b), Rational(d * d - b * b)},
                           Scope::limit());
}

bool family_on_limit_boundary(const BoundaryParams& p) {
  if (sgn(p.a) == 0 || sgn(p.c) == 0) return false;
  return dual_membership_limit(boundary_family_functional(p.a, p.b, p.c, p.d));
}

UniPoly gamma1_q1(const BoundaryParams& p) {
  const auto& [a, b, c, d] = p;
  Rational g1 = (4 * c * d - 8 * a * d + 4 * a * a + 4 * a * b + b * b - 8 * c * a + 4 * c * c) *
                (4 * c * d + 8 * a * d + 4 * a * a + 4 * a * b + b * b + 8 * c * a + 4 * c * c);
  const UniPoly k = k_poly();
  return constant(g1) * k * k - constant(g1) * k - constant(Rational(16 * a * a * (c + d) * (c + d)));
}

UniPoly q2(const BoundaryParams& p) {
  const auto& [a, b, c, d] = p;
  Rational g2 = 4 * a * a * d - b * b * c - 4 * a * b * c;
  const UniPoly k = k_poly();
  return constant(g2) * k * k - constant(g2) * k + constant(Rational(a * a * (c + d)));
}

UniPoly disc_factorization_rhs(const BoundaryParams& p) {
  const UniPoly k = k_poly();
  const UniPoly km1 = k - constant(Rational(1));
  const UniPoly q = q2(p);
  return constant(Rational(16 * (p.c + p.d) * (p.c + p.d))) * km1 * km1 * km1 * k * k * k * gamma1_q1(p) * q * q;
}

bool DiscFactorizationCheck::all() const {
  return factorization && q1_symmetric && q1_at_zero && q1_at_half && q2_at_ends && q2_at_half;
}

DiscFactorizationCheck check_disc_factorization(const BoundaryParams& p) {
  const auto& [a, b, c, d] = p;
  DiscFactorizationCheck r;
  r.factorization = alpha_discriminant(boundary_family_form(p)) == disc_factorization_rhs(p);
  const UniPoly q1 = gamma1_q1(p), q = q2(p);
  r.q1_symmetric = q1 == q1.compose(constant(Rational(1)) - k_poly());
  r.q1_at_zero = q1(0) == -16 * a * a * (c + d) * (c + d) && q1(1) == q1(0);
  Rational s = 4 * a * a + 4 * a * b + 4 * c * d + 4 * c * c + b * b;
  r.q1_at_half = q1(Rational(1, 2)) == -s * s / 4;
  r.q2_at_ends = q(0) == a * a * (c + d) && q(1) == q(0);
  r.q2_at_half = q(Rational(1, 2)) == c * (2 * a + b) * (2 * a + b) / 4;
  return r;
}

bool verify_disc_factorization(const BoundaryParams& p) { return check_disc_factorization(p).all(); }

SymFormP second_case_form(const Rational& a, const SymMat2& b) {
  return SymFormP::quartic({b.m22, Rational(2 * b.m12), Rational(-b.m22), Rational(b.m11 - 2 * b.m12),
                            Rational(a * a - b.m11)},
                           Scope::limit());
}

bool verify_second_case_double_root(const Rational& a, const SymMat2& b) {
  if (sgn(a) == 0) throw std::invalid_argument("second case needs a != 0");
  if (sgn(b.m11) <= 0 || sgn(b.det()) <= 0) throw std::invalid_argument("second case needs a positive definite block");
  BinaryQuartic h = restrict_alpha(second_case_form(a, b), Rational(1, 2));
  UniPoly u = h.dehomogenized();
  return sgn(u(-1)) == 0 && sgn(u.derivative()(-1)) == 0;
}

bool verify_second_case_double_root() {
  for (long a = 1; a <= 3; ++a)
    for (long b11 = 1; b11 <= 3; ++b11)
      for (long b12 = -2; b12 <= 2; ++b12)
        for (long b22 = 1; b22 <= 3; ++b22) {
          SymMat2 b{Rational(b11), Rational(b12), Rational(b22)};
          if (sgn(b.det()) <= 0) continue;
          if (!verify_second_case_double_root(Rational(a), b)) return false;
        }
  return true;
}

}  // namespace symcone
