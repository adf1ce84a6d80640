#pragma once

#include "symcone/dualcone.hpp"
#include "symcone/matrix.hpp"
#include "symcone/poly.hpp"
#include "symcone/symfunc.hpp"

namespace symcone {

struct BoundaryParams {
  Rational a, b, c, d;
};

// a^2 p4 + 2ab p31 + (c^2 - a^2) p22 + (2cd + b^2 - 2ab) p211 + (d^2 - b^2) p1111 in LIMIT scope.
// Throws when a = 0 or (c, d) = (0, 0).
SymFormP boundary_family_form(const BoundaryParams& p);

// The kernel functional of the family lies in the limit dual cone, i.e. -(c + d) / c >= 0.
bool family_on_limit_boundary(const BoundaryParams& p);

UniPoly gamma1_q1(const BoundaryParams& p);  // Q1 = G1 k^2 - G1 k - 16 a^2 (c + d)^2
UniPoly q2(const BoundaryParams& p);         // Q2 = G2 k^2 - G2 k + a^2 (c + d)

// 16 (k - 1)^3 (c + d)^2 k^3 Q1 Q2^2.
UniPoly disc_factorization_rhs(const BoundaryParams& p);

struct DiscFactorizationCheck {
  bool factorization = false;
  bool q1_symmetric = false;  // Q1(k) = Q1(1 - k)
  bool q1_at_zero = false;    // Q1(0) = -16 a^2 (c + d)^2
  bool q1_at_half = false;    // Q1(1/2) = -(4a^2 + 4ab + 4cd + 4c^2 + b^2)^2 / 4
  bool q2_at_ends = false;    // Q2(0) = Q2(1) = a^2 (c + d)
  bool q2_at_half = false;    // Q2(1/2) = c (2a + b)^2 / 4
  bool all() const;
};

DiscFactorizationCheck check_disc_factorization(const BoundaryParams& p);
bool verify_disc_factorization(const BoundaryParams& p);

// a^2 p1111 + b11 (p211 - p1111) + 2 b12 (p31 - p211) + b22 (p4 - p22) in LIMIT scope.
SymFormP second_case_form(const Rational& a, const SymMat2& b);

// Phi^{1/2} and its x-derivative vanish at (1, -1). Throws unless a != 0 and b is positive definite.
bool verify_second_case_double_root(const Rational& a, const SymMat2& b);
// The check over a fixed sample of admissible parameters.
bool verify_second_case_double_root();

}  // namespace symcone
