#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symcone/matrix.hpp"
#include "symcone/symfunc.hpp"

namespace symcone {

// Values l(p_lambda) in the order (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
struct DualFunctional {
  std::array<Rational, 5> y{};

  const Rational& y4() const { return y[0]; }
  const Rational& y31() const { return y[1]; }
  const Rational& y22() const { return y[2]; }
  const Rational& y211() const { return y[3]; }
  const Rational& y1111() const { return y[4]; }
  bool is_zero() const;
  friend bool operator==(const DualFunctional& a, const DualFunctional& b) { return a.y == b.y; }
};

std::string to_string(const DualFunctional& l);

DualFunctional operator*(const Rational& s, const DualFunctional& l);

// sum_lambda c_lambda y_lambda; the form must have degree 4.
Rational pair(const DualFunctional& l, const SymFormP& f);

// y_lambda = p_lambda(v) with n = v.size().
DualFunctional point_eval_functional(const std::vector<Rational>& v);

// y_lambda = Phi_lambda(alpha, 1 - alpha, x, y); the limit analogue of a point evaluation.
DualFunctional phi_eval_functional(const Rational& alpha, const Rational& x, const Rational& y);

struct DualBlocks {
  SymMat2 triv;  // [[y22, y211], [y211, y1111]]
  SymMat2 hook;  // [[y4 - y22, y31 - y211], [y31 - y211, y211 - y1111]]
  Rational two_two;
};

DualBlocks dual_blocks(const DualFunctional& l, int n);

// The (n-2,2) block as a polynomial in n.
UniPoly two_two_block_polynomial(const DualFunctional& l);

// Membership in the dual of the symmetric SOS cone for n >= 4.
bool dual_membership(const DualFunctional& l, int n);

// Membership in the dual of the limit SOS cone: only the first two blocks constrain.
bool dual_membership_limit(const DualFunctional& l);

// Rows: l(Sym(q1 p2)), l(Sym(q1 p1^2)), l(Sym(q2 (x1^2 - x2^2))), l(Sym(q2 (x1 - x2) p1)) with
// q1 = c p2 + d p1^2 and q2 proportional to a (x1^2 - x2^2) + b (x1 - x2) p1.
Matrix kernel_equations(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

// The functional annihilating the kernel products, scaled so y1111 = 1 when possible.
// Throws when the solution space is not one-dimensional.
DualFunctional boundary_family_functional(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

// The c = 0 member of the family, l(f) = c_(4) + c_(2,2).
DualFunctional odd_n_functional();

// A dual member vanishing on f, for f in the SOS cone at n; none for interior points.
// Throws when f is not SOS at n.
std::optional<DualFunctional> certify_boundary(const SymFormP& f, int n);
std::optional<DualFunctional> certify_boundary_limit(const SymFormP& f);

}  // namespace symcone
