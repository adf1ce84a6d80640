#pragma once

#include <optional>
#include <vector>

#include "symcone/poly.hpp"

namespace symcone {

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool is_point() const { return lo == hi; }
};

// Monic gcd; throws when both arguments are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition: p = lc(p) * prod_i factors[i]^(i+1), each factor monic and squarefree.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

// Sturm chain of p, p', scaled by positive constants only.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x);
int sign_variations_at_infinity(const std::vector<UniPoly>& seq, bool positive);

// Distinct real roots in (lo, hi]; throws "endpoint root" if p(lo) == 0.
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

// Distinct real roots on the whole line.
int real_root_count(const UniPoly& p);

// Every real root has absolute value strictly below the bound.
Rational cauchy_bound(const UniPoly& p);

// Sorted disjoint intervals, one per distinct root in the open interval (lo, hi).
// Non-degenerate intervals have endpoints where p is nonzero.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

std::vector<IsolatingInterval> isolate_all_real_roots(const UniPoly& p);

// One rational point strictly inside each open cell of (lo, hi) cut by the roots.
// `roots` must come from isolate_real_roots on the same (lo, hi).
std::vector<Rational> cell_samples(const UniPoly& p, const std::vector<IsolatingInterval>& roots, const Rational& lo,
                                  const Rational& hi);

// A real algebraic number given by a squarefree polynomial and an isolating interval.
// Non-point intervals keep p(lo) and p(hi) nonzero with opposite signs.
class AlgebraicReal {
 public:
  AlgebraicReal(const UniPoly& p, const IsolatingInterval& iv);
  static AlgebraicReal from_rational(const Rational& r);

  bool is_rational() const { return lo_ == hi_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const UniPoly& defining_polynomial() const { return p_; }
  IsolatingInterval interval() const { return {lo_, hi_}; }

  // Halves the interval; may collapse to a rational point.
  void refine();
  void refine_below(const Rational& width);

  // Exact sign of q at this number.
  int sign_of(const UniPoly& q);
  int compare(const Rational& r);
  // The exact value when the number is rational.
  std::optional<Rational> rational_value();

 private:
  UniPoly p_;
  Rational lo_, hi_;
};

}  // namespace symcone
