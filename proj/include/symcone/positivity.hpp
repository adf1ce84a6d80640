#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcone/roots.hpp"
#include "symcone/symfunc.hpp"

namespace symcone {

// Phi_f(w, (x, y)) < 0 with w = (alpha, 1 - alpha).
struct NonnegWitness {
  Rational alpha;
  Rational x, y;
  Rational value;
};

struct NonnegVerdict {
  bool in = true;
  std::optional<NonnegWitness> witness;
};

// The n-point (x, ..., x, y, ..., y) with alpha * n copies of x; needs alpha * n integral.
std::vector<Rational> witness_point(const NonnegWitness& w, int n);

// Half-degree test over the grid W_n; degree 4, n >= 4.
NonnegVerdict is_nonneg(const SymFormP& f);

// Positive away from the origin.
bool is_strictly_positive(const SymFormP& f);

// Membership in the limit cone of nonnegative forms.
NonnegVerdict is_nonneg_limit(const SymFormP& f);

enum class BoundaryStatus { Interior, Boundary, Outside };

std::string to_string(BoundaryStatus s);

struct BoundaryVerdict {
  BoundaryStatus status = BoundaryStatus::Interior;
  // An alpha in (0, 1) where Phi^alpha has a real projective root, with its defining polynomial.
  std::optional<IsolatingInterval> alpha_witness;
  UniPoly alpha_polynomial;
  // Boundary through alpha -> 0 or 1: c_(4) = 0, so f - eps p_(4) fails near the endpoints.
  bool endpoint_degenerate = false;
};

// BOUNDARY iff f is IN and either Phi^alpha has a real double root for some alpha in (0, 1)
// or c_(4) = 0.
BoundaryVerdict boundary_status_limit(const SymFormP& f);

// Discriminant in x of Phi_f(alpha, 1 - alpha, x, 1), as a polynomial in alpha.
UniPoly alpha_discriminant(const SymFormP& f);

}  // namespace symcone
