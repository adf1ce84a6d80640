#include "symcone/positivity.hpp"

#include <stdexcept>

#include "symcone/binary_quartic.hpp"
#include "symcone/subresultant.hpp"

namespace symcone {

namespace {

void require_quartic(const SymFormP& f) {
  if (f.degree != 4) throw std::invalid_argument("positivity tests need a quartic form");
}

std::optional<NonnegWitness> witness_at(const SymFormP& f, const Rational& alpha) {
  BinaryQuartic h = restrict_alpha(f, alpha);
  auto pt = negative_point(h);
  if (!pt) return std::nullopt;
  return NonnegWitness{alpha, pt->first, pt->second, h(pt->first, pt->second)};
}

// U(alpha, x) = Phi_f(alpha, 1 - alpha, x, 1) together with the data that locates every
// alpha where its real-root structure can change.
struct AlphaFamily {
  BiPoly u;
  std::vector<UniPoly> psc;  // psc_j of (U, U_x) over Q[alpha]
  int j0 = 0;                // first psc not identically zero
  UniPoly critical;          // leading coefficient times psc_{j0}

  explicit AlphaFamily(const SymFormP& f) {
    auto c = restrict_alpha_poly(f);
    std::vector<UniPoly> coeffs(5);
    for (int k = 0; k <= 4; ++k) coeffs[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(4 - k)];
    u = BiPoly(coeffs);
    if (u.degree() <= 0) {
      critical = u.is_zero() ? UniPoly() : u.leading();
      return;
    }
    psc = principal_subresultant_coefficients(u, u.derivative());
    while (psc[static_cast<std::size_t>(j0)].is_zero()) ++j0;
    critical = u.leading() * psc[static_cast<std::size_t>(j0)];
  }

  std::vector<IsolatingInterval> critical_roots() const {
    if (critical.degree() <= 0) return {};
    return isolate_real_roots(critical, 0, 1);
  }
};

}  // namespace

std::vector<Rational> witness_point(const NonnegWitness& w, int n) {
  Rational k = w.alpha * n;
  if (k.get_den() != 1) throw std::invalid_argument("witness weight is not on the grid W_n");
  long copies = k.get_num().get_si();
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(i < copies ? w.x : w.y);
  return v;
}

NonnegVerdict is_nonneg(const SymFormP& f) {
  require_quartic(f);
  const int n = f.scope.n();
  if (n < 4) throw std::invalid_argument("is_nonneg needs n >= 4");
  for (const auto& g : w_grid(n, 2)) {
    if (auto w = witness_at(f, g.weights[0])) return {false, w};
  }
  return {true, std::nullopt};
}

bool is_strictly_positive(const SymFormP& f) {
  require_quartic(f);
  const int n = f.scope.n();
  Rational total = 0;
  for (const auto& c : f.coeffs) total += c;
  for (const auto& g : w_grid(n, 2)) {
    const Rational& alpha = g.weights[0];
    if (alpha == 0 || alpha == 1) {
      // All coordinates equal: the value is (sum c) t^4.
      if (sgn(total) <= 0) return false;
    } else if (!binary_quartic_positive(restrict_alpha(f, alpha))) {
      return false;
    }
  }
  return true;
}

NonnegVerdict is_nonneg_limit(const SymFormP& f) {
  require_quartic(f);
  if (f.is_zero()) return {true, std::nullopt};
  for (const Rational& alpha : {Rational(0), Rational(1)}) {
    if (auto w = witness_at(f, alpha)) return {false, w};
  }
  AlphaFamily fam(f);
  auto roots = fam.critical_roots();
  UniPoly crit = fam.critical.degree() > 0 ? fam.critical : UniPoly::constant(Rational(1));
  for (const auto& alpha : cell_samples(crit, roots, 0, 1)) {
    if (auto w = witness_at(f, alpha)) return {false, w};
  }
  return {true, std::nullopt};
}

std::string to_string(BoundaryStatus s) {
  switch (s) {
    case BoundaryStatus::Interior:
      return "INTERIOR";
    case BoundaryStatus::Boundary:
      return "BOUNDARY";
    case BoundaryStatus::Outside:
      return "OUTSIDE";
  }
  return "?";
}

BoundaryVerdict boundary_status_limit(const SymFormP& f) {
  require_quartic(f);
  if (f.is_zero()) throw std::invalid_argument("boundary status of the zero form");
  if (!is_nonneg_limit(f).in) return {BoundaryStatus::Outside, std::nullopt, UniPoly()};

  auto boundary_at = [](const IsolatingInterval& iv, const UniPoly& p) {
    return BoundaryVerdict{BoundaryStatus::Boundary, iv, p};
  };
  auto point = [](const Rational& a) { return IsolatingInterval{a, a}; };

  AlphaFamily fam(f);
  // A root at infinity for some alpha in (0, 1).
  const UniPoly lead_x4 = fam.u.coeff(4);
  if (lead_x4.is_zero()) return boundary_at(point(Rational(1, 2)), linear_factor(Rational(1, 2)));
  auto lead_roots = isolate_real_roots(lead_x4, 0, 1);
  if (!lead_roots.empty()) return boundary_at(lead_roots.front(), squarefree_part(lead_x4));

  // The structure is constant between critical values, so one sample per cell decides it.
  auto roots = fam.critical_roots();
  UniPoly crit = fam.critical.degree() > 0 ? fam.critical : UniPoly::constant(Rational(1));
  for (const auto& alpha : cell_samples(crit, roots, 0, 1)) {
    if (has_real_projective_root(restrict_alpha(f, alpha))) return boundary_at(point(alpha), linear_factor(alpha));
  }

  // At a critical alpha* the gcd of U and U_x has the degree of the first nonvanishing psc.
  for (const auto& iv : roots) {
    if (iv.is_point()) {
      if (has_real_projective_root(restrict_alpha(f, iv.lo))) return boundary_at(iv, linear_factor(iv.lo));
      continue;
    }
    AlgebraicReal a(crit, iv);
    int g = fam.j0 + 1;
    while (a.sign_of(fam.psc[static_cast<std::size_t>(g)]) == 0) ++g;
    bool real_root = false;
    if (g % 2 == 1) {
      real_root = true;
    } else if (g == 2) {
      BiPoly s2 = subresultant(fam.u, fam.u.derivative(), 2);
      UniPoly disc = s2.coeff(1) * s2.coeff(1) - UniPoly::constant(Rational(4)) * s2.coeff(2) * s2.coeff(0);
      real_root = a.sign_of(disc) >= 0;
    }
    if (real_root) return boundary_at(a.interval(), a.defining_polynomial());
  }
  if (sgn(f.coeffs[0]) == 0) return {BoundaryStatus::Boundary, std::nullopt, UniPoly(), true};
  return {BoundaryStatus::Interior, std::nullopt, UniPoly()};
}

UniPoly alpha_discriminant(const SymFormP& f) {
  require_quartic(f);
  auto c = restrict_alpha_poly(f);
  return quartic_discriminant<UniPoly>(c[0], c[1], c[2], c[3], c[4]);
}

}  // namespace symcone
