#include "symcone/sos.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symcone/positivity.hpp"

namespace symcone {

std::string to_string(const SosCertificate& c) {
  std::ostringstream out;
  out << "scope " << c.scope.to_string() << "; A = " << to_string(c.a) << "; B = " << to_string(c.b)
      << "; gamma = " << to_string(c.gamma);
  return out.str();
}

namespace {

std::array<Rational, 5> two_two_coefficients(Scope scope) {
  if (scope.is_limit()) return {0, 0, Rational(1, 2), -1, Rational(1, 2)};
  const long n = scope.n();
  const long n2 = n * n;
  return {ratio(1 - n, 2 * n2), ratio(2 * n - 2, n2), ratio(n2 - 3 * n + 3, 2 * n2), -1, Rational(1, 2)};
}

void require_quartic(const SymFormP& f) {
  if (f.degree != 4) throw std::invalid_argument("SOS membership is implemented for quartic forms");
}

// The certificate for c' = c - gamma G_n, when one exists. With t = b11 the constraints read
// B = [[t, c31'/2], [c31'/2, c4']] and A = [[c1111' + t, (c211' + c31' - t)/2], [.., c22' + c4']].
std::optional<std::pair<SymMat2, SymMat2>> blocks_for(const std::array<Rational, 5>& c) {
  const Rational& b22 = c[0];
  const Rational b12 = c[1] / 2;
  const Rational a22 = c[2] + c[0];
  const Rational e = c[3] + c[1];
  const Rational& k = c[4];
  if (sgn(b22) < 0 || sgn(a22) < 0) return std::nullopt;
  if (sgn(b22) == 0 && sgn(b12) != 0) return std::nullopt;
  const Rational lb = sgn(b22) > 0 ? Rational(b12 * b12 / b22) : Rational(0);
  Rational t = sgn(a22) == 0 ? e : std::max(lb, Rational(2 * a22 + e));
  SymMat2 a{Rational(k + t), Rational((e - t) / 2), a22};
  SymMat2 b{t, b12, b22};
  if (!psd2(a) || !psd2(b)) return std::nullopt;
  return std::make_pair(a, b);
}

std::array<Rational, 5> shifted(const SymFormP& f, const std::array<Rational, 5>& g, const Rational& gamma) {
  std::array<Rational, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = f.coeffs[i] - gamma * g[i];
  return c;
}

// Sign conditions of blocks_for as polynomials in gamma.
struct GammaSystem {
  UniPoly b22, c31, a22, e, v, ke, s, eb, bv, det, ka;

  GammaSystem(const SymFormP& f, const std::array<Rational, 5>& g) {
    auto lin = [&](std::size_t i) { return UniPoly({f.coeffs[i], Rational(-g[i])}); };
    const UniPoly c4 = lin(0), c31p = lin(1), c22 = lin(2), c211 = lin(3), k = lin(4);
    const UniPoly quarter = UniPoly::constant(Rational(1, 4));
    const UniPoly two = UniPoly::constant(Rational(2));
    const UniPoly four = UniPoly::constant(Rational(4));
    b22 = c4;
    c31 = c31p;
    a22 = c22 + c4;
    e = c211 + c31p;
    v = two * a22 + e;
    ke = k + e;
    s = a22 + e + k;
    const UniPoly b12sq = quarter * c31p * c31p;
    eb = e * b22 - b12sq;
    bv = b22 * v - b12sq;
    det = four * b22 * b22 * k * a22 + four * b22 * b12sq * a22 - eb * eb;
    ka = k * a22 - quarter * e * e;
  }

  std::vector<const UniPoly*> all() const { return {&b22, &c31, &a22, &e, &v, &ke, &s, &eb, &bv, &det, &ka}; }
};

// Feasibility of blocks_for from the signs alone.
template <class SignOf>
bool feasible_by_sign(const GammaSystem& sys, SignOf sign) {
  const int b22 = sign(sys.b22), a22 = sign(sys.a22);
  if (b22 < 0 || a22 < 0) return false;
  if (b22 == 0) {
    if (sign(sys.c31) != 0) return false;
    // lb = 0.
    if (a22 == 0) return sign(sys.e) >= 0 && sign(sys.ke) >= 0;
    if (sign(sys.s) < 0) return false;
    if (sign(sys.v) >= 0) return true;
    return sign(sys.ka) >= 0;
  }
  // lb = b12^2 / b22 > 0 scale: compare via b22 * (.) - b12^2.
  if (a22 == 0) return sign(sys.eb) >= 0 && sign(sys.ke) >= 0;
  if (sign(sys.s) < 0) return false;
  if (sign(sys.bv) >= 0) return true;
  return sign(sys.det) >= 0;
}

}  // namespace

SymFormP two_two_generator_form(Scope scope) { return SymFormP::quartic(two_two_coefficients(scope), scope); }

SymFormP expand_certificate(const SosCertificate& c) {
  if (c.scope.is_limit() && sgn(c.gamma) != 0) throw std::invalid_argument("the limit cone has no (n-2,2) generator");
  const auto g = two_two_coefficients(c.scope);
  const SymMat2& a = c.a;
  const SymMat2& b = c.b;
  std::array<Rational, 5> f;
  f[0] = b.m22 + c.gamma * g[0];
  f[1] = 2 * b.m12 + c.gamma * g[1];
  f[2] = a.m22 - b.m22 + c.gamma * g[2];
  f[3] = 2 * a.m12 + b.m11 - 2 * b.m12 + c.gamma * g[3];
  f[4] = a.m11 - b.m11 + c.gamma * g[4];
  return SymFormP::quartic(f, c.scope);
}

bool certificate_valid(const SosCertificate& c) {
  if (!psd2(c.a) || !psd2(c.b) || sgn(c.gamma) < 0) return false;
  return !(c.scope.is_limit() && sgn(c.gamma) != 0);
}

SosVerdict sos_membership(const SymFormP& f, bool find_separator) {
  require_quartic(f);
  if (f.scope.is_limit()) return sos_membership_limit(f);
  if (f.scope.n() < 4) throw std::invalid_argument("SOS membership needs n >= 4");
  const auto g = two_two_coefficients(f.scope);
  SosVerdict verdict;

  auto accept = [&](const Rational& gamma) {
    auto blocks = blocks_for(shifted(f, g, gamma));
    if (!blocks) return false;
    verdict.in = true;
    verdict.certificate = SosCertificate{f.scope, blocks->first, blocks->second, gamma};
    return true;
  };
  if (accept(0)) return verdict;

  GammaSystem sys(f, g);
  UniPoly crit = UniPoly::constant(Rational(1));
  Rational bound = 1;
  for (const UniPoly* p : sys.all()) {
    if (p->degree() < 1) continue;
    crit *= *p;
    bound = std::max(bound, Rational(cauchy_bound(*p) + 1));
  }
  // Feasible gammas form an interval; cells and roots are visited in increasing order.
  std::optional<AlgebraicReal> irrational;
  if (crit.degree() >= 1) {
    const UniPoly sq = squarefree_part(crit);
    const auto roots = isolate_real_roots(sq, Rational(0), bound);
    const auto samples = cell_samples(sq, roots, Rational(0), bound);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (accept(samples[i])) return verdict;
      if (i >= roots.size()) break;
      AlgebraicReal r(sq, roots[i]);
      if (auto q = r.rational_value()) {
        if (accept(*q)) return verdict;
      } else if (!irrational && feasible_by_sign(sys, [&](const UniPoly& p) { return r.sign_of(p); })) {
        irrational = r;
      }
    }
  } else if (accept(1)) {
    return verdict;
  }
  if (irrational) {
    verdict.in = true;
    verdict.exact = false;
    verdict.gamma_interval = irrational->interval();
    verdict.gamma_polynomial = irrational->defining_polynomial();
    auto blocks = blocks_for(shifted(f, g, irrational->lo()));
    if (!blocks) blocks = blocks_for(shifted(f, g, irrational->hi()));
    if (blocks) verdict.certificate = SosCertificate{f.scope, blocks->first, blocks->second, irrational->lo()};
    return verdict;
  }
  if (find_separator) verdict.separator = find_separating_functional(f);
  return verdict;
}

SosVerdict sos_membership_limit(const SymFormP& f) {
  require_quartic(f);
  const SymFormP g = f.with_scope(Scope::limit());
  SosVerdict verdict;
  std::array<Rational, 5> c;
  std::copy(g.coeffs.begin(), g.coeffs.end(), c.begin());
  if (auto blocks = blocks_for(c)) {
    verdict.in = true;
    verdict.certificate = SosCertificate{Scope::limit(), blocks->first, blocks->second, Rational(0)};
    return verdict;
  }
  NonnegVerdict nv = is_nonneg_limit(g);
  if (nv.witness) verdict.separator = phi_eval_functional(nv.witness->alpha, nv.witness->x, nv.witness->y);
  return verdict;
}

std::optional<DualFunctional> find_separating_functional(const SymFormP& f) {
  require_quartic(f);
  if (f.scope.is_limit()) return sos_membership_limit(f).separator;
  const int n = f.scope.n();
  auto separates = [&](const DualFunctional& l) { return sgn(pair(l, f)) < 0 && dual_membership(l, n); };

  NonnegVerdict nv = is_nonneg(f);
  if (nv.witness) {
    DualFunctional l = point_eval_functional(witness_point(*nv.witness, n));
    if (separates(l)) return l;
  }
  // Kernel functionals of q1 = p2 + v p1^2 and q2 ~ (x1^2 - x2^2) + u (x1 - x2) p1.
  for (int i = -16; i <= 16; ++i) {
    for (int j = -16; j <= 16; ++j) {
      const Rational u = ratio(i, 2), v = ratio(j, 2);
      DualFunctional l;
      l.y[4] = 1;
      l.y[3] = -v;
      l.y[2] = v * v;
      l.y[1] = -v + u * v + u;
      l.y[0] = l.y[2] - u * (l.y[1] - l.y[3]);
      if (separates(l)) return l;
    }
  }
  DualFunctional odd = odd_n_functional();
  if (separates(odd)) return odd;
  return std::nullopt;
}

}  // namespace symcone
