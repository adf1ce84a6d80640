#include "symcone/dualcone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symcone/positivity.hpp"
#include "symcone/sos.hpp"

namespace symcone {

bool DualFunctional::is_zero() const {
  return std::all_of(y.begin(), y.end(), [](const Rational& v) { return sgn(v) == 0; });
}

std::string to_string(const DualFunctional& l) {
  std::ostringstream out;
  out << "(y4, y31, y22, y211, y1111) = (";
  for (std::size_t i = 0; i < l.y.size(); ++i) out << (i ? ", " : "") << to_string(l.y[i]);
  out << ")";
  return out.str();
}

DualFunctional operator*(const Rational& s, const DualFunctional& l) {
  DualFunctional r;
  for (std::size_t i = 0; i < 5; ++i) r.y[i] = s * l.y[i];
  return r;
}

Rational pair(const DualFunctional& l, const SymFormP& f) {
  if (f.degree != 4) throw std::invalid_argument("dual functionals act on quartic forms");
  Rational total = 0;
  for (std::size_t i = 0; i < 5; ++i) total += l.y[i] * f.coeffs[i];
  return total;
}

namespace {

DualFunctional from_power_means(const Rational& p1, const Rational& p2, const Rational& p3, const Rational& p4) {
  return DualFunctional{{p4, Rational(p3 * p1), Rational(p2 * p2), Rational(p2 * p1 * p1), pow(p1, 4)}};
}

}  // namespace

DualFunctional point_eval_functional(const std::vector<Rational>& v) {
  if (v.empty()) throw std::invalid_argument("point evaluation needs at least one coordinate");
  std::array<Rational, 5> p{};
  for (const auto& x : v) {
    Rational power = 1;
    for (std::size_t i = 1; i <= 4; ++i) {
      power *= x;
      p[i] += power;
    }
  }
  const Rational n(static_cast<long>(v.size()));
  for (std::size_t i = 1; i <= 4; ++i) p[i] /= n;
  return from_power_means(p[1], p[2], p[3], p[4]);
}

DualFunctional phi_eval_functional(const Rational& alpha, const Rational& x, const Rational& y) {
  auto p = [&](unsigned i) { return Rational(alpha * pow(x, i) + (1 - alpha) * pow(y, i)); };
  return from_power_means(p(1), p(2), p(3), p(4));
}

DualBlocks dual_blocks(const DualFunctional& l, int n) {
  if (n < 4) throw std::invalid_argument("dual blocks need n >= 4");
  DualBlocks b;
  b.triv = SymMat2{l.y22(), l.y211(), l.y1111()};
  b.hook = SymMat2{l.y4() - l.y22(), l.y31() - l.y211(), l.y211() - l.y1111()};
  b.two_two = two_two_block_polynomial(l)(Rational(n));
  return b;
}

UniPoly two_two_block_polynomial(const DualFunctional& l) {
  // (n^2/2) y1111 - n^2 y211 + (2n-2) y31 + (n^2-3n+3)/2 y22 + (1-n)/2 y4
  const Rational half(1, 2);
  Rational c0 = -2 * l.y31() + Rational(3, 2) * l.y22() + half * l.y4();
  Rational c1 = 2 * l.y31() - Rational(3, 2) * l.y22() - half * l.y4();
  Rational c2 = half * l.y1111() - l.y211() + half * l.y22();
  return UniPoly({c0, c1, c2});
}

bool dual_membership(const DualFunctional& l, int n) {
  DualBlocks b = dual_blocks(l, n);
  return psd2(b.triv) && psd2(b.hook) && sgn(b.two_two) >= 0;
}

bool dual_membership_limit(const DualFunctional& l) {
  DualBlocks b = dual_blocks(l, 4);
  return psd2(b.triv) && psd2(b.hook);
}

Matrix kernel_equations(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  // Columns (y4, y31, y22, y211, y1111).
  return {
      {0, 0, c, d, 0},
      {0, 0, 0, c, d},
      {a, b, Rational(-a), Rational(-b), 0},
      {0, a, 0, Rational(b - a), Rational(-b)},
  };
}

DualFunctional boundary_family_functional(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  auto basis = nullspace(kernel_equations(a, b, c, d), 5);
  if (basis.size() != 1) throw std::invalid_argument("kernel equations do not determine a unique functional");
  DualFunctional l;
  std::copy(basis[0].begin(), basis[0].end(), l.y.begin());
  Rational scale = sgn(l.y1111()) != 0 ? l.y1111() : Rational(1);
  for (auto& v : l.y) {
    if (sgn(v) != 0) {
      if (sgn(l.y1111()) == 0) scale = v;
      break;
    }
  }
  if (sgn(scale) < 0) scale = -scale;
  return Rational(1) / scale * l;
}

DualFunctional odd_n_functional() { return boundary_family_functional(1, 0, 0, 1); }

namespace {

using Vec2 = std::array<Rational, 2>;

// Rank-one directions w w^T with S w = 0; a fixed fan when S = 0.
std::vector<Vec2> kernel_directions(const SymMat2& s) {
  if (s.rank() == 2) return {};
  if (s.rank() == 1) {
    if (sgn(s.m11) != 0 || sgn(s.m12) != 0) return {Vec2{s.m12, Rational(-s.m11)}};
    return {Vec2{s.m22, Rational(-s.m12)}};
  }
  std::vector<Vec2> fan;
  for (int i = -2; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (j > 0 || i > 0) fan.push_back(Vec2{Rational(i), Rational(j)});
  return fan;
}

// Functionals complementary to the certificate: <A, N1> = <B, N2> = 0 and gamma * M3 = 0, where
// N1 = [[y1111, y211], [y211, y22]] and N2 = [[y211 - y1111, y31 - y211], [y31 - y211, y4 - y22]].
std::vector<DualFunctional> complementary_candidates(const SosCertificate& cert, bool use_two_two) {
  std::vector<std::optional<Vec2>> ws{std::nullopt}, vs{std::nullopt};
  for (const auto& w : kernel_directions(cert.a)) ws.emplace_back(w);
  for (const auto& v : kernel_directions(cert.b)) vs.emplace_back(v);
  std::vector<DualFunctional> out;
  for (const auto& w : ws) {
    for (const auto& v : vs) {
      if (!w && !v) continue;
      // l = s * L1 + u * L2.
      DualFunctional l1, l2;
      if (w) {
        const auto& [w1, w2] = *w;
        l1.y[4] = w1 * w1;
        l1.y[3] = w1 * w2;
        l1.y[2] = w2 * w2;
        l1.y[1] = l1.y[3];
        l1.y[0] = l1.y[2];
      }
      Rational coupling_u = 0;
      if (v) {
        const auto& [v1, v2] = *v;
        l2.y[1] = v1 * v2;
        l2.y[0] = v2 * v2;
        coupling_u = v1 * v1;
      }
      // Coupling: y211 - y1111 = u v1^2.
      Matrix eqs{{Rational(l1.y211() - l1.y1111()), Rational(-coupling_u)}};
      if (use_two_two && sgn(cert.gamma) > 0) {
        const Rational n(cert.scope.n());
        eqs.push_back({two_two_block_polynomial(l1)(n), two_two_block_polynomial(l2)(n)});
      }
      if (!w) eqs.push_back({1, 0});
      if (!v) eqs.push_back({0, 1});
      auto basis = nullspace(eqs, 2);
      std::vector<Vec2> choices;
      if (basis.size() == 1) {
        choices.push_back(Vec2{basis[0][0], basis[0][1]});
        choices.push_back(Vec2{Rational(-basis[0][0]), Rational(-basis[0][1])});
      } else if (basis.size() == 2) {
        choices = {Vec2{1, 0}, Vec2{0, 1}, Vec2{1, 1}};
      }
      for (const auto& [s, u] : choices) {
        if (sgn(s) < 0 || sgn(u) < 0) continue;
        DualFunctional l;
        for (std::size_t i = 0; i < 5; ++i) l.y[i] = s * l1.y[i] + u * l2.y[i];
        if (!l.is_zero()) out.push_back(l);
      }
    }
  }
  return out;
}

// Point evaluations at rational real zeros on the grid W_n.
std::vector<DualFunctional> zero_point_candidates(const SymFormP& f, int n) {
  std::vector<DualFunctional> out;
  for (int k = 0; k <= n; ++k) {
    const Rational alpha = ratio(k, n);
    BinaryQuartic h = restrict_alpha(f, alpha);
    std::vector<std::pair<Rational, Rational>> zeros;
    if (sgn(h.c[0]) == 0) zeros.emplace_back(1, 0);
    UniPoly u = h.dehomogenized();
    if (u.degree() > 0) {
      UniPoly sq = squarefree_part(u);
      for (const auto& iv : isolate_all_real_roots(sq)) {
        AlgebraicReal r(sq, iv);
        if (auto q = r.rational_value()) zeros.emplace_back(*q, 1);
      }
    }
    for (const auto& [x, y] : zeros) {
      std::vector<Rational> v;
      for (int i = 0; i < n; ++i) v.push_back(i < k ? x : y);
      out.push_back(point_eval_functional(v));
    }
  }
  return out;
}

}  // namespace

std::optional<DualFunctional> certify_boundary(const SymFormP& f, int n) {
  SymFormP g = f.with_scope(Scope::finite(n));
  SosVerdict v = sos_membership(g, false);
  if (!v.in) throw std::invalid_argument("certify_boundary needs a form in the SOS cone");
  std::vector<DualFunctional> candidates;
  if (v.certificate && v.exact) candidates = complementary_candidates(*v.certificate, true);
  for (const auto& l : zero_point_candidates(g, n)) candidates.push_back(l);
  candidates.push_back(odd_n_functional());
  for (const auto& l : candidates) {
    if (!l.is_zero() && sgn(pair(l, g)) == 0 && dual_membership(l, n)) return l;
  }
  return std::nullopt;
}

std::optional<DualFunctional> certify_boundary_limit(const SymFormP& f) {
  SymFormP g = f.with_scope(Scope::limit());
  SosVerdict v = sos_membership_limit(g);
  if (!v.in) throw std::invalid_argument("certify_boundary needs a form in the SOS cone");
  std::vector<DualFunctional> candidates = complementary_candidates(*v.certificate, false);
  BoundaryVerdict b = boundary_status_limit(g);
  if (b.alpha_witness && b.alpha_witness->is_point()) {
    const Rational alpha = b.alpha_witness->lo;
    BinaryQuartic h = restrict_alpha(g, alpha);
    if (sgn(h.c[0]) == 0) candidates.push_back(phi_eval_functional(alpha, 1, 0));
    UniPoly u = h.dehomogenized();
    if (u.degree() > 0) {
      UniPoly sq = squarefree_part(u);
      for (const auto& iv : isolate_all_real_roots(sq)) {
        AlgebraicReal r(sq, iv);
        if (auto q = r.rational_value()) candidates.push_back(phi_eval_functional(alpha, *q, 1));
      }
    }
  }
  candidates.push_back(odd_n_functional());
  for (const auto& l : candidates) {
    if (!l.is_zero() && sgn(pair(l, g)) == 0 && dual_membership_limit(l)) return l;
  }
  return std::nullopt;
}

}  // namespace symcone
