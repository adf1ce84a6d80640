#include "symcone/binary_quartic.hpp"

#include <sstream>

#include "symcone/roots.hpp"

namespace symcone {

Rational BinaryQuartic::operator()(const Rational& x, const Rational& y) const {
  Rational r = 0;
  for (int i = 0; i < 5; ++i) r += c[static_cast<std::size_t>(i)] * pow(x, 4 - i) * pow(y, i);
  return r;
}

UniPoly BinaryQuartic::dehomogenized() const {
  std::vector<Rational> v(5);
  for (int k = 0; k <= 4; ++k) v[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(4 - k)];
  return UniPoly(std::move(v));
}

bool BinaryQuartic::is_zero() const {
  for (const auto& v : c) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

std::string to_string(const BinaryQuartic& h) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < 5; ++i) out << (i ? ", " : "") << h.c[static_cast<std::size_t>(i)].get_str();
  out << "]";
  return out.str();
}

Rational disc_binary_quartic(const BinaryQuartic& h) {
  return quartic_discriminant<Rational>(h.c[0], h.c[1], h.c[2], h.c[3], h.c[4]);
}

// h >= 0 on R^2 iff u = h(., 1) >= 0 on R; continuity covers y = 0.
bool binary_quartic_nonneg(const BinaryQuartic& h) {
  UniPoly u = h.dehomogenized();
  if (u.is_zero()) return true;
  if (u.degree() % 2 == 1 || sgn(u.leading()) < 0) return false;
  auto factors = squarefree_decomposition(u);
  for (std::size_t i = 0; i < factors.size(); i += 2) {
    if (real_root_count(factors[i]) > 0) return false;
  }
  return true;
}

bool binary_quartic_positive(const BinaryQuartic& h) {
  if (sgn(h.c[0]) <= 0) return false;
  UniPoly u = h.dehomogenized();
  return real_root_count(u) == 0;
}

bool has_real_projective_root(const BinaryQuartic& h) {
  if (sgn(h.c[0]) == 0) return true;
  return real_root_count(h.dehomogenized()) > 0;
}

std::optional<std::pair<Rational, Rational>> negative_point(const BinaryQuartic& h) {
  if (binary_quartic_nonneg(h)) return std::nullopt;
  UniPoly u = h.dehomogenized();
  Rational bound = cauchy_bound(u);
  std::vector<Rational> candidates{-bound, bound};
  auto roots = isolate_real_roots(u, -bound, bound);
  for (const auto& s : cell_samples(u, roots, -bound, bound)) candidates.push_back(s);
  for (const auto& x : candidates) {
    if (sgn(u(x)) < 0) return std::make_pair(x, Rational(1));
  }
  throw MathError("negative point search failed");
}

}  // namespace symcone
