#include "symcone/roots.hpp"

#include <algorithm>

namespace symcone {

namespace {

// Scales by a positive rational so that coefficients are coprime integers.
UniPoly positive_primitive(const UniPoly& p) {
  UniPoly q = primitive_part(p);
  if (!p.is_zero() && sgn(p.leading()) < 0) q = -q;
  return q;
}

int sign_at(const UniPoly& p, const Rational& x) { return sgn(p(x)); }

struct Isolator {
  std::vector<IsolatingInterval> out;
  UniPoly original;

  void run(const UniPoly& t, const std::vector<UniPoly>& seq, const Rational& a, const Rational& b, int count) {
    if (count == 0) return;
    if (count == 1 && sign_at(original, a) != 0 && sign_at(original, b) != 0) {
      out.push_back({a, b});
      return;
    }
    Rational m = (a + b) / 2;
    if (sign_at(t, m) == 0) {
      UniPoly deflated = exact_div(t, linear_factor(m));
      auto dseq = sturm_sequence(deflated);
      int left = sign_variations(dseq, a) - sign_variations(dseq, m);
      int right = sign_variations(dseq, m) - sign_variations(dseq, b);
      run(deflated, dseq, a, m, left);
      out.push_back({m, m});
      run(deflated, dseq, m, b, right);
      return;
    }
    int vm = sign_variations(seq, m);
    run(t, seq, a, m, sign_variations(seq, a) - vm);
    run(t, seq, m, b, vm - sign_variations(seq, b));
  }
};

}  // namespace

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw MathError("gcd of two zero polynomials");
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : positive_primitive(r);
  }
  return make_monic(a);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UniPoly::constant(Rational(1));
  return make_monic(exact_div(p, poly_gcd(p, p.derivative())));
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  std::vector<UniPoly> factors;
  if (p.degree() <= 0) return factors;
  UniPoly dp = p.derivative();
  UniPoly a = poly_gcd(p, dp);
  UniPoly b = exact_div(p, a);
  UniPoly c = exact_div(dp, a);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = poly_gcd(b, d);
    factors.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_primitive(p));
  UniPoly dp = p.derivative();
  if (dp.is_zero()) return seq;
  seq.push_back(positive_primitive(dp));
  while (true) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(positive_primitive(-r));
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

int sign_variations_at_infinity(const std::vector<UniPoly>& seq, bool positive) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    int sg = sgn(s.leading());
    if (!positive && s.degree() % 2 == 1) sg = -sg;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw MathError("indeterminate root set");
  if (sign_at(p, lo) == 0) throw MathError("endpoint root");
  if (hi <= lo) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

int real_root_count(const UniPoly& p) {
  if (p.is_zero()) throw MathError("indeterminate root set");
  auto seq = sturm_sequence(squarefree_part(p));
  return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw MathError("indeterminate root set");
  if (hi <= lo || p.degree() == 0) return {};
  UniPoly s = squarefree_part(p);
  UniPoly t = s;
  if (sign_at(t, lo) == 0) t = exact_div(t, linear_factor(lo));
  if (sign_at(t, hi) == 0) t = exact_div(t, linear_factor(hi));
  Isolator iso;
  iso.original = s;
  if (t.degree() > 0) {
    auto seq = sturm_sequence(t);
    iso.run(t, seq, lo, hi, sign_variations(seq, lo) - sign_variations(seq, hi));
  }
  return iso.out;
}

std::vector<IsolatingInterval> isolate_all_real_roots(const UniPoly& p) {
  Rational b = cauchy_bound(p);
  return isolate_real_roots(p, -b, b);
}

std::vector<Rational> cell_samples(const UniPoly& p, const std::vector<IsolatingInterval>& roots, const Rational& lo,
                                  const Rational& hi) {
  std::vector<IsolatingInterval> rs = roots;
  if (!rs.empty() && !rs.front().is_point() && rs.front().lo == lo) {
    AlgebraicReal a(p, rs.front());
    while (!a.is_rational() && a.lo() == lo) a.refine();
    rs.front() = a.interval();
  }
  if (!rs.empty() && !rs.back().is_point() && rs.back().hi == hi) {
    AlgebraicReal a(p, rs.back());
    while (!a.is_rational() && a.hi() == hi) a.refine();
    rs.back() = a.interval();
  }
  std::vector<Rational> out;
  for (std::size_t j = 0; j <= rs.size(); ++j) {
    Rational left = j == 0 ? lo : rs[j - 1].hi;
    Rational right = j == rs.size() ? hi : rs[j].lo;
    // Equal ends here are non-root endpoints of two touching intervals.
    out.push_back(left == right ? left : Rational((left + right) / 2));
  }
  return out;
}

AlgebraicReal::AlgebraicReal(const UniPoly& p, const IsolatingInterval& iv) : p_(squarefree_part(p)), lo_(iv.lo), hi_(iv.hi) {}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  return AlgebraicReal(linear_factor(r), {r, r});
}

void AlgebraicReal::refine() {
  if (is_rational()) return;
  Rational m = (lo_ + hi_) / 2;
  int sm = sign_at(p_, m);
  if (sm == 0) {
    lo_ = hi_ = m;
  } else if (sm == sign_at(p_, lo_)) {
    lo_ = m;
  } else {
    hi_ = m;
  }
}

void AlgebraicReal::refine_below(const Rational& width) {
  while (!is_rational() && hi_ - lo_ >= width) refine();
}

int AlgebraicReal::sign_of(const UniPoly& q) {
  if (q.is_zero()) return 0;
  if (is_rational()) return sign_at(q, lo_);
  UniPoly g = poly_gcd(p_, q);
  if (g.degree() > 0 && sign_at(g, lo_) != sign_at(g, hi_)) return 0;
  UniPoly sq = squarefree_part(q);
  while (true) {
    if (is_rational()) return sign_at(q, lo_);
    if (sign_at(q, lo_) != 0 && sign_at(q, hi_) != 0 && sturm_count(sq, lo_, hi_) == 0) return sign_at(q, lo_);
    refine();
  }
}

int AlgebraicReal::compare(const Rational& r) { return sign_of(linear_factor(r)); }

std::optional<Rational> AlgebraicReal::rational_value() {
  if (is_rational()) return lo_;
  // A rational root u/v of an integer polynomial has v dividing the leading coefficient.
  const UniPoly ip = primitive_part(p_);
  const Integer lead = abs(ip.leading().get_num());
  refine_below(Rational(1) / Rational(lead));
  if (is_rational()) return lo_;
  for (Integer k = ceil_of(lo_ * lead); k <= floor_of(hi_ * lead); ++k) {
    Rational r(k, lead);
    r.canonicalize();
    if (sgn(ip(r)) == 0) return r;
  }
  return std::nullopt;
}

}  // namespace symcone
