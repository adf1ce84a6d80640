#include "doctest.h"
#include "oracles.hpp"
#include "symcone/positivity.hpp"
#include "symcone/multipoly.hpp"
#include "symcone/specht.hpp"

using namespace symcone;

namespace {

Partition L(std::vector<int> parts) { return Partition(std::move(parts)); }

SymFormP P(std::vector<int> parts, Scope s) { return SymFormP::basis(L(std::move(parts)), s); }

SymFormP example_boundary_form(Scope s) {
  return SymFormP::quartic({Rational(1), Rational(-13, 5), Rational(0), Rational(179, 100), Rational(-51, 400)}, s);
}

// Sums over ordered tuples of distinct indices: sum x_i^2 x_j^2 + sum x_i^2 x_j x_k - 4 x1 x2 x3 x4.
MultiPoly choi_lam_poly() {
  auto x = [](int i) { return MultiPoly::variable(4, i); };
  MultiPoly s(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      s += x(i) * x(i) * x(j) * x(j);
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) s += x(i) * x(i) * x(j) * x(k);
    }
  return s - Rational(4) * x(0) * x(1) * x(2) * x(3);
}

SymFormP choi_lam(Scope s) {
  return SymFormP::quartic({8, Rational(-160, 3), -8, 128, Rational(-128, 3)}, s);
}

// Square of a random quadratic a p2 + b p11 plus a random multiple of p4 - p22, then perturbed.
SymFormP near_cone_form(oracle::Rng& rng, Scope s) {
  SymFormP q = rng.rational(3) * P({2}, s) + rng.rational(3) * P({1, 1}, s);
  SymFormP f = multiply_p(q, q);
  Rational t = rng.rational(2);
  if (sgn(t) < 0) t = -t;
  f = f + t * (P({4}, s) - P({2, 2}, s));
  for (auto& c : f.coeffs) c += rng.rational(1, 20) / 10;
  return f;
}

SymFormP uniform_form(oracle::Rng& rng, Scope s) {
  SymFormP f = SymFormP::zero(4, s);
  for (auto& c : f.coeffs) c = rng.rational(4, 4);
  return f;
}

// Direct value of Phi_f(alpha, 1 - alpha, x, y) from the power-mean definition.
Rational phi_value(const SymFormP& f, const Rational& a, const Rational& x, const Rational& y) {
  auto p = [&](unsigned i) { return Rational(a * pow(x, i) + (1 - a) * pow(y, i)); };
  return f.coeffs[0] * p(4) + f.coeffs[1] * p(3) * p(1) + f.coeffs[2] * p(2) * p(2) + f.coeffs[3] * p(2) * p(1) * p(1) +
         f.coeffs[4] * pow(p(1), 4);
}

bool witness_is_negative(const SymFormP& f, const NonnegVerdict& v) {
  if (!v.witness) return false;
  const auto& w = *v.witness;
  return sgn(w.value) < 0 && phi_value(f, w.alpha, w.x, w.y) == w.value;
}

}  // namespace

TEST_CASE("Choi-Lam golden vector matches the monomial form") {
  SymFormP f = choi_lam(Scope::finite(4));
  oracle::Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> v;
    for (int i = 0; i < 4; ++i) v.push_back(rng.rational(3));
    CHECK(evaluate(f, v) == choi_lam_poly().evaluate(v));
  }
  CHECK(evaluate(f, {Rational(1), Rational(1), Rational(-1), Rational(-1)}) == 0);
}

TEST_CASE("is_nonneg examples") {
  const Scope s4 = Scope::finite(4);
  CHECK(is_nonneg(choi_lam(s4)).in);
  auto v = is_nonneg(Rational(-1) * P({4}, s4));
  CHECK_FALSE(v.in);
  REQUIRE(v.witness);
  CHECK(sgn(v.witness->value) < 0);
  for (int n = 4; n <= 20; ++n) {
    SymFormP f = example_boundary_form(Scope::finite(n));
    CHECK(is_nonneg(f).in);
    CHECK(is_strictly_positive(f));
  }
  CHECK_FALSE(is_strictly_positive(P({1, 1, 1, 1}, s4)));
}

TEST_CASE("OUT witnesses evaluate negative at the n-point") {
  oracle::Rng rng(31);
  int outs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.integer(4, 7));
    SymFormP f = uniform_form(rng, Scope::finite(n));
    auto v = is_nonneg(f);
    if (v.in) continue;
    ++outs;
    REQUIRE(v.witness);
    CHECK(witness_is_negative(f, v));
    CHECK(sgn(evaluate(f, witness_point(*v.witness, n))) < 0);
  }
  CHECK(outs > 10);
}

TEST_CASE("is_nonneg agrees with dense grid sampling at n = 4") {
  oracle::Rng rng(17);
  const Scope s4 = Scope::finite(4);
  std::vector<std::vector<Rational>> grid;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) grid.push_back({Rational(a), Rational(b), Rational(c), Rational(d)});
  int ins = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SymFormP f = trial % 2 == 0 ? uniform_form(rng, s4) : near_cone_form(rng, s4);
    auto v = is_nonneg(f);
    if (v.in) {
      ++ins;
      bool negative = false;
      for (const auto& pt : grid) {
        if (sgn(evaluate(f, pt)) < 0) {
          negative = true;
          break;
        }
      }
      CHECK_FALSE(negative);
    } else {
      CHECK(witness_is_negative(f, v));
    }
  }
  CHECK(ins > 20);
}

TEST_CASE("nonnegativity is inherited downward from multiples of n") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    SymFormP f = near_cone_form(rng, Scope::limit());
    for (int n = 4; n <= 5; ++n) {
      for (int l = 2; l <= 3; ++l) {
        if (is_nonneg(f.with_scope(Scope::finite(l * n))).in) CHECK(is_nonneg(f.with_scope(Scope::finite(n))).in);
      }
    }
  }
}

TEST_CASE("limit nonnegativity implies nonnegativity for every n") {
  oracle::Rng rng(43);
  int ins = 0;
  for (int trial = 0; trial < 30; ++trial) {
    SymFormP f = near_cone_form(rng, Scope::limit());
    if (!is_nonneg_limit(f).in) continue;
    ++ins;
    for (int n = 4; n <= 16; ++n) CHECK(is_nonneg(f.with_scope(Scope::finite(n))).in);
  }
  CHECK(ins > 5);
}

TEST_CASE("is_nonneg_limit examples") {
  const Scope lim = Scope::limit();
  CHECK(is_nonneg_limit(P({2, 2}, lim)).in);
  CHECK(is_nonneg_limit(SymFormP::zero(4, lim)).in);
  SymFormP mean_gap = P({4}, lim) - P({2, 2}, lim);
  CHECK(is_nonneg_limit(mean_gap).in);
  SymFormP reversed = P({2, 2}, lim) - P({4}, lim);
  auto v = is_nonneg_limit(reversed);
  CHECK_FALSE(v.in);
  CHECK(witness_is_negative(reversed, v));
  // Dense sampling never finds a negative value of p4 - p22.
  for (int i = 0; i <= 20; ++i)
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y) CHECK(sgn(phi_value(mean_gap, ratio(i, 20), Rational(x), Rational(y))) >= 0);
}

TEST_CASE("limit OUT witnesses are sound on random forms") {
  oracle::Rng rng(47);
  for (int trial = 0; trial < 80; ++trial) {
    SymFormP f = trial % 2 == 0 ? uniform_form(rng, Scope::limit()) : near_cone_form(rng, Scope::limit());
    auto v = is_nonneg_limit(f);
    if (!v.in) {
      CHECK(witness_is_negative(f, v));
    } else {
      for (int i = 0; i <= 12; ++i)
        for (int x = -3; x <= 3; ++x) CHECK(sgn(phi_value(f, ratio(i, 12), Rational(x), Rational(1))) >= 0);
    }
  }
}

TEST_CASE("boundary_status_limit examples") {
  const Scope lim = Scope::limit();
  // No real double root for alpha in (0, 1), yet p22 - eps p4 fails near alpha = 0 for every eps.
  auto p22 = boundary_status_limit(P({2, 2}, lim));
  CHECK(p22.status == BoundaryStatus::Boundary);
  CHECK(p22.endpoint_degenerate);
  CHECK_FALSE(p22.alpha_witness);
  for (long k = 1; k <= 6; ++k) {
    Rational eps = ratio(1, 10 * k * k * k);
    CHECK(is_nonneg_limit(P({2, 2}, lim) + eps * P({4}, lim)).in);
    CHECK(sgn(phi_value(P({2, 2}, lim) - eps * P({4}, lim), eps / 2, Rational(1), Rational(0))) < 0);
    CHECK_FALSE(is_nonneg_limit(P({2, 2}, lim) - eps * P({4}, lim)).in);
  }
  SymFormP inner = P({2, 2}, lim) + Rational(1, 10) * P({4}, lim);
  CHECK(boundary_status_limit(inner).status == BoundaryStatus::Interior);
  CHECK(boundary_status_limit(P({1, 1, 1, 1}, lim)).status == BoundaryStatus::Boundary);
  CHECK(boundary_status_limit(P({2, 2}, lim) - P({4}, lim)).status == BoundaryStatus::Outside);
  CHECK_THROWS(boundary_status_limit(SymFormP::zero(4, lim)));

  auto v = boundary_status_limit(example_boundary_form(lim));
  CHECK(v.status == BoundaryStatus::Boundary);
  REQUIRE(v.alpha_witness);
  // The interval brackets a root of 149 k^2 - 149 k + 25, i.e. 1/2 +- (7/298) sqrt(149).
  auto q = [](const Rational& k) { return Rational(149 * k * k - 149 * k + 25); };
  CHECK(sgn(q(v.alpha_witness->lo)) * sgn(q(v.alpha_witness->hi)) < 0);
}

TEST_CASE("alpha discriminant of the boundary example matches the printed factorization") {
  UniPoly k = UniPoly::x(), one = UniPoly::constant(Rational(1));
  auto c = [](long v) { return UniPoly::constant(Rational(v)); };
  UniPoly a = c(10000) - c(37399) * k + c(37399) * k * k;
  UniPoly b = c(149) * k * k - c(149) * k + c(25);
  UniPoly km1 = k - one;
  UniPoly printed = UniPoly::constant(Rational(-1, 100000000)) * a * b * b * km1 * km1 * km1 * k * k * k;
  CHECK(alpha_discriminant(example_boundary_form(Scope::limit())) == printed);
}
