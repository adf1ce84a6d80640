#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "symcone/binary_quartic.hpp"
#include "symcone/matrix.hpp"
#include "symcone/roots.hpp"
#include "symcone/subresultant.hpp"

using namespace symcone;

namespace {

UniPoly P(std::initializer_list<long> low_first) {
  std::vector<Rational> v;
  for (long c : low_first) v.emplace_back(c);
  return UniPoly(v);
}

BinaryQuartic Q(std::initializer_list<Rational> c) {
  BinaryQuartic h;
  std::size_t i = 0;
  for (const auto& v : c) h.c[i++] = v;
  return h;
}

}  // namespace

TEST_CASE("rational parsing accepts both minus signs") {
  CHECK(parse_rational("-13/10") == Rational(-13, 10));
  CHECK(parse_rational("\xE2\x88\x92" "13/10") == Rational(-13, 10));
  CHECK(parse_rational("4/8") == Rational(1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("isolate_real_roots examples") {
  auto r = isolate_real_roots(P({-2, 0, 1}), 0, 2);
  REQUIRE(r.size() == 1);
  CHECK(r[0].lo * r[0].lo < 2);
  CHECK(r[0].hi * r[0].hi > 2);
  CHECK(isolate_real_roots(P({1, 0, 1}), -10, 10).empty());
  CHECK(isolate_real_roots(P({10000, -37399, 37399}), 0, 1).empty());
  CHECK_THROWS_WITH(isolate_real_roots(UniPoly(), 0, 1), "indeterminate root set");
}

TEST_CASE("isolate_real_roots reports rational roots hit by bisection as points") {
  // Roots 0 (excluded endpoint), 1/2 (first midpoint) and 3/4.
  UniPoly p = linear_factor(0) * linear_factor(Rational(1, 2)) * linear_factor(Rational(3, 4));
  auto r = isolate_real_roots(p, 0, 1);
  REQUIRE(r.size() == 2);
  CHECK(r[0].is_point());
  CHECK(r[0].lo == Rational(1, 2));
  CHECK(r[1].lo <= Rational(3, 4));
  CHECK(r[1].hi >= Rational(3, 4));
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(P({1, -2, 1}), 0, 2) == 1);
  CHECK(sturm_count(P({25, -149, 149}), 0, 1) == 2);
  CHECK(sturm_count(P({0, -1, 0, 1}), -2, 2) == 3);
  CHECK_THROWS_WITH(sturm_count(P({0, -1, 0, 1}), 0, 2), "endpoint root");
}

TEST_CASE("isolation finds one interval per constructed root") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    UniPoly p = P({1});
    int k = static_cast<int>(rng.integer(1, 5));
    for (int i = 0; i < k; ++i) {
      Rational r = rng.rational(5, 7);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      int mult = static_cast<int>(rng.integer(1, 2));
      for (int j = 0; j < mult; ++j) p = p * linear_factor(r);
    }
    p = p * P({1, 0, 1});  // no real roots contributed
    auto iv = isolate_real_roots(p, -6, 6);
    REQUIRE(iv.size() == roots.size());
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(iv[i].lo <= roots[i]);
      CHECK(roots[i] <= iv[i].hi);
      if (!iv[i].is_point()) {
        CHECK(sgn(p(iv[i].lo)) != 0);
        CHECK(sgn(p(iv[i].hi)) != 0);
      }
    }
    for (std::size_t i = 1; i < iv.size(); ++i) CHECK(iv[i - 1].hi <= iv[i].lo);
  }
}

TEST_CASE("cell samples avoid roots and cover every cell") {
  UniPoly p = linear_factor(0) * linear_factor(Rational(1, 3)) * linear_factor(1) * P({-1, 0, 3});
  auto iv = isolate_real_roots(p, 0, 1);
  auto samples = cell_samples(p, iv, 0, 1);
  REQUIRE(samples.size() == iv.size() + 1);
  for (const auto& s : samples) {
    CHECK(s > 0);
    CHECK(s < 1);
    CHECK(sgn(p(s)) != 0);
  }
  for (std::size_t i = 1; i < samples.size(); ++i) CHECK(samples[i - 1] < samples[i]);
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(poly_gcd(P({1, 0, 1}), P({0, 1, 1})) == P({1}));
  // (x-3)^2 (x^2+1) expanded by hand: x^4 - 6x^3 + 10x^2 - 6x + 9.
  UniPoly h = P({9, -6, 10, -6, 1});
  CHECK(h == linear_factor(3) * linear_factor(3) * P({1, 0, 1}));
  CHECK(poly_gcd(h, h.derivative()) == P({-3, 1}));
  CHECK_THROWS(poly_gcd(UniPoly(), UniPoly()));
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
  UniPoly a = P({-1, 1}), b = P({2, 0, 1}), c = P({3, 1});
  UniPoly p = Rational(5) * a * b * b * c * c * c;
  auto f = squarefree_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == a);
  CHECK(f[1] == b);
  CHECK(f[2] == c);
}

TEST_CASE("disc_binary_quartic examples") {
  CHECK(disc_binary_quartic(Q({1, 0, 0, 0, 0})) == 0);
  Rational oracle_value = oracle::quartic_disc({1, 0, 0, 0, 1});
  CHECK(oracle_value == 256);
  CHECK(disc_binary_quartic(Q({1, 0, 0, 0, 1})) == oracle_value);
}

TEST_CASE("discriminant agrees with the Sylvester resultant oracle") {
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> f;
    for (int k = 0; k < 5; ++k) f.push_back(rng.rational(6, 5));
    if (sgn(f[0]) == 0) f[0] = 1;
    CHECK(disc_binary_quartic(Q({f[0], f[1], f[2], f[3], f[4]})) == oracle::quartic_disc(f));
  }
}

TEST_CASE("discriminant vanishes exactly on repeated projective roots") {
  oracle::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Rational r = rng.rational(4);
    UniPoly q = P({rng.integer(-5, 5), rng.integer(-5, 5), rng.integer(1, 5)});
    UniPoly u = linear_factor(r) * linear_factor(r) * q;
    BinaryQuartic h;
    for (int k = 0; k <= 4; ++k) h.c[static_cast<std::size_t>(4 - k)] = u.coeff(k);
    CHECK(disc_binary_quartic(h) == 0);
    // Degree-3 dehomogenization: the point at infinity plus a repeated finite root.
    UniPoly v = linear_factor(r) * linear_factor(r) * P({rng.integer(1, 5), 1});
    BinaryQuartic g;
    for (int k = 0; k <= 4; ++k) g.c[static_cast<std::size_t>(4 - k)] = v.coeff(k);
    CHECK(disc_binary_quartic(g) == 0);
  }
  // Distinct roots and nonzero leading coefficient: nonzero.
  UniPoly u = linear_factor(1) * linear_factor(2) * linear_factor(-3) * linear_factor(Rational(1, 2));
  BinaryQuartic h;
  for (int k = 0; k <= 4; ++k) h.c[static_cast<std::size_t>(4 - k)] = u.coeff(k);
  CHECK(disc_binary_quartic(h) != 0);
  // x^3 y: simple roots at 0 and infinity, but 0 is triple.
  CHECK(disc_binary_quartic(Q({0, 1, 0, 0, 0})) == 0);
  // x y (x^2 + y^2): roots 0 and infinity are simple.
  CHECK(disc_binary_quartic(Q({0, 1, 0, 1, 0})) != 0);
}

TEST_CASE("binary_quartic_nonneg examples") {
  CHECK(binary_quartic_nonneg(Q({1, -4, 6, -4, 1})));
  CHECK_FALSE(binary_quartic_nonneg(Q({0, 1, 0, 0, 0})));
  auto w = negative_point(Q({0, 1, 0, 0, 0}));
  REQUIRE(w.has_value());
  CHECK(Q({0, 1, 0, 0, 0})(w->first, w->second) < 0);
  CHECK(binary_quartic_nonneg(Q({0, 0, 0, 0, 0})));
  CHECK(binary_quartic_nonneg(Q({0, 0, 1, 0, 0})));
  CHECK_FALSE(binary_quartic_nonneg(Q({0, 0, -1, 0, 0})));
  CHECK(binary_quartic_positive(Q({1, 0, 0, 0, 1})));
  CHECK_FALSE(binary_quartic_positive(Q({1, -4, 6, -4, 1})));
}

TEST_CASE("binary_quartic_nonneg agrees with grid sampling") {
  oracle::Rng rng(13);
  int positives = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    BinaryQuartic h;
    if (trial % 2 == 0) {
      for (auto& c : h.c) c = rng.rational(5, 3);
    } else {
      // Sum of two squares of quadratics, minus a small perturbation.
      std::vector<Rational> a, b;
      for (int k = 0; k < 3; ++k) {
        a.push_back(rng.rational(3, 2));
        b.push_back(rng.rational(3, 2));
      }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)] + b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      h.c[static_cast<std::size_t>(rng.integer(0, 4))] -= Rational(rng.integer(0, 3), 8);
    }
    bool nonneg = binary_quartic_nonneg(h);
    if (nonneg) {
      ++positives;
      for (long x = -12; x <= 12; ++x)
        for (long y = -4; y <= 4; ++y) CHECK(sgn(h(Rational(x, 4), Rational(y))) >= 0);
    } else {
      auto w = negative_point(h);
      REQUIRE(w.has_value());
      CHECK(sgn(h(w->first, w->second)) < 0);
    }
  }
  CHECK(positives > 100);
}

TEST_CASE("psd2 examples and spectral agreement") {
  CHECK(psd2({1, 0, 1}));
  CHECK_FALSE(psd2({1, 2, 1}));
  CHECK(psd2({Rational(63, 40), Rational(5, 4), 1}));
  oracle::Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    long a = rng.integer(-4, 4), b = rng.integer(-4, 4), c = rng.integer(-4, 4);
    long double tr = a + c, dt = static_cast<long double>(a) * c - static_cast<long double>(b) * b;
    long double disc = tr * tr - 4 * dt;
    long double lmin = (tr - std::sqrt(std::max<long double>(disc, 0))) / 2;
    bool spectral = lmin >= -1e-12L;
    CHECK(psd2({a, b, c}) == spectral);
  }
}

TEST_CASE("fraction-free determinant and subresultants") {
  oracle::Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(determinant(m) == oracle::det(m));
  oracle::Rng rng(15);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> f, g;
    for (int k = 0; k < 5; ++k) f.push_back(rng.rational(5, 1));
    for (int k = 0; k < 4; ++k) g.push_back(rng.rational(5, 1));
    if (sgn(f[0]) == 0) f[0] = 1;
    if (sgn(g[0]) == 0) g[0] = 1;
    UniPoly pf(std::vector<Rational>(f.rbegin(), f.rend())), pg(std::vector<Rational>(g.rbegin(), g.rend()));
    auto psc = principal_subresultant_coefficients(pf, pg);
    CHECK(psc[0] == oracle::resultant(f, g));
    // psc_j = 0 iff deg gcd > j: check against gcd degree.
    int gdeg = poly_gcd(pf, pg).degree();
    int first = 0;
    while (sgn(psc[static_cast<std::size_t>(first)]) == 0) ++first;
    CHECK(first == gdeg);
  }
  // Common quadratic factor forces psc_0 = psc_1 = 0.
  UniPoly common = P({1, 1, 1});
  UniPoly a = common * P({-1, 0, 1}), b = common * P({5, 1});
  auto psc = principal_subresultant_coefficients(a, b);
  CHECK(sgn(psc[0]) == 0);
  CHECK(sgn(psc[1]) == 0);
  CHECK(sgn(psc[2]) != 0);
  CHECK(make_monic(subresultant(a, b, 2)) == common);
}

TEST_CASE("algebraic number signs") {
  AlgebraicReal s(P({-2, 0, 1}), {1, 2});
  CHECK(s.sign_of(P({-2, 0, 1})) == 0);
  CHECK(s.sign_of(UniPoly({Rational(-3, 2), Rational(1)})) < 0);
  CHECK(s.sign_of(P({0, -2, 1})) < 0);
  CHECK(s.sign_of(P({-4, 0, 0, 0, 1})) == 0);
  CHECK(s.compare(Rational(141, 100)) > 0);
  CHECK(s.compare(Rational(142, 100)) < 0);
  AlgebraicReal r = AlgebraicReal::from_rational(Rational(1, 3));
  CHECK(r.sign_of(P({-1, 3})) == 0);
}
