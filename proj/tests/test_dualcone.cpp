#include "doctest.h"
#include "oracles.hpp"
#include "symcone/dualcone.hpp"
#include "symcone/multipoly.hpp"
#include "symcone/sos.hpp"
#include "symcone/specht.hpp"

using namespace symcone;

namespace {

SymFormP P(std::vector<int> parts, Scope s) { return SymFormP::basis(Partition(std::move(parts)), s); }

SymFormP example_boundary_form(Scope s) {
  return SymFormP::quartic({Rational(1), Rational(-13, 5), Rational(0), Rational(179, 100), Rational(-51, 400)}, s);
}

DualFunctional Y(Rational y4, Rational y31, Rational y22, Rational y211, Rational y1111) {
  return DualFunctional{{y4, y31, y22, y211, y1111}};
}

bool psd_oracle(const Rational& a, const Rational& b, const Rational& c) {
  return sgn(a) >= 0 && sgn(c) >= 0 && sgn(a * c - b * b) >= 0;
}

Rational two_two_oracle(const DualFunctional& l, const Rational& n) {
  const auto& y = l.y;
  return n * n / 2 * y[4] - n * n * y[3] + (2 * n - 2) * y[1] + (n * n - 3 * n + 3) / 2 * y[2] + (1 - n) / 2 * y[0];
}

bool dual_oracle(const DualFunctional& l, int n) {
  const auto& y = l.y;
  return psd_oracle(y[2], y[3], y[4]) && psd_oracle(y[0] - y[2], y[1] - y[3], y[3] - y[4]) &&
         sgn(two_two_oracle(l, Rational(n))) >= 0;
}

// Power means of the coordinates, straight from the definition.
Rational power_mean(const std::vector<Rational>& v, int k) {
  Rational s = 0;
  for (const auto& x : v) s += pow(x, static_cast<unsigned>(k));
  return s / Rational(static_cast<long>(v.size()));
}

std::vector<Rational> random_point(oracle::Rng& rng, int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(rng.rational(3));
  return v;
}

SymMat2 random_psd(oracle::Rng& rng) {
  Rational v1 = rng.rational(3), v2 = rng.rational(3), w1 = rng.rational(2), w2 = rng.rational(2);
  return SymMat2{Rational(v1 * v1 + w1 * w1), Rational(v1 * v2 + w1 * w2), Rational(v2 * v2 + w2 * w2)};
}

// Family functional solved by hand from the four kernel equations.
DualFunctional family_oracle(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational y211 = -d / c, y22 = d * d / (c * c);
  Rational y31 = (-a * d + b * d + b * c) / (a * c);
  Rational y4 = y22 - b / a * (y31 - y211);
  return Y(y4, y31, y22, y211, 1);
}

}  // namespace

TEST_CASE("pair examples") {
  const Scope s4 = Scope::finite(4);
  SymFormP f = SymFormP::quartic({1, 2, 3, 4, 5}, s4);
  CHECK(pair(point_eval_functional(std::vector<Rational>(4, Rational(1))), f) == 15);
  CHECK(pair(DualFunctional{}, f) == 0);
  // The label-corrected functional of the boundary example annihilates it.
  DualFunctional l = Y(Rational(397, 200), Rational(63, 40), Rational(25, 16), Rational(5, 4), 1);
  CHECK(pair(l, example_boundary_form(s4)) == 0);
  CHECK_THROWS(pair(l, SymFormP::zero(2, s4)));
}

TEST_CASE("point_eval_functional examples") {
  CHECK(point_eval_functional(std::vector<Rational>(5, Rational(1))) == Y(1, 1, 1, 1, 1));
  std::vector<Rational> e1{1, 0, 0, 0};
  CHECK(point_eval_functional(e1) == Y(Rational(1, 4), Rational(1, 16), Rational(1, 16), Rational(1, 64), Rational(1, 256)));
  CHECK(point_eval_functional({1, 1, -1, -1}) == Y(1, 0, 1, 0, 0));
  oracle::Rng rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.integer(4, 7));
    auto v = random_point(rng, n);
    SymFormP f = SymFormP::zero(4, Scope::finite(n));
    for (auto& c : f.coeffs) c = rng.rational(3);
    CHECK(pair(point_eval_functional(v), f) == evaluate(f, v));
    DualFunctional l = point_eval_functional(v);
    CHECK(l.y1111() == pow(power_mean(v, 1), 4));
    CHECK(l.y31() == power_mean(v, 3) * power_mean(v, 1));
  }
}

TEST_CASE("phi_eval_functional is the limit of point evaluations") {
  // At alpha = k/n the functional equals the point evaluation at (x,..,x,y,..,y).
  oracle::Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.integer(4, 9));
    const int k = static_cast<int>(rng.integer(0, n));
    Rational x = rng.rational(3), y = rng.rational(3);
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.push_back(i < k ? x : y);
    CHECK(phi_eval_functional(ratio(k, n), x, y) == point_eval_functional(v));
  }
}

TEST_CASE("dual_membership examples") {
  DualFunctional printed = Y(Rational(397, 200), Rational(25, 16), Rational(63, 40), Rational(5, 4), 1);
  DualFunctional corrected = Y(Rational(397, 200), Rational(63, 40), Rational(25, 16), Rational(5, 4), 1);
  // Both read-outs of the example functional have the displayed first block [[., 5/4], [5/4, 1]].
  CHECK(dual_blocks(corrected, 7).triv == SymMat2{Rational(25, 16), Rational(5, 4), 1});
  CHECK(dual_blocks(corrected, 7).hook == SymMat2{Rational(169, 400), Rational(13, 40), Rational(1, 4)});
  CHECK(dual_blocks(printed, 7).triv == SymMat2{Rational(63, 40), Rational(5, 4), 1});
  CHECK(dual_blocks(printed, 7).hook == SymMat2{Rational(41, 100), Rational(5, 16), Rational(1, 4)});
  for (int n = 4; n <= 12; ++n) {
    const Rational nn(n);
    CHECK(dual_blocks(printed, n).two_two == two_two_oracle(printed, nn));
    CHECK(dual_blocks(printed, n).two_two == Rational(3, 80) * nn * nn - Rational(23, 100) * nn + Rational(23, 100));
    CHECK(dual_blocks(corrected, n).two_two == nn * nn / 32 - Rational(149, 800) * nn + Rational(149, 800));
    CHECK(dual_membership(corrected, n) == (n >= 5));
    CHECK(dual_membership(printed, n) == (n >= 5));
    CHECK(dual_membership(Y(1, 0, 1, 0, 0), n));
    CHECK(dual_blocks(Y(1, 0, 1, 0, 0), n).two_two == (nn - 2) * (nn - 2) / 2);
    CHECK_FALSE(dual_membership(Y(-1, 0, 0, 0, 0), n));
  }
  CHECK(dual_membership_limit(corrected));
  CHECK_THROWS(dual_blocks(corrected, 3));
}

TEST_CASE("point evaluations are dual members") {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.integer(4, 6));
    DualFunctional l = point_eval_functional(random_point(rng, n));
    CHECK(dual_membership(l, n));
    CHECK(dual_oracle(l, n));
  }
}

TEST_CASE("dual membership agrees with the block oracle and is scale invariant") {
  oracle::Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.integer(4, 10));
    DualFunctional l;
    for (auto& y : l.y) y = rng.rational(3);
    CHECK(dual_membership(l, n) == dual_oracle(l, n));
    Rational t = abs(rng.rational(4)) + Rational(1, 7);
    CHECK(dual_membership(t * l, n) == dual_membership(l, n));
  }
}

TEST_CASE("duality soundness on sampled pairs") {
  oracle::Rng rng(107);
  for (int n = 4; n <= 6; ++n) {
    const Scope s = Scope::finite(n);
    std::vector<DualFunctional> duals;
    while (duals.size() < 100) {
      if (duals.size() % 2 == 0) {
        duals.push_back(point_eval_functional(random_point(rng, n)));
      } else {
        DualFunctional l = family_oracle(rng.rational(3) + Rational(1, 11), rng.rational(3), rng.rational(3) + Rational(1, 13),
                                         rng.rational(3));
        if (dual_membership(l, n)) duals.push_back(l);
      }
    }
    std::vector<SymFormP> forms;
    for (int i = 0; i < 100; ++i) {
      SosCertificate c{s, random_psd(rng), random_psd(rng), Rational(abs(rng.rational(2)))};
      forms.push_back(expand_certificate(c));
    }
    int negatives = 0;
    for (const auto& l : duals)
      for (const auto& f : forms)
        if (sgn(pair(l, f)) < 0) ++negatives;
    CHECK(negatives == 0);
  }
}

TEST_CASE("kernel functional matches the hand solution and annihilates the kernel products") {
  oracle::Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = rng.rational(3), b = rng.rational(3), c = rng.rational(3), d = rng.rational(3);
    if (sgn(a) == 0 || sgn(c) == 0) continue;
    CHECK(boundary_family_functional(a, b, c, d) == family_oracle(a, b, c, d));
  }
  // Sym of the displayed products vanishes under l at n = 5, 6.
  for (int n : {5, 6}) {
    auto x = [n](int i) { return MultiPoly::variable(n, i); };
    MultiPoly p1(n), p2(n);
    for (int i = 0; i < n; ++i) {
      p1 += x(i);
      p2 += x(i) * x(i);
    }
    for (int trial = 0; trial < 4; ++trial) {
      Rational a = rng.rational(3) + Rational(1, 17), b = rng.rational(3), c = rng.rational(3) + Rational(1, 19),
               d = rng.rational(3);
      DualFunctional l = boundary_family_functional(a, b, c, d);
      MultiPoly q1 = (Rational(n) * c) * p2 + d * p1 * p1;
      MultiPoly g1 = x(0) * x(0) - x(1) * x(1), g2 = Rational(1, n) * ((x(0) - x(1)) * p1);
      MultiPoly q2 = a * g1 + b * g2;
      const Scope s = Scope::finite(n);
      for (const MultiPoly& prod : {q1 * p2, q1 * p1 * p1, q2 * g1, q2 * g2}) {
        CHECK(pair(l, m_to_p(brute_symmetrize(prod, n), s)) == 0);
      }
    }
  }
  CHECK_THROWS(boundary_family_functional(0, 0, 0, 0));
}

TEST_CASE("odd_n_functional is c4 + c22") {
  CHECK(odd_n_functional() == Y(1, 0, 1, 0, 0));
  CHECK(pair(odd_n_functional(), SymFormP::quartic({1, 0, -1, 0, 0}, Scope::finite(5))) == 0);
}

TEST_CASE("certify_boundary examples") {
  DualFunctional corrected = Y(Rational(397, 200), Rational(63, 40), Rational(25, 16), Rational(5, 4), 1);
  for (int n = 5; n <= 12; ++n) {
    auto l = certify_boundary(example_boundary_form(Scope::finite(n)), n);
    REQUIRE(l);
    CHECK(pair(*l, example_boundary_form(Scope::finite(n))) == 0);
    CHECK(dual_oracle(*l, n));
    CHECK(Rational(1) / l->y1111() * *l == corrected);
  }
  // The only functional compatible with the certificate has a negative (n-2,2) block at n = 4.
  CHECK_FALSE(certify_boundary(example_boundary_form(Scope::finite(4)), 4));
  CHECK_FALSE(certify_boundary(P({4}, Scope::finite(4)), 4));
  CHECK_FALSE(certify_boundary(P({2, 2}, Scope::finite(6)), 6));
  // p1111 vanishes at any point with zero sum.
  auto l = certify_boundary(P({1, 1, 1, 1}, Scope::finite(5)), 5);
  REQUIRE(l);
  CHECK(pair(*l, P({1, 1, 1, 1}, Scope::finite(5))) == 0);
  CHECK(dual_oracle(*l, 5));
  CHECK_THROWS(certify_boundary(Rational(-1) * P({4}, Scope::finite(4)), 4));
  auto lim = certify_boundary_limit(example_boundary_form(Scope::limit()));
  REQUIRE(lim);
  CHECK(Rational(1) / lim->y1111() * *lim == corrected);
  CHECK(dual_membership_limit(*lim));
}

TEST_CASE("certify_boundary finds nothing for strictly interior certificates") {
  oracle::Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.integer(4, 8));
    SymMat2 a = random_psd(rng), b = random_psd(rng);
    a.m11 += 1;
    a.m22 += 1;
    b.m11 += 1;
    b.m22 += 1;
    SymFormP f = expand_certificate(SosCertificate{Scope::finite(n), a, b, Rational(1, 3)});
    CHECK_FALSE(certify_boundary(f, n));
  }
}
