#include "symcone/repro.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "symcone/dualcone.hpp"
#include "symcone/identities.hpp"
#include "symcone/positivity.hpp"
#include "symcone/sos.hpp"
#include "symcone/specht.hpp"

namespace symcone {

MultiPoly choi_lam_polynomial() {
  auto x = [](int i) { return MultiPoly::variable(4, i); };
  MultiPoly s(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      s += x(i) * x(i) * x(j) * x(j);
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) s += x(i) * x(i) * x(j) * x(k);
    }
  }
  return s - Rational(4) * x(0) * x(1) * x(2) * x(3);
}

SymFormP boundary_example_form(Scope scope) {
  return boundary_family_form({1, Rational(-13, 10), 1, Rational(-5, 4)}).with_scope(scope);
}

namespace {

struct Entry {
  const char* id;
  const char* name;
  const char* title;
  double budget;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"A1", "choi-lam", "Choi-Lam form is nonnegative but not SOS at n = 4", 5},
      {"A2", "boundary-example", "boundary example: functional, blocks, discriminant, positivity", 60},
      {"A3", "disc-factorization", "discriminant factorization and Q1/Q2 identities", 60},
      {"A4", "q-blocks", "Q-blocks against brute-force symmetrization", 60},
      {"A5", "limit-blocks", "limit blocks and the (n-2,2) limit generator", 5},
      {"A6", "limit-equality", "limit SOS cone equals limit nonnegative cone on 500 samples", 300},
      {"A7", "cone-inclusion", "cone inclusions across n", 60},
      {"A8", "full-dimension", "Sigma' generators have full rank", 1},
      {"A9", "round-trips", "basis round trips and the substitution identity", 30},
  };
  return list;
}

const Entry& entry_for(const std::string& name) {
  for (const auto& e : entries()) {
    if (name == e.id || name == e.name) return e;
  }
  throw std::invalid_argument("unknown criterion \"" + name + "\"");
}

class Recorder {
 public:
  explicit Recorder(CriterionReport& r) : r_(r) {}

  void note(const std::string& line) { r_.lines.push_back(line); }

  bool expect(bool ok, const std::string& what) {
    r_.lines.push_back((ok ? "ok        " : "MISMATCH  ") + what);
    if (!ok) r_.pass = false;
    return ok;
  }

  template <class T>
  bool expect_eq(const T& expected, const T& actual, const std::string& what) {
    const bool ok = expected == actual;
    std::string line = what + ": expected " + show(expected);
    if (!ok) line += ", got " + show(actual);
    return expect(ok, line);
  }

 private:
  static std::string show(const Rational& q) { return to_string(q); }
  static std::string show(const SymMat2& m) { return to_string(m); }
  static std::string show(const UniPoly& p) { return to_string(p, "n"); }
  static std::string show(const SymFormP& f) { return to_string(f); }
  static std::string show(bool b) { return b ? "true" : "false"; }
  static std::string show(int v) { return std::to_string(v); }
  static std::string show(const std::string& s) { return s; }

  CriterionReport& r_;
};

class Sampler {
 public:
  explicit Sampler(unsigned long seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Rational rational(long range, long max_den = 6) { return ratio_of(integer(-range * max_den, range * max_den), max_den); }
  Rational nonzero(long range, long max_den = 6) {
    Rational q;
    do q = rational(range, max_den);
    while (sgn(q) == 0);
    return q;
  }
  SymMat2 psd() {
    Rational v1 = rational(3), v2 = rational(3), w1 = rational(2), w2 = rational(2);
    return SymMat2{Rational(v1 * v1 + w1 * w1), Rational(v1 * v2 + w1 * w2), Rational(v2 * v2 + w2 * w2)};
  }
  SymFormP uniform(Scope s, long range = 4) {
    SymFormP f = SymFormP::zero(4, s);
    for (auto& c : f.coeffs) c = rational(range, 4);
    return f;
  }

 private:
  static Rational ratio_of(long num, long den) { return ratio(num, den); }
  std::mt19937_64 gen_;
};

std::string vector_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

void run_choi_lam(Recorder& rec) {
  const Scope s4 = Scope::finite(4);
  SymFormP f = m_to_p(brute_symmetrize(choi_lam_polynomial(), 4), s4);
  rec.note("p-basis at n = 4: " + vector_text(f.coeffs));
  rec.expect_eq(SymFormP::quartic({8, Rational(-160, 3), -8, 128, Rational(-128, 3)}, s4), f, "symmetrized form");
  rec.expect_eq(Rational(0), evaluate(f, {1, 1, -1, -1}), "value at (1,1,-1,-1)");
  rec.expect(is_nonneg(f).in, "is_nonneg = IN");
  SosVerdict v = sos_membership(f);
  rec.expect(!v.in, "sos_membership = OUT");
  if (!rec.expect(v.separator.has_value(), "separating functional found")) return;
  const DualFunctional& l = *v.separator;
  DualBlocks b = dual_blocks(l, 4);
  rec.note("separator " + to_string(l));
  rec.note("M_(n) = " + to_string(b.triv) + ", M_(n-1,1) = " + to_string(b.hook) + ", M_(n-2,2) = " + to_string(b.two_two));
  rec.expect(psd2(b.triv), "M_(n) is PSD");
  rec.expect(psd2(b.hook), "M_(n-1,1) is PSD");
  rec.expect(sgn(b.two_two) >= 0, "M_(n-2,2) >= 0");
  rec.expect(sgn(pair(l, f)) < 0, "l(f) = " + to_string(pair(l, f)) + " < 0");
}

void run_example(Recorder& rec) {
  // Values as printed: (y4, y31, y22, y211, y1111).
  const DualFunctional printed{{Rational(397, 200), Rational(25, 16), Rational(63, 40), Rational(5, 4), Rational(1)}};
  const SymFormP f = boundary_example_form(Scope::limit());
  rec.note("form " + vector_text(f.coeffs) + ", functional " + to_string(printed));
  rec.expect_eq(Rational(0), pair(printed, f), "l(f)");
  DualBlocks b = dual_blocks(printed, 4);
  rec.expect_eq(SymMat2{Rational(63, 40), Rational(5, 4), 1}, b.triv, "M_(n)");
  rec.expect_eq(SymMat2{Rational(41, 100), Rational(5, 16), Rational(1, 4)}, b.hook, "M_(n-1,1)");
  rec.expect_eq(UniPoly({Rational(-21, 80), Rational(21, 80), Rational(3, 80)}), two_two_block_polynomial(printed),
                "M_(n-2,2) as a polynomial in n");

  const UniPoly k = UniPoly::x(), one = UniPoly::constant(Rational(1));
  auto c = [](long v) { return UniPoly::constant(Rational(v)); };
  UniPoly q1 = c(10000) - c(37399) * k + c(37399) * k * k;
  UniPoly q2 = c(149) * k * k - c(149) * k + c(25);
  UniPoly km1 = k - one;
  UniPoly expected = UniPoly::constant(Rational(-1, 100000000)) * q1 * q2 * q2 * km1 * km1 * km1 * k * k * k;
  const UniPoly disc = alpha_discriminant(f);
  rec.expect(disc == expected, "discriminant of h_k: expected " + to_string(expected, "k") +
                                   (disc == expected ? "" : ", got " + to_string(disc, "k")));

  int positive = 0;
  for (int n = 4; n <= 50; ++n) positive += is_strictly_positive(f.with_scope(Scope::finite(n))) ? 1 : 0;
  rec.expect_eq(47, positive, "strictly positive for n = 4..50 (count)");

  for (int n = 4; n <= 12; ++n) {
    SymFormP fn = f.with_scope(Scope::finite(n));
    SosVerdict v = sos_membership(fn, false);
    if (!rec.expect(v.in, "sos_membership IN at n = " + std::to_string(n))) continue;
    auto l = certify_boundary(fn, n);
    if (l) {
      rec.expect(sgn(pair(*l, fn)) == 0 && dual_membership(*l, n),
                 "certify_boundary at n = " + std::to_string(n) + " gives " + to_string(*l));
    } else {
      rec.expect(false, "certify_boundary at n = " + std::to_string(n) + " finds a zero-pairing dual member");
    }
  }
}

void run_disc(Recorder& rec) {
  Sampler rng(2024);
  int ok = 0, total = 0;
  while (total < 100) {
    BoundaryParams p{rng.nonzero(3), rng.rational(3), rng.rational(3), rng.rational(3)};
    if (sgn(p.c + p.d) == 0) continue;
    ++total;
    auto r = check_disc_factorization(p);
    if (r.all()) {
      ++ok;
    } else {
      rec.note("failed at a = " + to_string(p.a) + ", b = " + to_string(p.b) + ", c = " + to_string(p.c) +
               ", d = " + to_string(p.d));
    }
  }
  rec.expect_eq(100, ok, "parameter sets with the exact factorization and all five Q1/Q2 identities");
}

void run_q_blocks(Recorder& rec) {
  for (int n = 4; n <= 6; ++n) rec.expect(q_blocks(Scope::finite(n)) == q_blocks_brute(n), "q_blocks(" + std::to_string(n) + ") equals brute force");
  for (int n = 4; n <= 6; ++n) {
    const Scope s = Scope::finite(n);
    auto x = [n](int i) { return MultiPoly::variable(n, i); };
    int good = 0, total = 0;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (const auto& mu1 : partitions_of(2 - a))
          for (const auto& mu2 : partitions_of(2 - b)) {
            MultiPoly left = (x(0).pow(a) - x(1).pow(a)) * p_lambda_poly(mu1, n);
            MultiPoly right = (x(0).pow(b) - x(1).pow(b)) * p_lambda_poly(mu2, n);
            SymFormP sym = ratio(n - 1, 2 * n) * m_to_p(brute_symmetrize(left * right, n), s);
            SymFormP core = SymFormP::basis(Partition({a + b}), s) -
                            multiply_p(SymFormP::basis(Partition({a}), s), SymFormP::basis(Partition({b}), s));
            SymFormP want = multiply_p(multiply_p(core, SymFormP::basis(mu1, s)), SymFormP::basis(mu2, s));
            ++total;
            good += sym == want ? 1 : 0;
          }
    rec.expect_eq(total, good, "Sigma' symmetrization identity at n = " + std::to_string(n) + " (cases)");
  }
}

void run_limit_blocks(Recorder& rec) {
  QBlocks lim = q_blocks(Scope::limit());
  QBlocks sym = q_blocks_symbolic().limit();
  rec.expect(lim == sym, "LIMIT q_blocks equal the entrywise limits of the closed forms");
  const SymFormP target = SymFormP::quartic({0, 0, Rational(1, 2), -1, Rational(1, 2)}, Scope::limit());
  const Rational scale = lim.two_two.coeffs[4] / target.coeffs[4];
  rec.expect(sgn(scale) > 0 && lim.two_two == scale * target,
             "(n-2,2) limit block = " + to_string(scale) + " * (1/2 p1111 - p211 + 1/2 p22)");
}

void run_limit_equality(Recorder& rec) {
  Sampler rng(7302);
  std::vector<std::pair<std::string, SymFormP>> samples;
  for (int i = 0; i < 200; ++i) samples.emplace_back("uniform", rng.uniform(Scope::limit()));
  while (samples.size() < 350) {
    BoundaryParams p{rng.nonzero(3), rng.rational(3), rng.nonzero(3), rng.rational(3)};
    if (sgn(p.c + p.d) == 0) continue;
    SymFormP f = boundary_family_form(p);
    const long mode = rng.integer(0, 2);
    if (mode > 0) {
      SymFormP g = rng.uniform(Scope::limit(), 1);
      Rational eps = ratio(mode == 1 ? 1 : -1, 200);
      f = f + eps * g;
    }
    samples.emplace_back("family", f);
  }
  while (samples.size() < 500) {
    SosCertificate c{Scope::limit(), rng.psd(), rng.psd(), 0};
    SymFormP f = expand_certificate(c);
    for (auto& x : f.coeffs) x += rng.rational(1, 20) / 5;
    samples.emplace_back("certificate", f);
  }
  int agree = 0, ins = 0;
  std::map<std::string, std::pair<int, int>> by_kind;
  for (const auto& [kind, f] : samples) {
    const bool sos = sos_membership_limit(f).in;
    const bool psd = is_nonneg_limit(f).in;
    if (sos == psd) {
      ++agree;
    } else {
      rec.note("disagreement (" + kind + "): " + vector_text(f.coeffs) + " sos=" + (sos ? "IN" : "OUT") +
               " nonneg=" + (psd ? "IN" : "OUT"));
    }
    ins += sos ? 1 : 0;
    auto& [in_count, total] = by_kind[kind];
    in_count += sos ? 1 : 0;
    ++total;
  }
  for (const auto& [kind, counts] : by_kind)
    rec.note(kind + ": " + std::to_string(counts.first) + " IN of " + std::to_string(counts.second));
  rec.expect_eq(500, agree, "samples with sos_membership_limit = is_nonneg_limit");
}

void run_cone_inclusion(Recorder& rec) {
  Sampler rng(3405);
  int p_violations = 0, s_violations = 0, sos_not_nonneg = 0, p_in = 0, s_in = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SymFormP f;
    if (trial % 2 == 0) {
      f = rng.uniform(Scope::limit());
    } else {
      SosCertificate c{Scope::finite(8), rng.psd(), rng.psd(), Rational(abs(rng.rational(2)))};
      f = expand_certificate(c);
      for (auto& x : f.coeffs) x += rng.rational(1, 10) / 4;
    }
    const SymFormP f8 = f.with_scope(Scope::finite(8)), f4 = f.with_scope(Scope::finite(4));
    if (is_nonneg(f8).in) {
      ++p_in;
      if (!is_nonneg(f4).in) ++p_violations;
    }
    if (sos_membership(f8, false).in) {
      ++s_in;
      if (!sos_membership(f4, false).in) ++s_violations;
    }
    for (int n = 4; n <= 6; ++n) {
      SymFormP fn = f.with_scope(Scope::finite(n));
      if (sos_membership(fn, false).in && !is_nonneg(fn).in) ++sos_not_nonneg;
    }
  }
  rec.note(std::to_string(p_in) + " forms nonnegative at n = 8, " + std::to_string(s_in) + " SOS at n = 8");
  rec.expect_eq(0, p_violations, "nonnegative at 8 but not at 4");
  rec.expect_eq(0, s_violations, "SOS at 8 but not at 4");
  rec.expect_eq(0, sos_not_nonneg, "SOS but not nonnegative at n = 4, 5, 6");
}

void run_full_dimension(Recorder& rec) {
  for (int n = 4; n <= 8; ++n) rec.expect_eq(5, rank_of(sigma_prime_generators(n)), "rank at n = " + std::to_string(n));
}

void run_round_trips(Recorder& rec) {
  int total = 0, good = 0;
  for (int k = 0; k <= 4; ++k)
    for (const auto& lam : partitions_of(k))
      for (int n = 4; n <= 10; ++n) {
        const Scope s = Scope::finite(n);
        SymFormP basis = SymFormP::basis(lam, s);
        ++total;
        good += m_to_p(p_to_m(basis), s) == basis ? 1 : 0;
        SymFuncM m;
        m.degree_bound = k;
        m.add(lam, RatFunc(Rational(1)));
        ++total;
        SymFuncM back = p_to_m(m_to_p(m, s));
        bool same = true;
        for (const auto& mu : partitions_of(k)) same = same && back.coeff(mu).at(Rational(n)) == m.coeff(mu).at(Rational(n));
        good += same ? 1 : 0;
      }
  rec.expect_eq(total, good, "p-m round trips for weight <= 4, n = 4..10 (cases)");
  total = good = 0;
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<int> target;
      for (int i = 0; i < n; ++i) target.push_back(i < k ? 2 : 3);
      for (const auto& lam : partitions_of(4)) {
        MultiPoly phi =
            phi_form(SymFormP::basis(lam, Scope::limit())).substitute(0, ratio(k, n)).substitute(1, ratio(n - k, n));
        ++total;
        good += phi == p_lambda_poly(lam, n).map_variables(target, 4) ? 1 : 0;
      }
    }
  rec.expect_eq(total, good, "Phi_lambda(theta/n, t) = p_lambda at the theta-point, n <= 8 (cases)");
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> ids;
  for (const auto& e : entries()) ids.emplace_back(e.id);
  return ids;
}

std::string resolve_criterion(const std::string& name) { return entry_for(name).id; }

CriterionReport run_criterion(const std::string& name) {
  const Entry& e = entry_for(name);
  CriterionReport r;
  r.id = e.id;
  r.title = e.title;
  r.budget_seconds = e.budget;
  Recorder rec(r);
  const auto start = std::chrono::steady_clock::now();
  const std::string id = e.id;
  try {
    if (id == "A1") run_choi_lam(rec);
    if (id == "A2") run_example(rec);
    if (id == "A3") run_disc(rec);
    if (id == "A4") run_q_blocks(rec);
    if (id == "A5") run_limit_blocks(rec);
    if (id == "A6") run_limit_equality(rec);
    if (id == "A7") run_cone_inclusion(rec);
    if (id == "A8") run_full_dimension(rec);
    if (id == "A9") run_round_trips(rec);
  } catch (const std::exception& ex) {
    rec.expect(false, std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(3);
  t << "runtime " << r.seconds << " s (budget " << r.budget_seconds << " s)";
  rec.expect(r.seconds <= r.budget_seconds, t.str());
  return r;
}

std::string format_report(const CriterionReport& r) {
  std::ostringstream out;
  out << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
  for (const auto& line : r.lines) out << "    " << line << "\n";
  return out.str();
}

}  // namespace symcone
