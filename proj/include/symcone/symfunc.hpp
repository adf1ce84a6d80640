#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symcone/binary_quartic.hpp"
#include "symcone/multipoly.hpp"
#include "symcone/partitions.hpp"
#include "symcone/ratfunc.hpp"

namespace symcone {

// A numeric variable count or the n -> infinity limit.
class Scope {
 public:
  static Scope finite(int n);
  static Scope limit() { return Scope(0); }
  bool is_limit() const { return n_ == 0; }
  int n() const;
  std::string to_string() const;
  friend bool operator==(const Scope& a, const Scope& b) { return a.n_ == b.n_; }
  friend bool operator!=(const Scope& a, const Scope& b) { return !(a == b); }

 private:
  explicit Scope(int n) : n_(n) {}
  int n_;
};

// sum_lambda c_lambda p_lambda with c indexed by partitions_of(degree).
struct SymFormP {
  int degree = 0;
  std::vector<Rational> coeffs;
  Scope scope = Scope::limit();

  static SymFormP zero(int degree, Scope scope);
  static SymFormP basis(const Partition& lambda, Scope scope);
  // Degree-4 form from (c4, c31, c22, c211, c1111).
  static SymFormP quartic(const std::array<Rational, 5>& c, Scope scope);

  Rational coeff(const Partition& lambda) const;
  void set_coeff(const Partition& lambda, const Rational& value);
  bool is_zero() const;
  SymFormP with_scope(Scope s) const;

  SymFormP& operator+=(const SymFormP& o);
  SymFormP& operator-=(const SymFormP& o);
  friend SymFormP operator+(SymFormP a, const SymFormP& b) { return a += b; }
  friend SymFormP operator-(SymFormP a, const SymFormP& b) { return a -= b; }
  friend SymFormP operator*(const Rational& s, SymFormP f);
  // Scope is ignored; coefficient vectors are compared.
  friend bool operator==(const SymFormP& a, const SymFormP& b) { return a.degree == b.degree && a.coeffs == b.coeffs; }
  friend bool operator!=(const SymFormP& a, const SymFormP& b) { return !(a == b); }
};

std::string to_string(const SymFormP& f);

// p-basis form whose coefficients are rational functions of n.
struct SymFormPN {
  int degree = 0;
  std::vector<RatFunc> coeffs;

  static SymFormPN zero(int degree);
  SymFormP at(int n) const;
  // Throws "no limit" when a coefficient diverges.
  SymFormP limit() const;
  friend bool operator==(const SymFormPN& a, const SymFormPN& b) { return a.degree == b.degree && a.coeffs == b.coeffs; }
};

// sum_mu coefficient(n) * m_mu.
struct SymFuncM {
  int degree_bound = 0;
  std::map<Partition, RatFunc> terms;

  void add(const Partition& mu, const RatFunc& c);
  RatFunc coeff(const Partition& mu) const;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const SymFuncM& a, const SymFuncM& b) { return a.terms == b.terms; }
  friend bool operator!=(const SymFuncM& a, const SymFuncM& b) { return !(a == b); }
};

std::string to_string(const SymFuncM& g);

SymFuncM operator+(const SymFuncM& a, const SymFuncM& b);
SymFuncM operator-(const SymFuncM& a, const SymFuncM& b);
SymFuncM operator*(const RatFunc& s, const SymFuncM& a);

// Products of two degree <= 4 functions are supported.
constexpr int kMaxProductDegree = 8;

SymFuncM power_sum(int i, Scope scope = Scope::limit());
SymFuncM multiply_m(const SymFuncM& f, const SymFuncM& g);
SymFuncM p_lambda_in_m(const Partition& lambda);
SymFuncM p_to_m(const SymFormP& f);
SymFuncM p_to_m(const SymFormPN& f);
SymFormP m_to_p(const SymFuncM& g, Scope scope);
SymFormPN m_to_p_symbolic(const SymFuncM& g);

// m_mu at a point; the variable count is point.size().
Rational evaluate_m(const Partition& mu, const std::vector<Rational>& point);
Rational evaluate(const SymFuncM& g, const std::vector<Rational>& point);
Rational evaluate(const SymFormP& f, const std::vector<Rational>& point);

// Phi_f in variables (s_1..s_d, t_1..t_d), d = degree / 2.
MultiPoly phi_form(const SymFormP& f);

BinaryQuartic restrict_alpha(const SymFormP& f, const Rational& alpha);

// Coefficients of x^{4-i} y^i of Phi_f(alpha, 1 - alpha, x, y) as polynomials in alpha.
std::array<UniPoly, 5> restrict_alpha_poly(const SymFormP& f);

}  // namespace symcone
