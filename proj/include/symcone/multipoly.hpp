#pragma once

#include <map>
#include <string>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(const Exponents& e, const Rational& c);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  Rational coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  MultiPoly operator-() const;
  MultiPoly pow(unsigned k) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Rational evaluate(const std::vector<Rational>& point) const;

  // Variable i becomes variable target[i] of a polynomial in new_nvars variables.
  MultiPoly map_variables(const std::vector<int>& target, int new_nvars) const;

  // Replaces variable `index` by a constant; the variable count is unchanged.
  MultiPoly substitute(int index, const Rational& value) const;

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace symcone
