#pragma once

#include <string>
#include <vector>

#include "symcone/poly.hpp"

namespace symcone {

// [[m11, m12], [m12, m22]]
struct SymMat2 {
  Rational m11, m12, m22;

  Rational det() const { return m11 * m22 - m12 * m12; }
  Rational trace() const { return m11 + m22; }
  bool is_zero() const { return sgn(m11) == 0 && sgn(m12) == 0 && sgn(m22) == 0; }
  int rank() const;
  friend bool operator==(const SymMat2& a, const SymMat2& b) {
    return a.m11 == b.m11 && a.m12 == b.m12 && a.m22 == b.m22;
  }
};

std::string to_string(const SymMat2& m);

bool psd2(const SymMat2& m);

// Frobenius inner product <A, B>.
Rational inner(const SymMat2& a, const SymMat2& b);

using Matrix = std::vector<std::vector<Rational>>;

// Fraction-free elimination; R needs exact_div(R, R) and a zero test.
template <class R>
R determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  int sign_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_value(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero_value(m[p][k])) ++p;
      if (p == n) return R();
      std::swap(m[k], m[p]);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  return sign_flip < 0 ? R(-d) : d;
}

int rank(Matrix m);

// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols);

}  // namespace symcone
