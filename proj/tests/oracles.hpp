#pragma once

// Reference computations used only by tests; deliberately naive and independent of the library internals.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "symcone/rational.hpp"

namespace oracle {

using symcone::Rational;
using Matrix = std::vector<std::vector<Rational>>;

// Plain Gaussian elimination with row swaps.
inline Rational det(Matrix m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

// Sylvester resultant of f and g given by coefficient lists, highest degree first.
inline Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  Matrix s(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[i];
  return det(s);
}

// Discriminant of a quartic (highest degree first) as Res(f, f') / a.
inline Rational quartic_disc(const std::vector<Rational>& f) {
  std::vector<Rational> df;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) df.push_back(f[i] * Rational(static_cast<long>(f.size() - 1 - i)));
  return resultant(f, df) / f[0];
}

inline Rational horner(const std::vector<Rational>& high_first, const Rational& x) {
  Rational r = 0;
  for (const auto& c : high_first) r = r * x + c;
  return r;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long range, long max_den = 6) {
    long d = integer(1, max_den);
    Rational q(integer(-range * d, range * d), d);
    q.canonicalize();
    return q;
  }
};

// Mean of f over all permutations of the point, i.e. literal orbit averaging.
template <class Fn>
Rational orbit_average(Fn f, std::vector<Rational> point) {
  std::vector<int> idx(point.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rational total = 0;
  long count = 0;
  do {
    std::vector<Rational> permuted(point.size());
    for (std::size_t i = 0; i < idx.size(); ++i) permuted[i] = point[static_cast<std::size_t>(idx[i])];
    total += f(permuted);
    ++count;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total / count;
}

}  // namespace oracle
