#pragma once

#include <vector>

#include "symcone/matrix.hpp"
#include "symcone/poly.hpp"

namespace symcone {

namespace detail {

// Rows x^{q-j-1}P..P, x^{p-j-1}Q..Q; column c holds the coefficient of x^{p+q-j-1-c}.
template <class R>
std::vector<std::vector<R>> subresultant_rows(const Poly<R>& P, const Poly<R>& Q, int j) {
  const int p = P.degree(), q = Q.degree();
  const int cols = p + q - j;
  std::vector<std::vector<R>> rows;
  auto push_shifted = [&](const Poly<R>& f, int shift) {
    std::vector<R> row(static_cast<std::size_t>(cols));
    for (int k = 0; k <= f.degree(); ++k) {
      int col = cols - 1 - (k + shift);
      row[static_cast<std::size_t>(col)] = f.coeff(k);
    }
    rows.push_back(std::move(row));
  };
  for (int s = q - j - 1; s >= 0; --s) push_shifted(P, s);
  for (int s = p - j - 1; s >= 0; --s) push_shifted(Q, s);
  return rows;
}

}  // namespace detail

// j-th subresultant of P and Q, deg Q < deg P, 0 <= j < deg Q.
template <class R>
Poly<R> subresultant(const Poly<R>& P, const Poly<R>& Q, int j) {
  auto rows = detail::subresultant_rows(P, Q, j);
  const int n = static_cast<int>(rows.size());
  const int cols = P.degree() + Q.degree() - j;
  std::vector<R> coeffs(static_cast<std::size_t>(j) + 1);
  for (int i = 0; i <= j; ++i) {
    std::vector<std::vector<R>> m(static_cast<std::size_t>(n));
    int col_i = cols - 1 - i;
    for (int r = 0; r < n; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      m[static_cast<std::size_t>(r)].assign(row.begin(), row.begin() + (n - 1));
      m[static_cast<std::size_t>(r)].push_back(row[static_cast<std::size_t>(col_i)]);
    }
    coeffs[static_cast<std::size_t>(i)] = determinant(std::move(m));
  }
  return Poly<R>(std::move(coeffs));
}

// psc_j for j = 0..deg Q, with psc_{deg Q} = lc(Q)^{deg P - deg Q - 1} (deg Q < deg P).
template <class R>
std::vector<R> principal_subresultant_coefficients(const Poly<R>& P, const Poly<R>& Q) {
  const int q = Q.degree();
  std::vector<R> out;
  for (int j = 0; j < q; ++j) {
    auto rows = detail::subresultant_rows(P, Q, j);
    const std::size_t n = rows.size();
    for (auto& row : rows) row.resize(n);
    out.push_back(determinant(std::move(rows)));
  }
  R top(1);
  for (int k = 0; k < P.degree() - q - 1; ++k) top = top * Q.leading();
  out.push_back(top);
  return out;
}

}  // namespace symcone
