#include "symcone/matrix.hpp"

namespace symcone {

int SymMat2::rank() const {
  if (is_zero()) return 0;
  return sgn(det()) == 0 ? 1 : 2;
}

std::string to_string(const SymMat2& m) {
  return "[[" + m.m11.get_str() + ", " + m.m12.get_str() + "], [" + m.m12.get_str() + ", " + m.m22.get_str() + "]]";
}

bool psd2(const SymMat2& m) { return sgn(m.m11) >= 0 && sgn(m.m22) >= 0 && sgn(m.det()) >= 0; }

Rational inner(const SymMat2& a, const SymMat2& b) { return a.m11 * b.m11 + 2 * a.m12 * b.m12 + a.m22 * b.m22; }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, m[0].size()).size());
}

std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace symcone
