#include "symcone/specht.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "symcone/matrix.hpp"

namespace symcone {

bool Tableau::is_valid() const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  std::set<int> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[i]) return false;
    for (int v : rows[i]) seen.insert(v);
  }
  const int n = shape.weight();
  return static_cast<int>(seen.size()) == n && (n == 0 || (*seen.begin() == 1 && *seen.rbegin() == n));
}

bool Tableau::is_standard() const {
  if (!is_valid()) return false;
  for (const auto& row : rows) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  for (const auto& col : columns()) {
    if (!std::is_sorted(col.begin(), col.end())) return false;
  }
  return true;
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(row[c]);
    }
  }
  return cols;
}

MultiPoly specht_polynomial(const Tableau& t) {
  if (!t.is_valid()) throw std::invalid_argument("invalid tableau");
  const int n = t.shape.weight();
  MultiPoly result = MultiPoly::constant(n, Rational(1));
  for (const auto& col : t.columns()) {
    for (std::size_t j = 0; j < col.size(); ++j) {
      for (std::size_t l = j + 1; l < col.size(); ++l) {
        result = result * (MultiPoly::variable(n, col[j] - 1) - MultiPoly::variable(n, col[l] - 1));
      }
    }
  }
  return result;
}

SymFuncM brute_symmetrize(const MultiPoly& p, int n) {
  if (n > kMaxBruteForceVariables) throw MathError("too large for brute force");
  if (p.nvars() > n) throw std::invalid_argument("polynomial uses more variables than n");
  SymFuncM out;
  out.degree_bound = std::max(0, p.total_degree());
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> parts;
    for (int v : e) {
      if (v > 0) parts.push_back(v);
    }
    out.add(Partition(parts), RatFunc(c));
  }
  return out;
}

MultiPoly power_sum_poly(int i, int n) {
  MultiPoly p(n);
  for (int j = 0; j < n; ++j) {
    MultiPoly::Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = i;
    p.add_term(e, Rational(1, n));
  }
  return p;
}

MultiPoly p_lambda_poly(const Partition& lambda, int n) {
  MultiPoly p = MultiPoly::constant(n, Rational(1));
  for (int part : lambda.parts()) p = p * power_sum_poly(part, n);
  return p;
}

SymFormP multiply_p(const SymFormP& f, const SymFormP& g) {
  if (f.scope != g.scope) throw std::invalid_argument("forms with different scopes");
  SymFormP out = SymFormP::zero(f.degree + g.degree, f.scope);
  auto pf = partitions_of(f.degree), pg = partitions_of(g.degree);
  for (std::size_t i = 0; i < pf.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < pg.size(); ++j) {
      if (sgn(g.coeffs[j]) == 0) continue;
      std::vector<int> parts = pf[i].parts();
      parts.insert(parts.end(), pg[j].parts().begin(), pg[j].parts().end());
      Partition lam(parts);
      out.set_coeff(lam, out.coeff(lam) + f.coeffs[i] * g.coeffs[j]);
    }
  }
  return out;
}

QBlocks QBlocksN::at(int n) const {
  if (n < 4) throw std::invalid_argument("q_blocks needs n >= 4");
  QBlocks q;
  q.scope = Scope::finite(n);
  q.triv = triv.at(n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q.hook[i][j] = hook[i][j].at(n);
  q.two_two = two_two.at(n);
  return q;
}

QBlocks QBlocksN::limit() const {
  QBlocks q;
  q.scope = Scope::limit();
  q.triv = triv.limit();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q.hook[i][j] = hook[i][j].limit();
  q.two_two = two_two.limit();
  return q;
}

bool operator==(const QBlocks& a, const QBlocks& b) {
  return a.triv == b.triv && a.hook == b.hook && a.two_two == b.two_two;
}

QBlocksN q_blocks_symbolic() {
  const RatFunc n = RatFunc::n();
  const RatFunc one(1);
  QBlocksN q;
  q.triv = SymFormPN::zero(0);
  q.triv.coeffs[0] = one;

  const RatFunc hook_scale = RatFunc(2) * n / (n - one);
  auto scaled = [&](int degree, std::vector<long> pattern, const RatFunc& s) {
    SymFormPN f = SymFormPN::zero(degree);
    for (std::size_t i = 0; i < pattern.size(); ++i) f.coeffs[i] = s * RatFunc(pattern[i]);
    return f;
  };
  q.hook[0][0] = scaled(2, {1, -1}, hook_scale);
  q.hook[0][1] = scaled(3, {1, -1, 0}, hook_scale);
  q.hook[1][0] = q.hook[0][1];
  q.hook[1][1] = scaled(4, {1, 0, -1, 0, 0}, hook_scale);

  const RatFunc n2 = n * n;
  const RatFunc s22 = RatFunc(8) * n2 * n / ((n - one) * (n - RatFunc(2)) * (n - RatFunc(3)));
  q.two_two = SymFormPN::zero(4);
  q.two_two.coeffs = {s22 * (one - n) / (RatFunc(2) * n2), s22 * (RatFunc(2) * n - RatFunc(2)) / n2,
                      s22 * (n2 - RatFunc(3) * n + RatFunc(3)) / (RatFunc(2) * n2), s22 * RatFunc(-1),
                      s22 * RatFunc(Rational(1, 2))};
  return q;
}

QBlocks q_blocks(Scope scope) {
  QBlocksN q = q_blocks_symbolic();
  return scope.is_limit() ? q.limit() : q.at(scope.n());
}

std::array<MultiPoly, 2> hook_generators(int nvars) {
  MultiPoly x1 = MultiPoly::variable(nvars, 0), x2 = MultiPoly::variable(nvars, 1);
  return {x1 - x2, x1 * x1 - x2 * x2};
}

MultiPoly two_two_generator(int nvars) {
  auto x = [&](int i) { return MultiPoly::variable(nvars, i); };
  return (x(0) - x(1)) * (x(2) - x(3));
}

namespace {

template <class Convert>
QBlocks blocks_from_generators(int nvars, Scope scope, Convert convert) {
  QBlocks q;
  q.scope = scope;
  q.triv = convert(brute_symmetrize(MultiPoly::constant(nvars, Rational(1)), nvars));
  auto g = hook_generators(nvars);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q.hook[i][j] = convert(brute_symmetrize(g[i] * g[j], nvars));
  MultiPoly t = two_two_generator(nvars);
  q.two_two = convert(brute_symmetrize(t * t, nvars));
  return q;
}

}  // namespace

QBlocks q_blocks_brute(int n) {
  Scope scope = Scope::finite(n);
  return blocks_from_generators(n, scope, [&](const SymFuncM& g) { return m_to_p(g, scope); });
}

QBlocks q_blocks_infinity() {
  return blocks_from_generators(4, Scope::limit(), [](const SymFuncM& g) {
    SymFormP f = SymFormP::zero(g.degree_bound, Scope::limit());
    for (const auto& [mu, c] : g.terms) f.set_coeff(mu, c.at(0));
    return f;
  });
}

std::vector<SymFormP> sigma_prime_generators(int n) {
  if (n < 4) throw std::invalid_argument("sigma_prime_generators needs n >= 4");
  const Scope scope = Scope::finite(n);
  auto p = [&](std::vector<int> parts) { return SymFormP::basis(Partition(std::move(parts)), scope); };
  std::vector<SymFormP> out;
  for (const auto& mu1 : partitions_of(2))
    for (const auto& mu2 : partitions_of(2)) out.push_back(multiply_p(SymFormP::basis(mu1, scope), SymFormP::basis(mu2, scope)));
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      SymFormP core = p({a + b}) - multiply_p(p({a}), p({b}));
      for (const auto& mu1 : partitions_of(2 - a))
        for (const auto& mu2 : partitions_of(2 - b))
          out.push_back(multiply_p(multiply_p(core, SymFormP::basis(mu1, scope)), SymFormP::basis(mu2, scope)));
    }
  }
  return out;
}

int rank_of(const std::vector<SymFormP>& forms) {
  Matrix m;
  for (const auto& f : forms) m.push_back(f.coeffs);
  return rank(m);
}

}  // namespace symcone
