#include "symcone/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace symcone {

Scope Scope::finite(int n) {
  if (n < 1) throw std::invalid_argument("variable count must be positive");
  return Scope(n);
}

int Scope::n() const {
  if (is_limit()) throw std::logic_error("LIMIT scope has no variable count");
  return n_;
}

std::string Scope::to_string() const { return is_limit() ? "limit" : std::to_string(n_); }

// ---- SymFormP -------------------------------------------------------------

SymFormP SymFormP::zero(int degree, Scope scope) {
  SymFormP f;
  f.degree = degree;
  f.coeffs.assign(partitions_of(degree).size(), Rational(0));
  f.scope = scope;
  return f;
}

SymFormP SymFormP::basis(const Partition& lambda, Scope scope) {
  SymFormP f = zero(lambda.weight(), scope);
  f.set_coeff(lambda, Rational(1));
  return f;
}

SymFormP SymFormP::quartic(const std::array<Rational, 5>& c, Scope scope) {
  SymFormP f = zero(4, scope);
  std::copy(c.begin(), c.end(), f.coeffs.begin());
  return f;
}

Rational SymFormP::coeff(const Partition& lambda) const {
  if (lambda.weight() != degree) return 0;
  return coeffs[partition_index(lambda)];
}

void SymFormP::set_coeff(const Partition& lambda, const Rational& value) {
  if (lambda.weight() != degree) throw std::invalid_argument("partition weight differs from form degree");
  coeffs[partition_index(lambda)] = value;
}

bool SymFormP::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

SymFormP SymFormP::with_scope(Scope s) const {
  SymFormP f = *this;
  f.scope = s;
  return f;
}

namespace {

void check_compatible(const SymFormP& a, const SymFormP& b) {
  if (a.degree != b.degree) throw std::invalid_argument("forms of different degree");
  if (a.scope != b.scope) throw std::invalid_argument("forms with different scopes");
}

}  // namespace

SymFormP& SymFormP::operator+=(const SymFormP& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

SymFormP& SymFormP::operator-=(const SymFormP& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

SymFormP operator*(const Rational& s, SymFormP f) {
  for (auto& c : f.coeffs) c *= s;
  return f;
}

std::string to_string(const SymFormP& f) {
  auto parts = partitions_of(f.degree);
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out << (i ? ", " : "") << "\"" << parts[i].to_string() << "\": " << f.coeffs[i].get_str();
  }
  out << "} @ " << f.scope.to_string();
  return out.str();
}

SymFormPN SymFormPN::zero(int degree) {
  SymFormPN f;
  f.degree = degree;
  f.coeffs.assign(partitions_of(degree).size(), RatFunc());
  return f;
}

SymFormP SymFormPN::at(int n) const {
  SymFormP f = SymFormP::zero(degree, Scope::finite(n));
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.coeffs[i] = coeffs[i].at(Rational(n));
  return f;
}

SymFormP SymFormPN::limit() const {
  SymFormP f = SymFormP::zero(degree, Scope::limit());
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.coeffs[i] = coeffs[i].limit();
  return f;
}

// ---- SymFuncM -------------------------------------------------------------

void SymFuncM::add(const Partition& mu, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  degree_bound = std::max(degree_bound, mu.weight());
}

RatFunc SymFuncM::coeff(const Partition& mu) const {
  auto it = terms.find(mu);
  return it == terms.end() ? RatFunc() : it->second;
}

std::string to_string(const SymFuncM& g) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [mu, c] : g.terms) {
    out << (first ? "" : ", ") << "\"" << mu.to_string() << "\": " << c.to_string();
    first = false;
  }
  out << "}";
  return out.str();
}

SymFuncM operator+(const SymFuncM& a, const SymFuncM& b) {
  SymFuncM r = a;
  for (const auto& [mu, c] : b.terms) r.add(mu, c);
  r.degree_bound = std::max(a.degree_bound, b.degree_bound);
  return r;
}

SymFuncM operator-(const SymFuncM& a, const SymFuncM& b) { return a + RatFunc(-1) * b; }

SymFuncM operator*(const RatFunc& s, const SymFuncM& a) {
  SymFuncM r;
  r.degree_bound = a.degree_bound;
  for (const auto& [mu, c] : a.terms) r.add(mu, s * c);
  return r;
}

SymFuncM power_sum(int i, Scope /*scope*/) {
  if (i < 1) throw std::invalid_argument("power_sum index must be positive");
  SymFuncM g;
  g.add(Partition({i}), RatFunc(1));
  return g;
}

namespace {

int max_weight(const SymFuncM& g) {
  int w = 0;
  for (const auto& [mu, c] : g.terms) w = std::max(w, mu.weight());
  return w;
}

// m_mu * m_nu: part j of nu lands on an occupied position of mu or on a fresh one.
// A pattern with k overlaps has probability (n - r)_{s-k} / (n)_s over uniform injections.
void multiply_monomials(const Partition& mu, const Partition& nu, const RatFunc& scale, SymFuncM& out) {
  const int r = mu.length(), s = nu.length();
  std::vector<int> assign(static_cast<std::size_t>(s), -1);
  std::vector<bool> used(static_cast<std::size_t>(r), false);
  const UniPoly denom = falling_factorial(0, s);
  std::function<void(int, int)> rec = [&](int j, int overlaps) {
    if (j == s) {
      std::vector<int> parts = mu.parts();
      for (int t = 0; t < s; ++t) {
        if (assign[static_cast<std::size_t>(t)] >= 0) {
          parts[static_cast<std::size_t>(assign[static_cast<std::size_t>(t)])] += nu[static_cast<std::size_t>(t)];
        } else {
          parts.push_back(nu[static_cast<std::size_t>(t)]);
        }
      }
      out.add(Partition(parts), scale * RatFunc(falling_factorial(r, s - overlaps), denom));
      return;
    }
    assign[static_cast<std::size_t>(j)] = -1;
    rec(j + 1, overlaps);
    for (int i = 0; i < r; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      assign[static_cast<std::size_t>(j)] = i;
      rec(j + 1, overlaps + 1);
      used[static_cast<std::size_t>(i)] = false;
    }
    assign[static_cast<std::size_t>(j)] = -1;
  };
  rec(0, 0);
}

}  // namespace

SymFuncM multiply_m(const SymFuncM& f, const SymFuncM& g) {
  if (max_weight(f) + max_weight(g) > kMaxProductDegree) throw MathError("degree overflow");
  SymFuncM out;
  for (const auto& [mu, a] : f.terms) {
    for (const auto& [nu, b] : g.terms) multiply_monomials(mu, nu, a * b, out);
  }
  out.degree_bound = std::max(f.degree_bound + g.degree_bound, max_weight(out));
  return out;
}

SymFuncM p_lambda_in_m(const Partition& lambda) {
  SymFuncM acc;
  acc.add(Partition(), RatFunc(1));
  for (int part : lambda.parts()) acc = multiply_m(acc, power_sum(part));
  acc.degree_bound = lambda.weight();
  return acc;
}

SymFuncM p_to_m(const SymFormP& f) {
  if (f.degree > kMaxProductDegree) throw MathError("degree overflow");
  auto parts = partitions_of(f.degree);
  SymFuncM out;
  out.degree_bound = f.degree;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    out = out + RatFunc(f.coeffs[i]) * p_lambda_in_m(parts[i]);
  }
  out.degree_bound = f.degree;
  return out;
}

SymFuncM p_to_m(const SymFormPN& f) {
  auto parts = partitions_of(f.degree);
  SymFuncM out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    out = out + f.coeffs[i] * p_lambda_in_m(parts[i]);
  }
  out.degree_bound = f.degree;
  return out;
}

namespace {

int homogeneous_weight(const SymFuncM& g) {
  int k = -1;
  for (const auto& [mu, c] : g.terms) {
    if (k >= 0 && mu.weight() != k) throw std::invalid_argument("m_to_p needs a homogeneous function");
    k = mu.weight();
  }
  return k < 0 ? g.degree_bound : k;
}

// Solves g = sum_lambda c_lambda p_lambda; the m_mu-coefficient of p_lambda vanishes
// unless mu coarsens lambda, so longer partitions are resolved first.
template <class K, class Entry>
std::vector<K> solve_transition(const std::vector<Partition>& parts, const std::vector<K>& rhs, Entry entry) {
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return parts[a].length() > parts[b].length(); });
  std::vector<K> c(parts.size());
  std::vector<std::size_t> done;
  for (std::size_t mu : order) {
    K acc = rhs[mu];
    for (std::size_t lam : done) acc = acc - c[lam] * entry(lam, mu);
    c[mu] = acc / entry(mu, mu);
    done.push_back(mu);
  }
  return c;
}

}  // namespace

SymFormPN m_to_p_symbolic(const SymFuncM& g) {
  const int k = homogeneous_weight(g);
  auto parts = partitions_of(k);
  std::vector<SymFuncM> rows;
  for (const auto& lam : parts) rows.push_back(p_lambda_in_m(lam));
  std::vector<RatFunc> rhs;
  for (const auto& mu : parts) rhs.push_back(g.coeff(mu));
  SymFormPN out;
  out.degree = k;
  out.coeffs = solve_transition<RatFunc>(parts, rhs, [&](std::size_t lam, std::size_t mu) { return rows[lam].coeff(parts[mu]); });
  return out;
}

SymFormP m_to_p(const SymFuncM& g, Scope scope) {
  if (scope.is_limit()) return m_to_p_symbolic(g).limit();
  const int k = homogeneous_weight(g);
  const Rational n(scope.n());
  if (scope.n() < k) throw std::invalid_argument("m_to_p needs n at least the degree");
  auto parts = partitions_of(k);
  std::vector<std::vector<Rational>> table;
  for (const auto& lam : parts) {
    SymFuncM row = p_lambda_in_m(lam);
    std::vector<Rational> vals;
    for (const auto& mu : parts) vals.push_back(row.coeff(mu).at(n));
    table.push_back(std::move(vals));
  }
  std::vector<Rational> rhs;
  for (const auto& mu : parts) rhs.push_back(g.coeff(mu).at(n));
  SymFormP out = SymFormP::zero(k, scope);
  out.coeffs = solve_transition<Rational>(parts, rhs, [&](std::size_t lam, std::size_t mu) { return table[lam][mu]; });
  return out;
}

// ---- evaluation -----------------------------------------------------------

Rational evaluate_m(const Partition& mu, const std::vector<Rational>& point) {
  const int n = static_cast<int>(point.size());
  const int r = mu.length();
  if (r > n) throw std::invalid_argument("m_mu needs at least as many variables as parts");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<Rational(int)> rec = [&](int i) -> Rational {
    if (i == r) return Rational(1);
    Rational total = 0;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      total += pow(point[static_cast<std::size_t>(v)], static_cast<unsigned>(mu[static_cast<std::size_t>(i)])) * rec(i + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
    return total;
  };
  return rec(0) / falling_factorial(0, r)(Rational(n));
}

Rational evaluate(const SymFuncM& g, const std::vector<Rational>& point) {
  const Rational n(static_cast<long>(point.size()));
  Rational total = 0;
  for (const auto& [mu, c] : g.terms) {
    Rational cn = c.at(n);
    // m_mu with more parts than variables only appears with a vanishing coefficient.
    if (sgn(cn) != 0) total += cn * evaluate_m(mu, point);
  }
  return total;
}

Rational evaluate(const SymFormP& f, const std::vector<Rational>& point) {
  if (f.scope.is_limit()) throw std::invalid_argument("cannot evaluate a LIMIT-scope form at a point");
  if (static_cast<int>(point.size()) != f.scope.n()) throw std::invalid_argument("point dimension differs from n");
  const Rational n(f.scope.n());
  std::vector<Rational> p(static_cast<std::size_t>(f.degree) + 1);
  for (int i = 1; i <= f.degree; ++i) {
    Rational s = 0;
    for (const auto& x : point) s += pow(x, static_cast<unsigned>(i));
    p[static_cast<std::size_t>(i)] = s / n;
  }
  auto parts = partitions_of(f.degree);
  Rational total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Rational term = f.coeffs[i];
    for (int part : parts[i].parts()) term *= p[static_cast<std::size_t>(part)];
    total += term;
  }
  return total;
}

MultiPoly phi_form(const SymFormP& f) {
  if (f.degree % 2 != 0) throw std::invalid_argument("phi_form needs an even degree");
  const int d = f.degree / 2;
  const int nv = 2 * d;
  auto parts = partitions_of(f.degree);
  MultiPoly total(nv);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    MultiPoly term = MultiPoly::constant(nv, f.coeffs[i]);
    for (int part : parts[i].parts()) {
      MultiPoly factor(nv);
      for (int j = 0; j < d; ++j) {
        MultiPoly::Exponents e(static_cast<std::size_t>(nv), 0);
        e[static_cast<std::size_t>(j)] = 1;
        e[static_cast<std::size_t>(d + j)] = part;
        factor.add_term(e, Rational(1));
      }
      term = term * factor;
    }
    total += term;
  }
  return total;
}

std::array<UniPoly, 5> restrict_alpha_poly(const SymFormP& f) {
  if (f.degree != 4) throw std::invalid_argument("restrict_alpha needs a quartic");
  const UniPoly alpha = UniPoly::x();
  const UniPoly beta = UniPoly::constant(Rational(1)) - alpha;
  auto parts = partitions_of(4);
  std::array<UniPoly, 5> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    // Index = exponent of y in a binary form of fixed total degree.
    std::vector<UniPoly> form{UniPoly::constant(f.coeffs[i])};
    for (int a : parts[i].parts()) {
      std::vector<UniPoly> next(form.size() + static_cast<std::size_t>(a));
      for (std::size_t k = 0; k < form.size(); ++k) {
        next[k] += form[k] * alpha;
        next[k + static_cast<std::size_t>(a)] += form[k] * beta;
      }
      form = std::move(next);
    }
    for (std::size_t k = 0; k < 5; ++k) out[k] += form[k];
  }
  return out;
}

BinaryQuartic restrict_alpha(const SymFormP& f, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0, 1]");
  auto polys = restrict_alpha_poly(f);
  BinaryQuartic h;
  for (std::size_t k = 0; k < 5; ++k) h.c[k] = polys[k](alpha);
  return h;
}

}  // namespace symcone
