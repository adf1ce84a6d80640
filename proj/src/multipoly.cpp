#include "symcone/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symcone {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("MultiPoly::variable index");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly variable count mismatch");
  MultiPoly r(a.nvars_);
  MultiPoly::Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  MultiPoly r(p.nvars_);
  for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
  return r;
}

MultiPoly MultiPoly::operator-() const { return Rational(-1) * *this; }

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(nvars_, Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t *= symcone::pow(point[i], static_cast<unsigned>(e[i]));
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::map_variables(const std::vector<int>& target, int new_nvars) const {
  if (static_cast<int>(target.size()) != nvars_) throw std::invalid_argument("map_variables: target size mismatch");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(static_cast<std::size_t>(new_nvars), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(target[i])] += e[i];
    r.add_term(ne, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int index, const Rational& value) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    int k = ne[static_cast<std::size_t>(index)];
    ne[static_cast<std::size_t>(index)] = 0;
    r.add_term(ne, c * symcone::pow(value, static_cast<unsigned>(k)));
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    out << (first ? "" : " + ") << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*x" << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
    }
    first = false;
  }
  return out.str();
}

}  // namespace symcone
