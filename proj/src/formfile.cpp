#include "symcone/formfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "symcone/specht.hpp"

namespace symcone {

using nlohmann::json;

std::string to_string(Basis b) {
  switch (b) {
    case Basis::P:
      return "p";
    case Basis::M:
      return "m";
    case Basis::Monomial:
      return "monomial";
  }
  return "";
}

namespace {

Rational rational_field(const json& v, const std::string& where) {
  if (!v.is_string()) throw FormFileError(where + ": coefficients are exact rational strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw FormFileError(where + ": " + e.what());
  }
}

Basis parse_basis(const json& v) {
  if (!v.is_string()) throw FormFileError("basis must be \"p\", \"m\" or \"monomial\"");
  const auto s = v.get<std::string>();
  if (s == "p") return Basis::P;
  if (s == "m") return Basis::M;
  if (s == "monomial") return Basis::Monomial;
  throw FormFileError("unknown basis \"" + s + "\"");
}

Scope parse_scope(const json& v) {
  if (v.is_string() && v.get<std::string>() == "limit") return Scope::limit();
  if (v.is_number_integer()) {
    const auto n = v.get<long>();
    if (n < 1 || n > 1000) throw FormFileError("scope must be a positive variable count or \"limit\"");
    return Scope::finite(static_cast<int>(n));
  }
  throw FormFileError("scope must be an integer or \"limit\"");
}

}  // namespace

FormFile parse_form_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw FormFileError(std::string("malformed form file: ") + e.what());
  }
  if (!doc.is_object()) throw FormFileError("form file must be a JSON object");
  static const std::set<std::string> known{"degree", "basis", "scope", "coefficients", "monomials", "description"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw FormFileError("unknown field \"" + key + "\"");
  }
  FormFile f;
  if (!doc.contains("degree") || !doc["degree"].is_number_integer()) throw FormFileError("degree must be an integer");
  f.degree = doc["degree"].get<int>();
  if (f.degree < 0 || f.degree > 8) throw FormFileError("degree out of range");
  if (!doc.contains("basis")) throw FormFileError("missing field \"basis\"");
  f.basis = parse_basis(doc["basis"]);
  if (doc.contains("scope")) f.scope = parse_scope(doc["scope"]);
  if (doc.contains("description")) {
    if (!doc["description"].is_string()) throw FormFileError("description must be a string");
    f.description = doc["description"].get<std::string>();
  }
  if (f.basis == Basis::Monomial) {
    if (doc.contains("coefficients")) throw FormFileError("monomial input takes \"monomials\", not \"coefficients\"");
    if (!doc.contains("monomials") || !doc["monomials"].is_array() || doc["monomials"].empty())
      throw FormFileError("monomial input needs a nonempty \"monomials\" list");
    std::optional<std::size_t> nvars;
    MultiPoly poly;
    for (const auto& term : doc["monomials"]) {
      if (!term.is_object() || term.size() != 2 || !term.contains("coefficient") || !term.contains("exponents"))
        throw FormFileError("each monomial is {\"coefficient\": ..., \"exponents\": [...]}");
      const auto& e = term["exponents"];
      if (!e.is_array() || e.empty()) throw FormFileError("exponents must be a nonempty list");
      MultiPoly::Exponents exps;
      int total = 0;
      for (const auto& x : e) {
        if (!x.is_number_integer() || x.get<int>() < 0) throw FormFileError("exponents are nonnegative integers");
        exps.push_back(x.get<int>());
        total += exps.back();
      }
      if (total != f.degree) throw FormFileError("monomial degree differs from the declared degree");
      if (nvars && *nvars != exps.size()) throw FormFileError("monomials must share one variable count");
      if (!nvars) {
        nvars = exps.size();
        poly = MultiPoly(static_cast<int>(exps.size()));
      }
      poly.add_term(exps, rational_field(term["coefficient"], "monomial coefficient"));
    }
    f.monomials = poly;
    return f;
  }
  if (doc.contains("monomials")) throw FormFileError("\"monomials\" is only valid with basis \"monomial\"");
  if (!doc.contains("coefficients") || !doc["coefficients"].is_object())
    throw FormFileError("missing \"coefficients\" object");
  for (const auto& [key, value] : doc["coefficients"].items()) {
    Partition lambda;
    try {
      lambda = Partition::parse(key);
    } catch (const std::exception& e) {
      throw FormFileError("bad partition \"" + key + "\": " + e.what());
    }
    if (lambda.to_string() != key) throw FormFileError("partition \"" + key + "\" must list parts in descending order");
    if (lambda.weight() != f.degree) throw FormFileError("partition \"" + key + "\" does not have the declared degree");
    if (f.coefficients.count(lambda)) throw FormFileError("duplicate partition \"" + key + "\"");
    f.coefficients[lambda] = rational_field(value, "coefficient of \"" + key + "\"");
  }
  return f;
}

FormFile read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormFileError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_form_file(text.str());
}

std::string write_form_file(const FormFile& f) {
  json doc = json::object();
  doc["degree"] = f.degree;
  doc["basis"] = to_string(f.basis);
  if (f.scope) {
    if (f.scope->is_limit()) {
      doc["scope"] = "limit";
    } else {
      doc["scope"] = f.scope->n();
    }
  }
  if (!f.description.empty()) doc["description"] = f.description;
  if (f.basis == Basis::Monomial) {
    json terms = json::array();
    if (f.monomials) {
      for (const auto& [e, c] : f.monomials->terms()) terms.push_back({{"coefficient", to_string(c)}, {"exponents", e}});
    }
    doc["monomials"] = terms;
  } else {
    // Partition order, heaviest first, kept stable by an ordered json object.
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& lambda : partitions_of(f.degree)) {
      auto it = f.coefficients.find(lambda);
      coeffs[lambda.to_string()] = to_string(it == f.coefficients.end() ? Rational(0) : it->second);
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& key : {"degree", "basis", "scope", "description"}) {
      if (doc.contains(key)) out[key] = doc[key];
    }
    out["coefficients"] = coeffs;
    return out.dump(2) + "\n";
  }
  return doc.dump(2) + "\n";
}

FormFile form_file_from(const SymFormP& f) {
  FormFile out;
  out.degree = f.degree;
  out.basis = Basis::P;
  out.scope = f.scope;
  const auto parts = partitions_of(f.degree);
  for (std::size_t i = 0; i < parts.size(); ++i) out.coefficients[parts[i]] = f.coeffs[i];
  return out;
}

FormFile form_file_from(const SymFuncM& g, int degree, Scope scope) {
  FormFile out;
  out.degree = degree;
  out.basis = Basis::M;
  out.scope = scope;
  for (const auto& lambda : partitions_of(degree)) {
    RatFunc c = g.coeff(lambda);
    if (!c.is_constant()) throw FormFileError("m-coefficient of " + lambda.to_string() + " depends on n");
    out.coefficients[lambda] = c.at(Rational(1));
  }
  return out;
}

namespace {

SymFuncM m_from_file(const FormFile& f) {
  SymFuncM g;
  g.degree_bound = f.degree;
  for (const auto& [lambda, c] : f.coefficients) {
    if (sgn(c) != 0) g.add(lambda, RatFunc(c));
  }
  return g;
}

SymFuncM symmetrized(const FormFile& f, Scope scope) {
  if (scope.is_limit()) throw FormFileError("monomial input needs a finite variable count");
  if (f.monomials->nvars() > scope.n()) throw FormFileError("monomial input uses more variables than n");
  MultiPoly p = f.monomials->nvars() == scope.n()
                    ? *f.monomials
                    : f.monomials->map_variables([&] {
                        std::vector<int> t(f.monomials->nvars());
                        for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
                        return t;
                      }(), scope.n());
  return brute_symmetrize(p, scope.n());
}

}  // namespace

SymFormP form_to_p(const FormFile& f, Scope scope) {
  switch (f.basis) {
    case Basis::P: {
      SymFormP out = SymFormP::zero(f.degree, scope);
      for (const auto& [lambda, c] : f.coefficients) out.set_coeff(lambda, c);
      return out;
    }
    case Basis::M:
      return m_to_p(m_from_file(f), scope);
    case Basis::Monomial:
      return m_to_p(symmetrized(f, scope), scope);
  }
  throw FormFileError("unknown basis");
}

SymFuncM form_to_m(const FormFile& f, Scope scope) {
  switch (f.basis) {
    case Basis::P: {
      SymFuncM g = p_to_m(form_to_p(f, scope));
      // Specialize the n-dependent coefficients at n or take their limits.
      SymFuncM out;
      out.degree_bound = g.degree_bound;
      for (const auto& [mu, c] : g.terms) {
        Rational v = scope.is_limit() ? c.limit() : c.at(Rational(scope.n()));
        if (sgn(v) != 0) out.add(mu, RatFunc(v));
      }
      return out;
    }
    case Basis::M:
      return m_from_file(f);
    case Basis::Monomial:
      return symmetrized(f, scope);
  }
  throw FormFileError("unknown basis");
}

}  // namespace symcone
