#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "symcone/multipoly.hpp"
#include "symcone/partitions.hpp"
#include "symcone/symfunc.hpp"

namespace symcone {

class FormFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Basis { P, M, Monomial };

std::string to_string(Basis b);

// JSON document, // comments allowed:
//   {"degree": 4, "basis": "p" | "m" | "monomial", "scope": <n> | "limit",
//    "coefficients": {"2,1,1": "-13/10", ...},
//    "monomials": [{"coefficient": "1", "exponents": [2, 2, 0, 0]}, ...],
//    "description": "..."}
// "coefficients" is required for p and m, "monomials" for monomial; scope and description are optional.
struct FormFile {
  int degree = 4;
  Basis basis = Basis::P;
  std::optional<Scope> scope;
  std::map<Partition, Rational> coefficients;
  std::optional<MultiPoly> monomials;
  std::string description;
};

FormFile parse_form_file(const std::string& text);
FormFile read_form_file(const std::string& path);
std::string write_form_file(const FormFile& f);

FormFile form_file_from(const SymFormP& f);
// Throws FormFileError when a coefficient depends on n.
FormFile form_file_from(const SymFuncM& g, int degree, Scope scope);

// Monomial input is symmetrized over n = scope.n() variables first; LIMIT needs p or m input.
SymFormP form_to_p(const FormFile& f, Scope scope);
SymFuncM form_to_m(const FormFile& f, Scope scope);

}  // namespace symcone
