#pragma once

#include <optional>

#include "symcone/dualcone.hpp"
#include "symcone/matrix.hpp"
#include "symcone/roots.hpp"
#include "symcone/symfunc.hpp"

namespace symcone {

// f = a11 p1111 + 2 a12 p211 + a22 p22 + b11 (p211 - p1111) + 2 b12 (p31 - p211) + b22 (p4 - p22) + gamma G_n
// with G_n = 1/2 p1111 - p211 + (n^2-3n+3)/(2n^2) p22 + (2n-2)/n^2 p31 + (1-n)/(2n^2) p4.
struct SosCertificate {
  Scope scope = Scope::limit();
  SymMat2 a;  // [[a11, a12], [a12, a22]]
  SymMat2 b;  // [[b11, b12], [b12, b22]]
  Rational gamma;
};

std::string to_string(const SosCertificate& c);

struct SosVerdict {
  bool in = false;
  // False when the only feasible gamma is irrational; the certificate then holds a rational
  // gamma inside `gamma_interval` and does not re-expand to f exactly.
  bool exact = true;
  std::optional<SosCertificate> certificate;
  std::optional<IsolatingInterval> gamma_interval;
  UniPoly gamma_polynomial;
  std::optional<DualFunctional> separator;
};

// The (n-2,2) generator G_n; zero-order terms of its limit are (0, 0, 1/2, -1, 1/2).
SymFormP two_two_generator_form(Scope scope);

// Throws for a LIMIT certificate with gamma != 0.
SymFormP expand_certificate(const SosCertificate& c);

bool certificate_valid(const SosCertificate& c);

// Degree 4, n >= 4. The separator search runs on OUT when requested.
SosVerdict sos_membership(const SymFormP& f, bool find_separator = true);
SosVerdict sos_membership_limit(const SymFormP& f);

// A dual member with l(f) < 0: point evaluations, the two-parameter family, the odd-n functional.
std::optional<DualFunctional> find_separating_functional(const SymFormP& f);

}  // namespace symcone
