#pragma once

#include <string>
#include <vector>

#include "symcone/multipoly.hpp"
#include "symcone/symfunc.hpp"

namespace symcone {

struct CriterionReport {
  std::string id;
  std::string title;
  bool pass = true;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<std::string> lines;
};

// sum_{i != j} x_i^2 x_j^2 + sum_{i, j, k distinct} x_i^2 x_j x_k - 4 x1 x2 x3 x4 in four variables.
MultiPoly choi_lam_polynomial();

// a = 1, b = -13/10, c = 1, d = -5/4 in the boundary family.
SymFormP boundary_example_form(Scope scope);

// "A1" .. "A9".
std::vector<std::string> criterion_ids();

// Accepts an id or one of the names choi-lam, boundary-example, disc-factorization, q-blocks, limit-blocks,
// limit-equality, cone-inclusion, full-dimension, round-trips. Throws std::invalid_argument otherwise.
std::string resolve_criterion(const std::string& name);

CriterionReport run_criterion(const std::string& name);

std::string format_report(const CriterionReport& r);

}  // namespace symcone
