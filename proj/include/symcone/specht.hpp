#pragma once

#include <array>
#include <vector>

#include "symcone/multipoly.hpp"
#include "symcone/partitions.hpp"
#include "symcone/symfunc.hpp"

namespace symcone {

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // entries 1..n

  bool is_valid() const;
  bool is_standard() const;
  std::vector<std::vector<int>> columns() const;
};

// Product over columns of the Vandermonde prod_{j<l} (x_{C(j)} - x_{C(l)}).
MultiPoly specht_polynomial(const Tableau& t);

constexpr int kMaxBruteForceVariables = 8;

// Orbit average over S_n; x^beta averages to m_{sort(beta)}.
SymFuncM brute_symmetrize(const MultiPoly& p, int n);

// (1/n)(x_1^i + ... + x_n^i) and products thereof, as explicit polynomials.
MultiPoly power_sum_poly(int i, int n);
MultiPoly p_lambda_poly(const Partition& lambda, int n);

// p_lambda p_mu = p_{lambda u mu}.
SymFormP multiply_p(const SymFormP& f, const SymFormP& g);

// Degree-4 symmetry-adapted blocks; entries are forms in the p basis.
struct QBlocks {
  Scope scope = Scope::limit();
  SymFormP triv;
  std::array<std::array<SymFormP, 2>, 2> hook;
  SymFormP two_two;
};

// Same blocks with coefficients rational in n.
struct QBlocksN {
  SymFormPN triv;
  std::array<std::array<SymFormPN, 2>, 2> hook;
  SymFormPN two_two;

  QBlocks at(int n) const;
  QBlocks limit() const;
};

bool operator==(const QBlocks& a, const QBlocks& b);

// Closed forms valid for every n >= 4.
QBlocksN q_blocks_symbolic();
QBlocks q_blocks(Scope scope);

// Generators (x1-x2, x1^2-x2^2) and (x1-x2)(x3-x4) in nvars variables.
std::array<MultiPoly, 2> hook_generators(int nvars);
MultiPoly two_two_generator(int nvars);

// Brute-force symmetrization of the generator products, converted at n.
QBlocks q_blocks_brute(int n);

// m-coefficients of the symmetrized generator products read as p-coefficients.
QBlocks q_blocks_infinity();

// For degree 4 and n >= 4.
std::vector<SymFormP> sigma_prime_generators(int n);

int rank_of(const std::vector<SymFormP>& forms);

}  // namespace symcone
