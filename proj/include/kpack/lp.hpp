#pragma once

#include <string>
#include <vector>

#include "kpack/graph.hpp"
#include "kpack/rational.hpp"

namespace kpack {

// Packing LP: maximize 1.x subject to Ax <= 1, x >= 0, with a 0/1 constraint
// matrix given row-wise. Row i lists the variables covering edge i.
struct PackingLP {
  int num_vars = 0;
  std::vector<std::vector<int>> rows;  // sorted, duplicate-free variable lists
};

// Rows follow g.edges() order; variable j is copies[j].
PackingLP build_packing_lp(const Graph& g, int k, const std::vector<CliqueCopy>& copies);

enum class LPStatus { optimal, internal_error };

struct LPSolution {
  LPStatus status = LPStatus::optimal;
  Rational value;
  std::vector<Rational> assignment;  // one per variable
  std::vector<Rational> duals;       // one per row; the optimality certificate
};

// Exact primal simplex, Bland's smallest-index rule, arbitrary-precision
// rationals throughout the tableau. The returned solution carries dual prices
// and has been certified: duals nonnegative, every variable's covering prices
// sum to >= 1, complementary slackness, and primal value == dual value.
LPSolution solve_exact(const PackingLP& lp);

struct FloatSolution {
  double value = 0.0;
  std::vector<double> assignment;
  long iterations = 0;
};

// Revised simplex with partial pricing; iteration cap 50*(num_vars+num_rows).
FloatSolution solve_float(const PackingLP& lp, double tol);

// Independent feasibility/arithmetic checker (exact arithmetic).
ValidityReport check_solution(const PackingLP& lp, const LPSolution& sol);
// Float variant: bounds and row sums within tol.
ValidityReport check_solution(const PackingLP& lp, const FloatSolution& sol, double tol);

// Textual LP-format dump (objective, constraints, bounds) for cross-checking
// against external solvers.
std::string dump_lp(const PackingLP& lp);

// Throws ParamError when the LP violates its structural invariants.
void validate_lp(const PackingLP& lp);

}  // namespace kpack
