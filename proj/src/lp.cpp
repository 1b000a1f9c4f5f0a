#include "kpack/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kpack {

void validate_lp(const PackingLP& lp) {
  if (lp.num_vars < 0) throw ParamError("negative variable count");
  std::vector<char> covered(static_cast<std::size_t>(lp.num_vars), 0);
  for (const auto& row : lp.rows) {
    int prev = -1;
    for (int j : row) {
      if (j < 0 || j >= lp.num_vars) throw ParamError("row references unknown variable");
      if (j <= prev) throw ParamError("row variable list not sorted/duplicate-free");
      prev = j;
      covered[static_cast<std::size_t>(j)] = 1;
    }
  }
  for (int j = 0; j < lp.num_vars; ++j)
    if (!covered[static_cast<std::size_t>(j)])
      throw ParamError("variable " + std::to_string(j) + " appears in no row");
}

PackingLP build_packing_lp(const Graph& g, int k, const std::vector<CliqueCopy>& copies) {
  PackingLP lp;
  lp.num_vars = static_cast<int>(copies.size());
  lp.rows.assign(static_cast<std::size_t>(g.num_edges()), {});
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& c = copies[static_cast<std::size_t>(j)];
    if (static_cast<int>(c.size()) != k || !is_clique(g, c))
      throw ParamError("copy " + std::to_string(j) + " is not a K_" + std::to_string(k));
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        lp.rows[static_cast<std::size_t>(g.edge_index(c[a], c[b]))].push_back(j);
  }
  return lp;
}

namespace {

// Re-derives optimality from scratch: primal feasibility, dual feasibility,
// complementary slackness and equal objective values. Throws on any failure;
// a certified solution is the function's only way out.
void certify(const PackingLP& lp, const LPSolution& sol) {
  const Rational one(1);
  Rational primal, dual;
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& x = sol.assignment[static_cast<std::size_t>(j)];
    if (x.sign() < 0 || x > one) throw SolverError("certificate: variable out of [0,1]");
    primal += x;
  }
  std::vector<Rational> price_sum(static_cast<std::size_t>(lp.num_vars));
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& y = sol.duals[i];
    if (y.sign() < 0) throw SolverError("certificate: negative dual price");
    dual += y;
    Rational rowsum;
    for (int j : lp.rows[i]) {
      rowsum += sol.assignment[static_cast<std::size_t>(j)];
      price_sum[static_cast<std::size_t>(j)] += y;
    }
    if (rowsum > one) throw SolverError("certificate: row sum exceeds 1");
    if (y.sign() > 0 && rowsum != one)
      throw SolverError("certificate: positive price on slack row");
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& ps = price_sum[static_cast<std::size_t>(j)];
    if (ps < one) throw SolverError("certificate: dual constraint violated");
    if (sol.assignment[static_cast<std::size_t>(j)].sign() > 0 && ps != one)
      throw SolverError("certificate: complementary slackness violated");
  }
  if (primal != dual || primal != sol.value)
    throw SolverError("certificate: objective mismatch");
}

}  // namespace

LPSolution solve_exact(const PackingLP& lp) {
  validate_lp(lp);
  const int m = static_cast<int>(lp.rows.size());
  const int nv = lp.num_vars;
  const std::size_t ncols = static_cast<std::size_t>(nv + m);  // variables then slacks
  const std::size_t rhs = ncols;
  LPSolution sol;
  sol.assignment.assign(static_cast<std::size_t>(nv), Rational(0));
  sol.duals.assign(static_cast<std::size_t>(m), Rational(0));
  if (nv == 0) {
    sol.value = Rational(0);
    certify(lp, sol);
    return sol;
  }

  // Integer pivoting: every tableau entry is an integer over one shared
  // positive determinant, updated by the fraction-free rule
  //   A'[i][j] = (A[i][j]*piv - A[i][c]*A[r][j]) / det
  // whose division is exact (Sylvester identity). This keeps GMP work on
  // plain integers instead of gcd-normalizing rationals at every step.
  std::vector<std::vector<mpz_class>> tab(
      static_cast<std::size_t>(m), std::vector<mpz_class>(ncols + 1));
  std::vector<mpz_class> cost(ncols + 1);  // z_j - c_j, scaled by det
  mpz_class det = 1;
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto& row = tab[static_cast<std::size_t>(i)];
    for (int j : lp.rows[static_cast<std::size_t>(i)]) row[static_cast<std::size_t>(j)] = 1;
    row[static_cast<std::size_t>(nv + i)] = 1;
    row[rhs] = 1;
    basis[static_cast<std::size_t>(i)] = nv + i;
  }
  for (int j = 0; j < nv; ++j) cost[static_cast<std::size_t>(j)] = -1;

  mpz_class t1, t2;
  while (true) {
    // Bland: entering column is the smallest index with negative cost entry.
    int enter = -1;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = static_cast<int>(j);
        break;
      }
    }
    if (enter < 0) break;
    const std::size_t c = static_cast<std::size_t>(enter);

    // Ratio test on b_i / A[i][c], ties by smallest basis index (Bland).
    int leave = -1;
    for (int i = 0; i < m; ++i) {
      const auto& row = tab[static_cast<std::size_t>(i)];
      if (sgn(row[c]) <= 0) continue;
      if (leave < 0) {
        leave = i;
        continue;
      }
      const auto& lrow = tab[static_cast<std::size_t>(leave)];
      t1 = row[rhs] * lrow[c];
      t2 = lrow[rhs] * row[c];
      if (t1 < t2 || (t1 == t2 && basis[static_cast<std::size_t>(i)] <
                                      basis[static_cast<std::size_t>(leave)]))
        leave = i;
    }
    if (leave < 0) throw SolverError("packing LP reported unbounded");

    const auto& prow = tab[static_cast<std::size_t>(leave)];
    const mpz_class piv = prow[c];  // > 0, becomes the next determinant
    auto update_row = [&](std::vector<mpz_class>& row) {
      const mpz_class factor = row[c];
      if (sgn(factor) == 0) {
        if (piv == det) return;  // rescale by piv/det would be the identity
        for (std::size_t j = 0; j <= ncols; ++j) {
          if (sgn(row[j]) == 0) continue;
          row[j] *= piv;
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), det.get_mpz_t());
        }
      } else {
        for (std::size_t j = 0; j <= ncols; ++j) {
          if (sgn(row[j]) == 0 && sgn(prow[j]) == 0) continue;
          row[j] *= piv;
          mpz_submul(row[j].get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
          if (sgn(row[j]) != 0)
            mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), det.get_mpz_t());
        }
      }
    };
    for (int i = 0; i < m; ++i)
      if (i != leave) update_row(tab[static_cast<std::size_t>(i)]);
    update_row(cost);
    det = piv;  // pivot row keeps its entries; its denominator is now det
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  // Invariant: every row (and the cost row) is scaled by the same det.
  for (int i = 0; i < m; ++i) {
    const auto& row = tab[static_cast<std::size_t>(i)];
    if (basis[static_cast<std::size_t>(i)] < nv)
      sol.assignment[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
          Rational(row[rhs], det);
    // cost[] holds z_j - c_j; slack costs are zero, so the slack entries are
    // exactly the dual prices, and the rhs entry is the objective value.
    sol.duals[static_cast<std::size_t>(i)] =
        Rational(cost[static_cast<std::size_t>(nv + i)], det);
  }
  sol.value = Rational(cost[rhs], det);
  sol.status = LPStatus::optimal;
  certify(lp, sol);
  return sol;
}

FloatSolution solve_float(const PackingLP& lp, double tol) {
  if (tol <= 0) throw ParamError("tolerance must be positive");
  validate_lp(lp);
  const int m = static_cast<int>(lp.rows.size());
  const int nv = lp.num_vars;
  FloatSolution out;
  out.assignment.assign(static_cast<std::size_t>(nv), 0.0);
  if (nv == 0 || m == 0) return out;

  const int ncols = nv + m;
  const long cap = 50L * (nv + m);
  const double eps_price = std::min(1e-9, tol / 10);
  const double eps_pivot = 1e-11;
  // Pricing window: large enough that the basis update, not pricing,
  // dominates each iteration; myopic windows inflate the iteration count.
  const int block = std::max(1024, (nv + m) / 8);

  // Column access: structural column j has unit entries at its covering rows.
  std::vector<int> basis(static_cast<std::size_t>(m));
  std::vector<char> in_basis(static_cast<std::size_t>(ncols), 0);
  for (int i = 0; i < m; ++i) {
    basis[static_cast<std::size_t>(i)] = nv + i;
    in_basis[static_cast<std::size_t>(nv + i)] = 1;
  }
  Eigen::MatrixXd binv = Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd xb = Eigen::VectorXd::Ones(m);

  // Var -> rows view (built once).
  std::vector<std::vector<int>> var_rows(static_cast<std::size_t>(nv));
  for (int i = 0; i < m; ++i)
    for (int j : lp.rows[static_cast<std::size_t>(i)])
      var_rows[static_cast<std::size_t>(j)].push_back(i);

  auto rebuild_binv = [&]() {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      const int col = basis[static_cast<std::size_t>(i)];
      if (col >= nv)
        b(col - nv, i) = 1.0;
      else
        for (int r : var_rows[static_cast<std::size_t>(col)]) b(r, i) = 1.0;
    }
    binv = b.partialPivLu().inverse();
  };

  Eigen::VectorXd cb = Eigen::VectorXd::Zero(m);  // costs of basic columns
  int scan_start = 0;
  long iters = 0;
  while (true) {
    if (++iters > cap) throw SolverError("float simplex hit iteration cap");
    for (int i = 0; i < m; ++i)
      cb(i) = basis[static_cast<std::size_t>(i)] < nv ? 1.0 : 0.0;
    Eigen::VectorXd y = binv.transpose() * cb;

    // Partial pricing: scan column blocks cyclically from the last start.
    int enter = -1;
    double best_cbar = eps_price;
    const int block_len = std::min(block, ncols);
    for (int scanned = 0; scanned < ncols && enter < 0; scanned += block_len) {
      const int lo = (scan_start + scanned) % ncols;
      const int len = std::min(block_len, ncols - scanned);
      for (int off = 0; off < len; ++off) {
        const int j = (lo + off) % ncols;
        if (in_basis[static_cast<std::size_t>(j)]) continue;
        double cbar;
        if (j < nv) {
          cbar = 1.0;
          for (int r : var_rows[static_cast<std::size_t>(j)]) cbar -= y(r);
        } else {
          cbar = -y(j - nv);
        }
        if (cbar > best_cbar) {
          best_cbar = cbar;
          enter = j;
        }
      }
    }
    if (enter < 0) break;
    scan_start = (enter + 1) % ncols;

    Eigen::VectorXd d;
    if (enter < nv) {
      d = Eigen::VectorXd::Zero(m);
      for (int r : var_rows[static_cast<std::size_t>(enter)]) d += binv.col(r);
    } else {
      d = binv.col(enter - nv);
    }

    // Ratio test; ties go to the largest pivot element, which both keeps the
    // update well conditioned and drains degenerate vertices faster than an
    // index rule on these heavily tied unit-rhs rows.
    int leave = -1;
    double theta = 0.0;
    for (int i = 0; i < m; ++i) {
      if (d(i) <= eps_pivot) continue;
      const double ratio = xb(i) / d(i);
      if (leave < 0 || ratio < theta - 1e-12 ||
          (ratio <= theta + 1e-12 && d(i) > d(leave))) {
        leave = i;
        theta = ratio;
      }
    }
    if (leave < 0) throw SolverError("float simplex reported unbounded");

    xb -= theta * d;
    xb(leave) = theta;
    for (int i = 0; i < m; ++i)
      if (i != leave && xb(i) < 0) xb(i) = 0.0;

    const double dr = d(leave);
    binv.row(leave) /= dr;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = d(i);
      if (f != 0.0) binv.row(i) -= f * binv.row(leave);
    }
    in_basis[static_cast<std::size_t>(basis[static_cast<std::size_t>(leave)])] = 0;
    in_basis[static_cast<std::size_t>(enter)] = 1;
    basis[static_cast<std::size_t>(leave)] = enter;

    if (iters % 256 == 0) {
      rebuild_binv();
      // Recompute basic values from the refreshed inverse.
      xb = binv * Eigen::VectorXd::Ones(m);
      for (int i = 0; i < m; ++i)
        if (xb(i) < 0) xb(i) = 0.0;
    }
  }

  out.iterations = iters;
  for (int i = 0; i < m; ++i) {
    const int col = basis[static_cast<std::size_t>(i)];
    if (col < nv) {
      double v = std::clamp(xb(i), 0.0, 1.0);
      out.assignment[static_cast<std::size_t>(col)] = v;
      out.value += v;
    }
  }
  return out;
}

ValidityReport check_solution(const PackingLP& lp, const LPSolution& sol) {
  ValidityReport rep;
  if (static_cast<int>(sol.assignment.size()) != lp.num_vars) {
    rep.fail("assignment size mismatch");
    return rep;
  }
  const Rational one(1);
  Rational total;
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& x = sol.assignment[static_cast<std::size_t>(j)];
    if (x.sign() < 0) rep.fail("variable " + std::to_string(j) + " negative");
    if (x > one) rep.fail("variable " + std::to_string(j) + " exceeds 1");
    total += x;
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational rowsum;
    for (int j : lp.rows[i]) rowsum += sol.assignment[static_cast<std::size_t>(j)];
    if (rowsum > one)
      rep.fail("row " + std::to_string(i) + " sum " + rowsum.str() + " exceeds 1");
  }
  if (total != sol.value)
    rep.fail("declared value " + sol.value.str() + " != assignment total " + total.str());
  return rep;
}

ValidityReport check_solution(const PackingLP& lp, const FloatSolution& sol, double tol) {
  ValidityReport rep;
  if (static_cast<int>(sol.assignment.size()) != lp.num_vars) {
    rep.fail("assignment size mismatch");
    return rep;
  }
  double total = 0.0;
  for (int j = 0; j < lp.num_vars; ++j) {
    const double x = sol.assignment[static_cast<std::size_t>(j)];
    if (x < -tol) rep.fail("variable " + std::to_string(j) + " negative");
    if (x > 1 + tol) rep.fail("variable " + std::to_string(j) + " exceeds 1");
    total += x;
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    double rowsum = 0.0;
    for (int j : lp.rows[i]) rowsum += sol.assignment[static_cast<std::size_t>(j)];
    if (rowsum > 1 + tol) rep.fail("row " + std::to_string(i) + " sum exceeds 1");
  }
  if (std::abs(total - sol.value) > tol) rep.fail("declared value != assignment total");
  return rep;
}

std::string dump_lp(const PackingLP& lp) {
  std::ostringstream out;
  out << "\\ packing LP: maximize total copy weight under unit edge capacities\n";
  out << "Maximize\n obj:";
  int width = 5;
  auto emit = [&](const std::string& term) {
    if (width + static_cast<int>(term.size()) > 72) {
      out << "\n      ";
      width = 6;
    }
    out << term;
    width += static_cast<int>(term.size());
  };
  for (int j = 0; j < lp.num_vars; ++j)
    emit((j == 0 ? " x" : " + x") + std::to_string(j + 1));
  if (lp.num_vars == 0) out << " 0";
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    out << " e" << i + 1 << ":";
    width = static_cast<int>(std::to_string(i + 1).size()) + 3;
    bool first = true;
    for (int j : lp.rows[i]) {
      emit((first ? " x" : " + x") + std::to_string(j + 1));
      first = false;
    }
    if (first) out << " 0 x1";
    out << " <= 1\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_vars; ++j) out << " 0 <= x" << j + 1 << "\n";
  out << "End\n";
  return out.str();
}

}  // namespace kpack
