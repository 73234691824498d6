#pragma once

#include <tuple>
#include <vector>

#include "qdeform/verify.hpp"

namespace qdeform {

// Invertible map A = f(N) a, A† = a† f(N); f is evaluated on the N-spectrum
// and must not vanish on the window of use.
struct DressingMap {
  std::function<Amplitude(double)> f;
};

OperatorTriple dress(const OperatorTriple& triple, const DressingMap& map);

enum class ReductionCase { alpha_zero, beta_zero, sum_zero, alpha_eq_beta };

// Builds the general-oscillator representation for p, applies the dressing
// prescribed by the case and verifies the target family's relations:
//   alpha_zero / beta_zero:  f = q^(-(α+β)N/4), target mb with q^(-(α+β)/2)
//   sum_zero:                no dressing, target hong_yan with q^α
//   alpha_eq_beta:           f = q^(-αN/2), target gen_arik_coon (Q = q^-α)
ResidualReport reduction_check(ReductionCase which, const DeformParams& p, Window w,
                               double nu = 0.0, double casimir_const = 0.0,
                               double tolerance = kDefaultTolerance);

// ((qp^(k2(n+1)) - qp^(k1(n+1))) - (qp^(k2 n) - qp^(k1 n))) / (qp - qp^k2)
double f_obstruction_term(double n, double qprime, double k1, double k2);

// Rescales the k1 representation by ((qp-qp^k1)/(qp-qp^k2))^(1/2) and
// returns the max residual of the k2 commutation relation over the window.
// Matches max |F(n, k1, k2)| up to rounding.
double k_rescale_residual(double qprime, double k1, double k2, Window w, double nu = 0.0);

// h(n) = -1/(2(n+nu)) ln( [n+nu+1]_k - [n+nu]_k )  in (qp, k) form.
// Throws DomainError when n+nu = 0 or the log argument is not positive.
double h_function(double n, double qprime, double k, double nu);

struct HScanRow {
  double k;
  long n;
  double h;  // NaN when the point is out of domain
  bool ok;
};

struct HScanKSummary {
  double k;
  long valid_points = 0;
  double variation = 0.0;        // max - min of h over valid points
  double max_abs_slope = 0.0;    // central differences, step 1 in n
};

struct HScanResult {
  std::vector<HScanRow> rows;  // ordered by (k, n)
  std::vector<HScanKSummary> summaries;
};

HScanResult h_scan(double qprime, const std::vector<double>& k_grid, double nu, long n_max);

// Would-be dressing constant Q(n) = exp h(n) per level. A spread ~ 0
// certifies an equivalence with the mb oscillator (k = 0); a finite spread
// exhibits the obstruction.
struct DressingSolveReport {
  double qprime = 0.0;
  double k = 0.0;
  double nu = 0.0;
  std::vector<HScanRow> q_rows;  // (k, n, Q(n), ok)
  long valid_points = 0;
  double spread = 0.0;
  bool mb_equivalent = false;
};

DressingSolveReport dressing_solver_demo(double qprime, double k, double nu, long n_max,
                                         double tolerance = 1e-10);

}  // namespace qdeform
