#pragma once

#include "qdeform/errors.hpp"

namespace qdeform {

// Deformation triple (q, alpha, beta). The base q must be a positive real
// away from 1; alpha and beta are free real exponents.
struct DeformParams {
  double q;
  double alpha;
  double beta;

  DeformParams(double q_, double alpha_, double beta_);

  // q^((alpha-beta)/2)
  double qprime() const;
  // beta/alpha; only defined when |alpha| > 1e-12
  double k() const;
  // true when |q^alpha - q^beta| < 1e-9 and the closed-form limit is used
  bool degenerate() const;
};

enum class BracketBranch { generic, degenerate_limit };

struct BracketValue {
  double value;
  BracketBranch branch;
};

// (q^x - q^-x) / (q - q^-1)
double std_bracket(double x, double q);

// (q^(ax) - q^(bx)) / (q^a - q^b); near a == b the limit form x q^((x-1)a).
BracketValue gen_bracket(double x, const DeformParams& p);
double gen_bracket_value(double x, const DeformParams& p);

// (qp^x - qp^(kx)) / (qp - qp^k). Rejects a degenerate denominator; callers
// that may hit k ~ 1 should go through gen_bracket instead.
double bracket_k_form(double x, double qprime, double k);

// [x+1]_{a,b} - [x]_{a,b}
double delta_bracket(double x, const DeformParams& p);

// | [x]_{a,b} - q^((a+b)(x-1)/2) [x]_{q'} |  with q' = q^((a-b)/2)
double factorization_residual(double x, const DeformParams& p);

// | [x+1] - q [x] - q^-x |  with the standard bracket
double mb_identity_residual(double x, double q);

}  // namespace qdeform
