#include "qdeform/transforms.hpp"

#include <cmath>
#include <limits>

namespace qdeform {

OperatorTriple dress(const OperatorTriple& triple, const DressingMap& map) {
  const LadderOperator fN = func_of_number_op(map.f, triple.nop);
  OperatorTriple out;
  out.a = compose(fN, triple.a);
  out.adag = compose(triple.adag, fN);
  out.nop = triple.nop;
  return out;
}

ResidualReport reduction_check(ReductionCase which, const DeformParams& p, Window w, double nu,
                               double casimir_const, double tolerance) {
  FockRep rep{make_gen_osc(p), nu, casimir_const};
  rep.unitarity_check_dim = w.n0 + w.dim;
  const OperatorTriple source = fock_ops(rep);
  const double q = p.q;

  switch (which) {
    case ReductionCase::alpha_zero:
      if (std::abs(p.alpha) > 1e-12) throw DomainError("alpha_zero case needs alpha = 0");
      break;
    case ReductionCase::beta_zero:
      if (std::abs(p.beta) > 1e-12) throw DomainError("beta_zero case needs beta = 0");
      break;
    case ReductionCase::sum_zero:
      if (std::abs(p.alpha + p.beta) > 1e-12) throw DomainError("sum_zero case needs beta = -alpha");
      break;
    case ReductionCase::alpha_eq_beta:
      if (std::abs(p.alpha - p.beta) > 1e-12) throw DomainError("alpha_eq_beta case needs alpha = beta");
      break;
  }

  if (which == ReductionCase::sum_zero) {
    // already the hong-yan presentation in base q^alpha; nothing to dress
    return verify(make_hong_yan(std::pow(q, p.alpha)), source, w, tolerance);
  }
  if (which == ReductionCase::alpha_eq_beta) {
    const double s = p.alpha;
    DressingMap map{[q, s](double x) { return Amplitude(std::pow(q, -0.5 * s * x), 0.0); }};
    return verify(make_gen_arik_coon(q, s), dress(source, map), w, tolerance);
  }
  // alpha_zero / beta_zero: one surviving exponent, target mb
  const double s = p.alpha + p.beta;
  DressingMap map{[q, s](double x) { return Amplitude(std::pow(q, -0.25 * s * x), 0.0); }};
  return verify(make_mb(std::pow(q, -0.5 * s)), dress(source, map), w, tolerance);
}

double f_obstruction_term(double n, double qprime, double k1, double k2) {
  if (!(qprime > 0.0)) throw DomainError("f_obstruction_term: qprime must be positive");
  const double den = qprime - std::pow(qprime, k2);
  if (std::abs(den) <= 1e-12) throw DomainError("f_obstruction_term: degenerate denominator");
  const double up = std::pow(qprime, k2 * (n + 1.0)) - std::pow(qprime, k1 * (n + 1.0));
  const double lo = std::pow(qprime, k2 * n) - std::pow(qprime, k1 * n);
  return (up - lo) / den;
}

double k_rescale_residual(double qprime, double k1, double k2, Window w, double nu) {
  const DeformParams p1(qprime, 1.0, k1);
  const DeformParams p2(qprime, 1.0, k2);
  const double num = qprime - std::pow(qprime, k1);
  const double den = qprime - std::pow(qprime, k2);
  if (std::abs(den) <= 1e-12) throw DomainError("k_rescale_residual: degenerate denominator");
  // formal rescaling: both A and A‡ carry the same root, which may be
  // imaginary when the ratio is negative
  const Amplitude s = std::sqrt(std::complex<double>(num / den));

  FockRep rep{make_gen_osc(p1), nu, 0.0};
  rep.allow_nonunitary = true;
  const OperatorTriple t = fock_ops(rep);
  const LadderOperator A = s * t.a;
  const LadderOperator Adag = s * t.adag;

  const LadderOperator lhs = commutator(A, Adag);
  const LadderOperator rhs = func_of_number_op(
      [p2](double x) { return Amplitude(delta_bracket(x, p2), 0.0); }, t.nop);

  double worst = 0.0;
  for (long n = w.n0; n < w.n0 + w.dim; ++n) {
    for (int d : {-2, -1, 0, 1, 2}) {
      const Amplitude diff = lhs.coeff(d, n) - rhs.coeff(d, n);
      worst = std::max(worst, std::abs(diff));
    }
  }
  return worst;
}

double h_function(double n, double qprime, double k, double nu) {
  const double x = n + nu;
  if (std::abs(x) <= 1e-12) throw DomainError("h_function: n + nu = 0");
  const DeformParams p(qprime, 1.0, k);
  const double arg = delta_bracket(x, p);
  if (!(arg > 0.0)) throw DomainError("h_function: nonpositive log argument");
  return -std::log(arg) / (2.0 * x);
}

HScanResult h_scan(double qprime, const std::vector<double>& k_grid, double nu, long n_max) {
  HScanResult result;
  for (double k : k_grid) {
    HScanKSummary summary;
    summary.k = k;
    std::vector<double> values(static_cast<size_t>(n_max) + 1,
                               std::numeric_limits<double>::quiet_NaN());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (long n = 0; n <= n_max; ++n) {
      HScanRow row{k, n, std::numeric_limits<double>::quiet_NaN(), false};
      try {
        row.h = h_function(static_cast<double>(n), qprime, k, nu);
        row.ok = true;
        values[static_cast<size_t>(n)] = row.h;
        ++summary.valid_points;
        lo = std::min(lo, row.h);
        hi = std::max(hi, row.h);
      } catch (const DomainError&) {
        // out-of-domain points are reported and excluded from the summary
      }
      result.rows.push_back(row);
    }
    summary.variation = summary.valid_points > 0 ? hi - lo : 0.0;
    for (long n = 1; n + 1 <= n_max; ++n) {
      const double a = values[static_cast<size_t>(n - 1)];
      const double b = values[static_cast<size_t>(n + 1)];
      if (std::isnan(a) || std::isnan(b)) continue;
      summary.max_abs_slope = std::max(summary.max_abs_slope, std::abs(0.5 * (b - a)));
    }
    result.summaries.push_back(summary);
  }
  return result;
}

DressingSolveReport dressing_solver_demo(double qprime, double k, double nu, long n_max,
                                         double tolerance) {
  DressingSolveReport report;
  report.qprime = qprime;
  report.k = k;
  report.nu = nu;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (long n = 0; n <= n_max; ++n) {
    HScanRow row{k, n, std::numeric_limits<double>::quiet_NaN(), false};
    try {
      row.h = std::exp(h_function(static_cast<double>(n), qprime, k, nu));
      row.ok = true;
      ++report.valid_points;
      lo = std::min(lo, row.h);
      hi = std::max(hi, row.h);
    } catch (const DomainError&) {
    }
    report.q_rows.push_back(row);
  }
  report.spread = report.valid_points > 0 ? hi - lo : 0.0;
  report.mb_equivalent = report.valid_points > 0 && report.spread < tolerance;
  return report;
}

}  // namespace qdeform
