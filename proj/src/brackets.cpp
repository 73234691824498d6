#include "qdeform/brackets.hpp"

#include <cmath>
#include <string>

namespace qdeform {

namespace {

constexpr double kUnitGap = 1e-12;       // minimum |q - 1|
constexpr double kDegenerateGap = 1e-9;  // |q^a - q^b| below this -> limit form

void check_base(double q) {
  if (!(q > 0.0)) throw DomainError("bracket base must be positive, got " + std::to_string(q));
  if (std::abs(q - 1.0) <= kUnitGap)
    throw DomainError("bracket base too close to 1 (|q-1| <= 1e-12)");
}

}  // namespace

DeformParams::DeformParams(double q_, double alpha_, double beta_)
    : q(q_), alpha(alpha_), beta(beta_) {
  check_base(q);
}

double DeformParams::qprime() const { return std::pow(q, 0.5 * (alpha - beta)); }

double DeformParams::k() const {
  if (std::abs(alpha) <= 1e-12) throw DomainError("k = beta/alpha undefined for alpha ~ 0");
  return beta / alpha;
}

bool DeformParams::degenerate() const {
  return std::abs(std::pow(q, alpha) - std::pow(q, beta)) < kDegenerateGap;
}

double std_bracket(double x, double q) {
  check_base(q);
  return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
}

BracketValue gen_bracket(double x, const DeformParams& p) {
  const double qa = std::pow(p.q, p.alpha);
  const double qb = std::pow(p.q, p.beta);
  if (std::abs(qa - qb) < kDegenerateGap) {
    return {x * std::pow(p.q, (x - 1.0) * p.alpha), BracketBranch::degenerate_limit};
  }
  return {(std::pow(p.q, p.alpha * x) - std::pow(p.q, p.beta * x)) / (qa - qb),
          BracketBranch::generic};
}

double gen_bracket_value(double x, const DeformParams& p) { return gen_bracket(x, p).value; }

double bracket_k_form(double x, double qprime, double k) {
  check_base(qprime);
  const double den = qprime - std::pow(qprime, k);
  if (std::abs(den) <= 1e-12)
    throw DomainError("degenerate k-form denominator; use the generalized bracket limit");
  return (std::pow(qprime, x) - std::pow(qprime, k * x)) / den;
}

double delta_bracket(double x, const DeformParams& p) {
  return gen_bracket(x + 1.0, p).value - gen_bracket(x, p).value;
}

double factorization_residual(double x, const DeformParams& p) {
  const double lhs = gen_bracket(x, p).value;
  const double rhs =
      std::pow(p.q, 0.5 * (p.alpha + p.beta) * (x - 1.0)) * std_bracket(x, p.qprime());
  return std::abs(lhs - rhs);
}

double mb_identity_residual(double x, double q) {
  return std::abs(std_bracket(x + 1.0, q) - q * std_bracket(x, q) - std::pow(q, -x));
}

}  // namespace qdeform
