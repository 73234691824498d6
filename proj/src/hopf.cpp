#include "qdeform/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

namespace qdeform {

namespace {

using C = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

// [z+1]_k - [z]_k in (qp, k) form at a complex argument, with the k ~ 1
// limit branch matching gen_bracket.
struct DeltaBracket {
  double qprime;
  double k;
  double L;        // ln qprime
  bool degenerate; // |qp - qp^k| < 1e-9
  double A = 0.0;  // generic: g(z) = A qp^z + B qp^(kz)
  double B = 0.0;

  DeltaBracket(double qp, double kk) : qprime(qp), k(kk), L(std::log(qp)) {
    const double den = qprime - std::pow(qprime, k);
    degenerate = std::abs(den) < 1e-9;
    if (!degenerate) {
      A = (qprime - 1.0) / den;
      B = (1.0 - std::pow(qprime, k)) / den;
    }
  }

  C operator()(C z) const {
    if (degenerate) {
      const C qz = std::exp(z * L);
      return qz * (C(1.0) + z * (1.0 - 1.0 / qprime));
    }
    return A * std::exp(z * L) + B * std::exp(k * z * L);
  }
  double real_at(double x) const { return (*this)(C(x, 0.0)).real(); }
};

LadderOperator qpow_of_N(double qprime, double alpha, double nu) {
  const double L = std::log(qprime);
  return LadderOperator::diagonal([L, alpha, nu](long n) {
    return C(std::exp(alpha * (static_cast<double>(n) + nu) * L), 0.0);
  });
}

}  // namespace

CoproductSpec coassociative_spec(double qprime, double k, const std::array<double, 4>& alphas,
                                 std::complex<double> gamma) {
  CoproductSpec s;
  s.qprime = qprime;
  s.k = k;
  s.alpha1 = alphas[0];
  s.alpha2 = alphas[1];
  s.alpha3 = alphas[2];
  s.alpha4 = alphas[3];
  s.gamma = gamma;
  const double L = std::log(qprime);
  s.c1 = std::exp(alphas[0] * gamma * L);
  s.c2 = std::exp(alphas[1] * gamma * L);
  s.c3 = std::exp(alphas[2] * gamma * L);
  s.c4 = std::exp(alphas[3] * gamma * L);
  s.c5 = s.c6 = 1.0;
  return s;
}

CoproductSpec hong_yan_coproduct_spec(double qprime) {
  const double L = std::log(qprime);
  return coassociative_spec(qprime, -1.0, {0.5, -0.5, 0.5, -0.5}, C(0.5, kPi / (2.0 * L)));
}

CoproductOps coproduct_ops(const CoproductSpec& spec, const FockRep& rep) {
  const OperatorTriple t = fock_ops(rep);
  const double qp = spec.qprime;
  const double nu = rep.nu;

  CoproductOps ops;
  ops.dadag = spec.c1 * tensor_product(t.adag, qpow_of_N(qp, spec.alpha1, nu)) +
              spec.c2 * tensor_product(qpow_of_N(qp, spec.alpha2, nu), t.adag);
  ops.da = spec.c3 * tensor_product(t.a, qpow_of_N(qp, spec.alpha3, nu)) +
           spec.c4 * tensor_product(qpow_of_N(qp, spec.alpha4, nu), t.a);
  const C c5 = spec.c5, c6 = spec.c6, gamma = spec.gamma;
  ops.dN = joint_diagonal([c5, c6, gamma, nu](long n1, long n2) {
    return c5 * (static_cast<double>(n1) + nu) + c6 * (static_cast<double>(n2) + nu) + gamma;
  });
  return ops;
}

double coassoc_residual(const CoproductSpec& spec, const FockRep& rep, long dim) {
  const OperatorTriple t = fock_ops(rep);
  const double qp = spec.qprime;
  const double L = std::log(qp);
  const double nu = rep.nu;
  const C c5 = spec.c5, c6 = spec.c6, gamma = spec.gamma;

  auto mu2 = [c5, c6, gamma, nu](long m1, long m2) {
    return c5 * (static_cast<double>(m1) + nu) + c6 * (static_cast<double>(m2) + nu) + gamma;
  };
  auto site = [nu](long n) { return C(static_cast<double>(n) + nu, 0.0); };

  double worst = 0.0;

  // ladder generators: both sides of the axiom have the term patterns
  //   id⊗Δ:  cL qp^(aL ΔN) joint on sites 2,3;  cR² on site 3;  mixed middle
  //   Δ⊗id:  cL² on site 1;  cR qp^(aR ΔN) joint on sites 1,2;  mixed middle
  // with (cL, cR, aL, aR) = (c1, c2, α1, α2) for a† and (c3, c4, α3, α4) for a.
  struct GenCase {
    const LadderOperator* gen;
    int shift;
    C cL, cR;
    double aL, aR;
  };
  const GenCase cases[2] = {{&t.adag, +1, spec.c1, spec.c2, spec.alpha1, spec.alpha2},
                            {&t.a, -1, spec.c3, spec.c4, spec.alpha3, spec.alpha4}};

  for (const GenCase& gc : cases) {
    CoeffRule gen_rule = gc.gen->terms().at(gc.shift);
    const C cL = gc.cL, cR = gc.cR;
    const double aL = gc.aL, aR = gc.aR;

    auto qpow_site = [L](double a, C x) { return std::exp(a * x * L); };

    TensorOperator3 lhs =
        TensorOperator3::term(gc.shift, 0, 0,
                              [=](long n1, long n2, long n3) {
                                return cL * gen_rule(n1) * qpow_site(aL, mu2(n2, n3));
                              }) +
        TensorOperator3::term(0, gc.shift, 0,
                              [=](long n1, long n2, long n3) {
                                return cR * cL * qpow_site(aR, site(n1)) * gen_rule(n2) *
                                       qpow_site(aL, site(n3));
                              }) +
        TensorOperator3::term(0, 0, gc.shift, [=](long n1, long n2, long n3) {
          return cR * cR * qpow_site(aR, site(n1)) * qpow_site(aR, site(n2)) * gen_rule(n3);
        });

    TensorOperator3 rhs =
        TensorOperator3::term(gc.shift, 0, 0,
                              [=](long n1, long n2, long n3) {
                                return cL * cL * gen_rule(n1) * qpow_site(aL, site(n2)) *
                                       qpow_site(aL, site(n3));
                              }) +
        TensorOperator3::term(0, gc.shift, 0,
                              [=](long n1, long n2, long n3) {
                                return cL * cR * qpow_site(aR, site(n1)) * gen_rule(n2) *
                                       qpow_site(aL, site(n3));
                              }) +
        TensorOperator3::term(0, 0, gc.shift, [=](long n1, long n2, long n3) {
          return cR * qpow_site(aR, mu2(n1, n2)) * gen_rule(n3);
        });

    worst = std::max(worst, max_abs_on_window(lhs - rhs, 0, dim));
  }

  // number generator: both sides are joint diagonals
  TensorOperator3 lhsN = TensorOperator3::term(0, 0, 0, [=](long n1, long n2, long n3) {
    return c5 * site(n1) + c6 * (c5 * site(n2) + c6 * site(n3) + gamma) + gamma;
  });
  TensorOperator3 rhsN = TensorOperator3::term(0, 0, 0, [=](long n1, long n2, long n3) {
    return c5 * (c5 * site(n1) + c6 * site(n2) + gamma) + c6 * site(n3) + gamma;
  });
  worst = std::max(worst, max_abs_on_window(lhsN - rhsN, 0, dim));
  return worst;
}

double homomorphism_residual(const CoproductSpec& spec, const FockRep& rep, long dim) {
  const CoproductOps ops = coproduct_ops(spec, rep);
  const TensorOperator raise_defect = commutator(ops.dN, ops.dadag) - ops.dadag;
  const TensorOperator lower_defect = commutator(ops.dN, ops.da) + ops.da;
  return std::max(max_abs_on_window(raise_defect, 0, dim),
                  max_abs_on_window(lower_defect, 0, dim));
}

double consistency_residual(const CoproductSpec& spec, const FockRep& rep, long dim) {
  const CoproductOps ops = coproduct_ops(spec, rep);
  const DeltaBracket g(spec.qprime, spec.k);
  const C c5 = spec.c5, c6 = spec.c6, gamma = spec.gamma;
  const double nu = rep.nu;
  const TensorOperator rhs = joint_diagonal([=](long n1, long n2) {
    const C mu = c5 * (static_cast<double>(n1) + nu) + c6 * (static_cast<double>(n2) + nu) + gamma;
    return g(mu);
  });
  return max_abs_on_window(commutator(ops.da, ops.dadag) - rhs, 0, dim);
}

namespace {

// Hand-rolled consistency evaluation for the solver hot loop, in the
// coassociative gauge. Validated against consistency_residual in the tests.
struct FastConsistency {
  double qp, k, nu, L;
  long dim;
  DeltaBracket g;
  std::vector<C> sqrt_lam;  // labels 0..dim
  std::vector<double> gx;   // g at n+nu, n in 0..dim-1
  std::vector<double> r1;   // qp^(n+nu+... ) tables for the rhs
  std::vector<double> rk;

  FastConsistency(double qp_, double k_, double nu_, long dim_)
      : qp(qp_), k(k_), nu(nu_), L(std::log(qp_)), dim(dim_), g(qp_, k_) {
    FockRep rep{make_gen_osc(DeformParams(qp, 1.0, k)), nu, 0.0};
    rep.allow_nonunitary = true;
    for (long n = 0; n <= dim; ++n) sqrt_lam.push_back(rep.sqrt_lambda(n));
    for (long n = 0; n < dim; ++n) gx.push_back(g.real_at(static_cast<double>(n) + nu));
    for (long j = 0; j <= 2 * (dim - 1); ++j) {
      const double base = static_cast<double>(j) + 2.0 * nu;
      r1.push_back(std::exp(base * L));
      rk.push_back(std::exp(k * base * L));
    }
  }

  double operator()(const std::array<double, 4>& al, C gamma) const {
    const C c1 = std::exp(al[0] * gamma * L);
    const C c2 = std::exp(al[1] * gamma * L);
    const C c3 = std::exp(al[2] * gamma * L);
    const C c4 = std::exp(al[3] * gamma * L);
    const C u = c1 * c3;
    const C v = c2 * c4;
    const C cross1coef = c2 * c3 * (std::exp((al[1] + al[2]) * L) - 1.0);
    const C cross2coef = c1 * c4 * (std::exp((al[0] + al[3]) * L) - 1.0);

    // per-candidate site tables
    std::vector<double> pA13(dim), pA24(dim), e1(dim), e2(dim), e3(dim), e4(dim);
    const double A13 = al[0] + al[2], A24 = al[1] + al[3];
    for (long n = 0; n < dim; ++n) {
      const double x = static_cast<double>(n) + nu;
      pA13[n] = std::exp(A13 * x * L);
      pA24[n] = std::exp(A24 * x * L);
      e1[n] = std::exp(al[1] * (x - 1.0) * L);  // site-1 factor of the (-1,+1) cell
      e2[n] = std::exp(al[2] * x * L);          // site-2 factor
      e3[n] = std::exp(al[0] * (x - 1.0) * L);  // site-2 factor of the (+1,-1) cell
      e4[n] = std::exp(al[3] * x * L);          // site-1 factor
    }
    // rhs g(X+Y+gamma) over the 2*dim-1 possible label sums
    std::vector<C> g2(2 * dim - 1);
    if (!g.degenerate) {
      const C E = std::exp(gamma * L);
      const C Ek = std::exp(k * gamma * L);
      for (long j = 0; j < 2 * dim - 1; ++j) g2[j] = g.A * r1[j] * E + g.B * rk[j] * Ek;
    } else {
      for (long j = 0; j < 2 * dim - 1; ++j)
        g2[j] = g(C(static_cast<double>(j) + 2.0 * nu, 0.0) + gamma);
    }

    double worst = 0.0;
    const bool c1on = std::abs(cross1coef) > 0.0;
    const bool c2on = std::abs(cross2coef) > 0.0;
    for (long n1 = 0; n1 < dim; ++n1) {
      for (long n2 = 0; n2 < dim; ++n2) {
        const C diag = u * gx[n1] * pA13[n2] + v * pA24[n1] * gx[n2] - g2[n1 + n2];
        worst = std::max(worst, std::abs(diag));
        if (c1on) {
          const C cr = cross1coef * sqrt_lam[n1] * sqrt_lam[n2 + 1] * (e1[n1] * e2[n2]);
          worst = std::max(worst, std::abs(cr));
        }
        if (c2on) {
          const C cr = cross2coef * sqrt_lam[n1 + 1] * sqrt_lam[n2] * (e4[n1] * e3[n2]);
          worst = std::max(worst, std::abs(cr));
        }
      }
    }
    return worst;
  }
};

struct Incumbent {
  double residual = std::numeric_limits<double>::infinity();
  std::array<double, 4> al{};
  C gamma{0.0};
};

HopfScanCell scan_one_k(double qprime, double k, double nu, long dim) {
  HopfScanCell cell;
  cell.k = k;
  const FastConsistency eval(qprime, k, nu, dim);
  const double L = std::log(qprime);

  Incumbent best;
  auto consider = [&](const std::array<double, 4>& al, C gamma) {
    const double r = eval(al, gamma);
    if (r < best.residual) best = {r, al, gamma};
  };

  auto grid = [](double lo, double hi, int points) {
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
  };

  const std::array<double, 4> sectors = {0.0, kPi / (2.0 * L), kPi / L, 3.0 * kPi / (2.0 * L)};

  // coarse pass: 9 points per parameter, all phase sectors
  const auto alpha0 = grid(-2.0, 2.0, 9);
  const auto gre0 = grid(-1.0, 1.0, 9);
  for (double a1 : alpha0)
    for (double a2 : alpha0)
      for (double a3 : alpha0)
        for (double a4 : alpha0)
          for (double gr : gre0)
            for (double gi : sectors) consider({a1, a2, a3, a4}, C(gr, gi));

  // two refinement rounds, box shrinks 4x around the incumbent; the phase
  // sector is discrete and stays at the incumbent's value
  double aw = 2.0, gw = 1.0;
  for (int round = 0; round < 2; ++round) {
    aw /= 4.0;
    gw /= 4.0;
    const Incumbent center = best;
    const auto a1g = grid(center.al[0] - aw, center.al[0] + aw, 9);
    const auto a2g = grid(center.al[1] - aw, center.al[1] + aw, 9);
    const auto a3g = grid(center.al[2] - aw, center.al[2] + aw, 9);
    const auto a4g = grid(center.al[3] - aw, center.al[3] + aw, 9);
    const auto grg = grid(center.gamma.real() - gw, center.gamma.real() + gw, 9);
    for (double a1 : a1g)
      for (double a2 : a2g)
        for (double a3 : a3g)
          for (double a4 : a4g)
            for (double gr : grg) consider({a1, a2, a3, a4}, C(gr, center.gamma.imag()));
  }

  cell.best = coassociative_spec(qprime, k, best.al, best.gamma);
  FockRep rep{make_gen_osc(DeformParams(qprime, 1.0, k)), nu, 0.0};
  rep.allow_nonunitary = true;
  cell.min_residual = coassoc_residual(cell.best, rep, std::min<long>(dim, 4)) +
                      homomorphism_residual(cell.best, rep, dim) +
                      consistency_residual(cell.best, rep, dim);
  cell.converged = true;
  return cell;
}

}  // namespace

std::vector<HopfScanCell> hopf_scan(double qprime, const std::vector<double>& k_grid, double nu,
                                    long dim) {
  std::vector<HopfScanCell> cells(k_grid.size());
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(k_grid.size()));
  std::vector<std::future<HopfScanCell>> futures;
  futures.reserve(k_grid.size());
  for (double k : k_grid) {
    futures.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 [=] { return scan_one_k(qprime, k, nu, dim); }));
  }
  for (size_t i = 0; i < futures.size(); ++i) {
    try {
      cells[i] = futures[i].get();
    } catch (const std::exception&) {
      cells[i].k = k_grid[i];
      cells[i].converged = false;
      cells[i].min_residual = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return cells;
}

double suq2_homomorphism_residual(const DeformParams& p, double mu, long dim, double* s_best) {
  FockRep rep{make_suq2_gen(p), mu, 0.0};
  rep.allow_nonunitary = true;
  rep.unitarity_check_dim = dim;
  const OperatorTriple t = fock_ops(rep);

  const TensorOperator rhs = joint_diagonal([p, mu](long m1, long m2) {
    const double x = (static_cast<double>(m1) + mu) + (static_cast<double>(m2) + mu);
    return C(gen_bracket_value(2.0 * x, p), 0.0);
  });

  auto residual_at = [&](double s) {
    const LadderOperator qs = qpow_of_N(p.q, s, mu);
    const LadderOperator qsna = qpow_of_N(p.q, -s, mu);
    const TensorOperator dJp = tensor_product(t.adag, qs) + tensor_product(qsna, t.adag);
    const TensorOperator dJm = tensor_product(t.a, qs) + tensor_product(qsna, t.a);
    return max_abs_on_window(commutator(dJp, dJm) - rhs, 0, dim);
  };

  double best_s = 0.0;
  double best = std::numeric_limits<double>::infinity();
  auto sweep = [&](double lo, double hi, int points) {
    for (int i = 0; i < points; ++i) {
      const double s = lo + (hi - lo) * i / (points - 1);
      const double r = residual_at(s);
      if (r < best) {
        best = r;
        best_s = s;
      }
    }
  };
  sweep(-2.5, 2.5, 101);  // step 0.05
  double w = 0.05;
  for (int round = 0; round < 2; ++round) {
    sweep(best_s - w, best_s + w, 21);
    w /= 10.0;
  }
  if (s_best) *s_best = best_s;
  return best;
}

}  // namespace qdeform
