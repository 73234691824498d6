#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qdeform/families.hpp"
#include "qdeform/tensorop.hpp"

namespace qdeform {

// Constants of the coproduct ansatz
//   Δ(a†) = c1 a†⊗qp^(α1 N) + c2 qp^(α2 N)⊗a†
//   Δ(a)  = c3 a⊗qp^(α3 N) + c4 qp^(α4 N)⊗a
//   Δ(N)  = c5 N⊗1 + c6 1⊗N + γ 1⊗1
// on the k-form algebra (qp, k). The spec is inert data; whether it works
// is established by the residual evaluations below. γ is kept complex: an
// imaginary part of π/(2 ln qp) (mod π/ln qp) twists the tensor factors by
// phases that real exponents cannot produce, and the k = -1 solution needs
// exactly that twist.
struct CoproductSpec {
  std::complex<double> c1{1.0}, c2{1.0}, c3{1.0}, c4{1.0}, c5{1.0}, c6{1.0};
  double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0, alpha4 = 0.0;
  std::complex<double> gamma{0.0};
  double qprime = 1.5;
  double k = -1.0;
};

// Constants c1..c4 = qp^(αi γ), c5 = c6 = 1: the unique choice that makes
// the ansatz exactly coassociative for given exponents. Reduces the solver
// search to (α1..α4, γ).
CoproductSpec coassociative_spec(double qprime, double k, const std::array<double, 4>& alphas,
                                 std::complex<double> gamma);

// The discovered exact solution at k = -1 (the hong-yan point):
// α = (1/2, -1/2, 1/2, -1/2), γ = 1/2 + iπ/(2 ln qp).
CoproductSpec hong_yan_coproduct_spec(double qprime);

struct CoproductOps {
  TensorOperator dN, da, dadag;
};

CoproductOps coproduct_ops(const CoproductSpec& spec, const FockRep& rep);

// ((id⊗Δ)Δ - (Δ⊗id)Δ)(h) for h in {a, a†, N}, max amplitude over the
// three-site window [0,dim)^3. Δ of a function of N acts as the function
// of the joint diagonal Δ(N).
double coassoc_residual(const CoproductSpec& spec, const FockRep& rep, long dim);

// max residual of [ΔN, Δa†] - Δa† and [ΔN, Δa] + Δa on [0,dim)^2
double homomorphism_residual(const CoproductSpec& spec, const FockRep& rep, long dim);

// max amplitude of [Δa, Δa†] - Δ([N+1]_k - [N]_k) on [0,dim)^2
double consistency_residual(const CoproductSpec& spec, const FockRep& rep, long dim);

struct HopfScanCell {
  double k = 0.0;
  CoproductSpec best;
  double min_residual = 0.0;  // coassoc + homomorphism + consistency at `best`
  bool converged = false;
};

// For each k: fixes the coassociative gauge (c1..c4 = qp^(αi γ), c5=c6=1)
// and minimizes the consistency residual over α1..α4 ∈ [-2,2], Re γ ∈ [-1,1]
// and the discrete phase sectors Im γ ∈ {0, π/2, π, 3π/2}/ln qp, by a 9-point
// coarse grid with two 4x refinement rounds around the incumbent. In this
// gauge coassociativity and the homomorphism residual vanish identically,
// so the consistency term is the whole objective; the reported residual is
// re-evaluated as the full triple sum on the winning spec.
std::vector<HopfScanCell> hopf_scan(double qprime, const std::vector<double>& k_grid, double nu,
                                    long dim);

// Generalized su_q(2): min over s of the residual of
// [ΔJ+, ΔJ-] = [2 ΔJ0]_{α,β} with ΔJ± = J±⊗q^(s J0) + q^(-s J0)⊗J±,
// ΔJ0 = J0⊗1 + 1⊗J0, on the lowest-weight representation with offset mu.
double suq2_homomorphism_residual(const DeformParams& p, double mu, long dim,
                                  double* s_best = nullptr);

}  // namespace qdeform
