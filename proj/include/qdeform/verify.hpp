#pragma once

#include <string>
#include <vector>

#include "qdeform/families.hpp"

namespace qdeform {

inline constexpr double kDefaultTolerance = 1e-10;

struct Window {
  long n0 = 0;
  long dim = 16;
};

struct RelationResidual {
  std::string name;
  std::string equation;
  double max_residual = 0.0;
  bool pass = false;
};

struct ResidualReport {
  std::string family;
  Window window;
  double tolerance = kDefaultTolerance;
  std::vector<RelationResidual> relations;
  bool pass = false;
};

// Residual of one relation: max over labels in the window and over shift
// cells of the floored relative difference between the two sides (see
// max_rel_cell_diff). Scale-free, so large-amplitude corners of parameter
// space are judged by relative error.
double relation_residual(const Relation& rel, const OperatorTriple& triple, Window w);

ResidualReport verify(const AlgebraFamily& fam, const OperatorTriple& triple, Window w,
                      double tolerance = kDefaultTolerance);

// The family's Casimir element instantiated on a triple:
//   MB-like:        q^(-alpha N) (a†a - [N]_{α,β})
//   hong_yan:       a†a - [N]
//   gen_osc:        q^((alpha+beta)/2) (a†a - [N]_{α,β})   (constant prefactor)
//   gen_arik_coon:  q^(alpha (N-1)) (a†a - N)
// suq2_gen has no Casimir here.
LadderOperator casimir_op(const AlgebraFamily& fam, const OperatorTriple& triple);

// max amplitude of [C, g]|n> over g in {a, a†, N} and n in the window
double centrality_residual(const LadderOperator& c, const OperatorTriple& triple, Window w);

// diagonal values <n|C|n> over the window
std::vector<double> casimir_eigenvalue_profile(const LadderOperator& c, Window w);

}  // namespace qdeform
