#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/brackets.hpp"
#include "qdeform/ladder.hpp"

namespace qdeform {

// Oscillator families. All except suq2_gen share the generator set
// {a, a†, N}; suq2_gen uses {J-, J+, J0} in the same slots.
enum class Family {
  mb,                        // a a† - q a†a = q^-N
  arik_coon,                 // a a† - q a†a = 1
  chaturvedi_srinivasan,     // a a† - a†a = q^-N
  chakrabarti_jagannathan,   // a a† - q1 a†a = q2^-N
  gen_mb,                    // a a† - q^α a†a = q^(βN)
  hong_yan,                  // [a, a†] = [N+1] - [N]
  gen_osc,                   // [a, a†] = [N+1]_{α,β} - [N]_{α,β}
  gen_arik_coon,             // a a† - Q a†a = 1 + N(1-Q), Q = q^-α
  suq2_gen,                  // [J0, J±] = ±J±, [J+, J-] = [2J0]_{α,β}
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// A family tag plus its canonical (q, alpha, beta) encoding. The fixed-form
// families pin alpha/beta; chakrabarti_jagannathan keeps its native (q1, q2)
// pair alongside a base-e encoding q^alpha = q1, q^beta = 1/q2.
struct AlgebraFamily {
  Family tag;
  DeformParams params;
  double q1 = 0.0;
  double q2 = 0.0;
};

AlgebraFamily make_mb(double q);
AlgebraFamily make_arik_coon(double q);
AlgebraFamily make_chaturvedi_srinivasan(double q);
AlgebraFamily make_chakrabarti_jagannathan(double q1, double q2);
AlgebraFamily make_gen_mb(const DeformParams& p);
AlgebraFamily make_hong_yan(double q);
AlgebraFamily make_gen_osc(const DeformParams& p);
AlgebraFamily make_gen_arik_coon(double q, double alpha);
AlgebraFamily make_suq2_gen(const DeformParams& p);

// Lowest-weight representation with N-spectrum {n + nu} and a Casimir label.
// lambda(n) is the a†a eigenvalue at label n:
//   gen_osc / hong_yan:   lambda = [n+nu]_{α,β} + c
//   MB-like families:     lambda = [n+nu]_{α,β} + c q^(α(n+nu))
//   gen_arik_coon:        lambda = (n+nu) + c q^(-α(n+nu-1))
//   suq2_gen:             prefix sums of -[2(j+mu)]_{α,β}, Lambda(0) = 0
// Labels below zero evaluate the formal extension of these expressions.
struct FockRep {
  AlgebraFamily family;
  double nu = 0.0;
  double casimir_const = 0.0;
  bool allow_nonunitary = false;
  long unitarity_check_dim = 16;

  double lambda(long n) const;
  Amplitude sqrt_lambda(long n) const;
};

struct OperatorTriple {
  LadderOperator a;     // lowering
  LadderOperator adag;  // raising
  LadderOperator nop;   // diagonal n + nu
};

// Builds the ladder triple. In unitary mode (the default) this checks
// lambda(n) >= 0 for n in [0, unitarity_check_dim] and throws
// NonUnitaryError on a violation; with allow_nonunitary the amplitudes
// continue into the complex plane and a† is no longer the adjoint of a.
OperatorTriple fock_ops(const FockRep& rep);

// One defining relation: both sides instantiate to ladder operators given
// a concrete triple (functions of N read the spectrum off the triple's
// diagonal generator). Each side is kept as a list of summands so residual
// evaluation can compare the difference against the size of the words that
// produced it; a relation like a a† - q a†a = q^(-N) cancels two large
// products down to a small remainder, and only the summand magnitudes give
// the right rounding scale.
struct Relation {
  using Builder = std::function<LadderOperator(const OperatorTriple&)>;

  std::string name;
  std::string equation;
  std::vector<Builder> lhs_terms;
  std::vector<Builder> rhs_terms;

  LadderOperator lhs(const OperatorTriple& t) const;
  LadderOperator rhs(const OperatorTriple& t) const;
};

std::vector<Relation> relations_for(const AlgebraFamily& fam);

}  // namespace qdeform
