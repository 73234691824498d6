#pragma once

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace qdeform {

using Amplitude = std::complex<double>;
// Coefficient rule: basis label n -> amplitude of the shifted component.
using CoeffRule = std::function<Amplitude(long)>;

// Small dense complex matrix, row-major.
struct DenseMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<Amplitude> data;

  DenseMatrix() = default;
  DenseMatrix(long r, long c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
  Amplitude& operator()(long i, long j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Amplitude& operator()(long i, long j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }
};

// Operator on the abstract number basis, stored as finitely many shift
// degrees d with coefficient rules c_d:  O|n> = sum_d c_d(n) |n+d>.
// Rules are total on the integer chain, so products of operators evaluate
// exactly on every basis state; there is no truncation window anywhere.
// Immutable after construction.
class LadderOperator {
 public:
  LadderOperator() = default;  // zero operator

  static LadderOperator identity();
  static LadderOperator shift(int degree, CoeffRule rule);
  static LadderOperator diagonal(CoeffRule rule);
  static LadderOperator from_terms(std::map<int, CoeffRule> terms);

  const std::map<int, CoeffRule>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_term(int degree) const { return terms_.count(degree) != 0; }
  // amplitude of |n+degree> in O|n>; 0 when the degree is absent
  Amplitude coeff(int degree, long n) const;
  int max_abs_degree() const;

 private:
  std::map<int, CoeffRule> terms_;
};

// Diagonal operator with c_0(n) = f(n + nu).
LadderOperator func_of_N(std::function<double(double)> f, double nu);

// Diagonal operator f(spectrum) where the spectrum is read off another
// diagonal operator (typically the number operator of a representation).
LadderOperator func_of_number_op(std::function<Amplitude(double)> f, const LadderOperator& nop);

// Exact product o1 o2 (o2 acts first).
LadderOperator compose(const LadderOperator& o1, const LadderOperator& o2);

// Pointwise weighted sum; zero coefficients are pruned.
LadderOperator linear_combine(const std::vector<Amplitude>& coeffs,
                              const std::vector<LadderOperator>& ops);

LadderOperator commutator(const LadderOperator& o1, const LadderOperator& o2);

LadderOperator operator+(const LadderOperator& a, const LadderOperator& b);
LadderOperator operator-(const LadderOperator& a, const LadderOperator& b);
LadderOperator operator*(Amplitude c, const LadderOperator& o);

// Expansion of O|n> for a physical state n >= 0. Components with target
// label below 0 are dropped (annihilation below the lowest state), as are
// exact-zero amplitudes. Sorted by target label.
std::vector<std::pair<long, Amplitude>> apply(const LadderOperator& o, long n);

// Entries <m|O|n> for m, n in [n0, n0+dim). These are exact values of the
// operator on the infinite chain; amplitudes leaving the window are simply
// not represented. Windows with n0 < 0 probe the formal extension of the
// chain below the lowest weight.
DenseMatrix matrix_window(const LadderOperator& o, long n0, long dim);

// max over shift cells and labels in [n0, n0+dim) of
// |c1_d(n) - c2_d(n)| / max(1, |c1_d(n)|, |c2_d(n)|).
// The floor makes the comparison absolute for order-one amplitudes and
// relative where amplitudes grow large.
double max_rel_cell_diff(const LadderOperator& o1, const LadderOperator& o2, long n0, long dim);

}  // namespace qdeform
