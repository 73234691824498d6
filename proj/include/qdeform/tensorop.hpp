#pragma once

#include <array>
#include <map>
#include <vector>

#include "qdeform/ladder.hpp"

namespace qdeform {

using CoeffRule2 = std::function<Amplitude(long, long)>;
using CoeffRule3 = std::function<Amplitude(long, long, long)>;

// Operator on a two-site product basis: finitely many shift pairs (d1, d2)
// with rules on label pairs;  O|n1,n2> = sum c_{d1 d2}(n1,n2) |n1+d1, n2+d2>.
// Same exact-evaluation semantics as LadderOperator.
class TensorOperator {
 public:
  TensorOperator() = default;

  static TensorOperator term(int d1, int d2, CoeffRule2 rule);
  static TensorOperator from_terms(std::map<std::pair<int, int>, CoeffRule2> terms);

  const std::map<std::pair<int, int>, CoeffRule2>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Amplitude coeff(int d1, int d2, long n1, long n2) const;

 private:
  std::map<std::pair<int, int>, CoeffRule2> terms_;
};

TensorOperator tensor_product(const LadderOperator& o1, const LadderOperator& o2);
// joint diagonal g(n1, n2) on labels
TensorOperator joint_diagonal(CoeffRule2 g);

TensorOperator compose(const TensorOperator& o1, const TensorOperator& o2);
TensorOperator commutator(const TensorOperator& o1, const TensorOperator& o2);
TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
TensorOperator operator*(Amplitude c, const TensorOperator& o);

// exact expansion on a physical product state; below-zero targets dropped
std::vector<std::pair<std::pair<long, long>, Amplitude>> apply(const TensorOperator& o, long n1,
                                                               long n2);

// max |amplitude| of O|n1,n2> over the square window [n0, n0+dim)^2
double max_abs_on_window(const TensorOperator& o, long n0, long dim);

// flattened matrix on the product basis, index (n1-n0)*dim + (n2-n0);
// used against Kronecker-product oracles
DenseMatrix matrix_window(const TensorOperator& o, long n0, long dim);

// Three-site analogue; only construction, linear algebra and window
// evaluation are needed (coassociativity checks build both sides directly).
class TensorOperator3 {
 public:
  TensorOperator3() = default;

  static TensorOperator3 term(int d1, int d2, int d3, CoeffRule3 rule);
  static TensorOperator3 from_terms(std::map<std::array<int, 3>, CoeffRule3> terms);

  const std::map<std::array<int, 3>, CoeffRule3>& terms() const { return terms_; }

 private:
  std::map<std::array<int, 3>, CoeffRule3> terms_;
};

TensorOperator3 operator+(const TensorOperator3& a, const TensorOperator3& b);
TensorOperator3 operator-(const TensorOperator3& a, const TensorOperator3& b);
TensorOperator3 operator*(Amplitude c, const TensorOperator3& o);

double max_abs_on_window(const TensorOperator3& o, long n0, long dim);

}  // namespace qdeform
