#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "qdeform/families.hpp"
#include "qdeform/ladder.hpp"

using namespace qdeform;

namespace {

FockRep hong_yan_rep(double q = 1.5, double nu = 0.0, double c = 0.0) {
  FockRep rep{make_hong_yan(q), nu, c};
  return rep;
}

}  // namespace

TEST_CASE("func_of_N diagonals") {
  const LadderOperator n_half = func_of_N([](double x) { return x; }, 0.5);
  auto hits = apply(n_half, 3);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].first == 3);
  CHECK(hits[0].second.real() == doctest::Approx(3.5).epsilon(1e-15));

  const LadderOperator one = func_of_N([](double) { return 1.0; }, 0.3);
  CHECK(one.coeff(0, 7).real() == 1.0);

  const LadderOperator decay = func_of_N([](double x) { return std::pow(2.0, -x); }, 0.0);
  CHECK(decay.coeff(0, 2).real() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("compose basics") {
  const OperatorTriple t = fock_ops(hong_yan_rep());
  const LadderOperator id = LadderOperator::identity();

  // identity is neutral
  for (long n = 0; n < 8; ++n) {
    CHECK(compose(id, t.adag).coeff(1, n) == t.adag.coeff(1, n));
    CHECK(compose(t.a, id).coeff(-1, n) == t.a.coeff(-1, n));
  }

  // a†a |2> = lambda(2) |2>
  const LadderOperator number_product = compose(t.adag, t.a);
  auto hits = apply(number_product, 2);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].first == 2);
  CHECK(hits[0].second.real() == doctest::Approx(std_bracket(2.0, 1.5)).epsilon(1e-14));
}

TEST_CASE("linear_combine zero and scaling") {
  const OperatorTriple t = fock_ops(hong_yan_rep());
  const LadderOperator z = linear_combine({1.0, -1.0}, {t.adag, t.adag});
  for (long n = 0; n < 12; ++n) CHECK(std::abs(z.coeff(1, n)) < 1e-15);

  const LadderOperator twice = Amplitude(2.0) * LadderOperator::identity();
  auto hits = apply(twice, 5);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].second.real() == 2.0);

  // structurally zero coefficients are pruned
  CHECK(linear_combine({0.0}, {t.adag}).is_zero());
}

TEST_CASE("commutators with the number operator") {
  const OperatorTriple t = fock_ops(hong_yan_rep(1.5, 0.0, 0.0));
  const LadderOperator up = commutator(t.nop, t.adag);    // must act as a†
  const LadderOperator down = commutator(t.nop, t.a);     // must act as -a
  for (long n = 0; n < 16; ++n) {
    CHECK(std::abs(up.coeff(1, n) - t.adag.coeff(1, n)) < 1e-12);
    CHECK(std::abs(down.coeff(-1, n) + t.a.coeff(-1, n)) < 1e-12);
  }
  const LadderOperator self = commutator(t.adag, t.adag);
  for (long n = 0; n < 16; ++n) CHECK(std::abs(self.coeff(2, n)) < 1e-15);
}

TEST_CASE("apply semantics at the vacuum") {
  const OperatorTriple t = fock_ops(hong_yan_rep());
  CHECK(apply(t.a, 0).empty());  // lambda(0) = 0
  auto up = apply(t.adag, 0);
  REQUIRE(up.size() == 1);
  CHECK(up[0].first == 1);
  CHECK(up[0].second.real() == doctest::Approx(1.0).epsilon(1e-14));  // sqrt(lambda(1)) = 1
  CHECK_THROWS_AS(apply(t.a, -1), std::invalid_argument);
}

TEST_CASE("matrix_window") {
  const OperatorTriple t = fock_ops(hong_yan_rep());
  const DenseMatrix id = matrix_window(LadderOperator::identity(), 0, 4);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) CHECK(id(i, j).real() == (i == j ? 1.0 : 0.0));

  const DenseMatrix n = matrix_window(t.nop, 0, 3);
  CHECK(n(0, 0).real() == 0.0);
  CHECK(n(1, 1).real() == 1.0);
  CHECK(n(2, 2).real() == 2.0);

  const DenseMatrix prod = matrix_window(compose(t.adag, t.a), 0, 5);
  for (long i = 0; i < 5; ++i)
    CHECK(prod(i, i).real() == doctest::Approx(std_bracket(double(i), 1.5)).epsilon(1e-13));
}

TEST_CASE("adjointness of the window matrices") {
  const OperatorTriple t = fock_ops(hong_yan_rep(1.4, 0.25, 0.0));
  const DenseMatrix ma = matrix_window(t.a, 0, 8);
  const DenseMatrix mad = matrix_window(t.adag, 0, 8);
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j)
      CHECK(std::abs(mad(i, j) - std::conj(ma(j, i))) < 1e-13);
}

TEST_CASE("non-unitary representations") {
  // nu < 0 makes lambda(0) = [nu] < 0
  FockRep bad{make_hong_yan(1.5), -0.5, 0.0};
  CHECK_THROWS_AS(fock_ops(bad), NonUnitaryError);

  bad.allow_nonunitary = true;
  const OperatorTriple t = fock_ops(bad);
  const Amplitude amp = t.a.coeff(-1, 0);  // sqrt of a negative eigenvalue
  CHECK(amp.real() == 0.0);
  CHECK(amp.imag() > 0.0);
  // the defining relation still holds with imaginary amplitudes
  const LadderOperator lhs = commutator(t.a, t.adag);
  const DeformParams p = bad.family.params;
  for (long n = 0; n < 8; ++n) {
    const double expect = delta_bracket(static_cast<double>(n) - 0.5, p);
    CHECK(std::abs(lhs.coeff(0, n) - Amplitude(expect)) < 1e-12);
  }
}

TEST_CASE("random words match the dense padded oracle") {
  oracle::Rng rng(415);
  const FockRep rep{make_gen_osc(DeformParams(1.5, 0.7, -0.3)), 0.0, 0.0};
  const OperatorTriple t = fock_ops(rep);

  // generator windows built straight from the eigenvalue formula
  const long dim = 10, pad = 6, full = dim + 2 * pad, base = -pad;
  auto dense_gen = [&](int which) {
    switch (which) {
      case 0:
        return oracle::dense_shift(base, full, -1, [&](long n) { return rep.sqrt_lambda(n); });
      case 1:
        return oracle::dense_shift(base, full, +1,
                                   [&](long n) { return rep.sqrt_lambda(n + 1); });
      case 2:
        return oracle::dense_shift(base, full, 0, [&](long n) {
          return Amplitude(static_cast<double>(n) + rep.nu, 0.0);
        });
      default:
        return oracle::dense_shift(base, full, 0, [&](long n) {
          return Amplitude(std::pow(1.5, -(static_cast<double>(n) + rep.nu)), 0.0);
        });
    }
  };
  auto lib_gen = [&](int which) {
    switch (which) {
      case 0: return t.a;
      case 1: return t.adag;
      case 2: return t.nop;
      default: return func_of_N([](double x) { return std::pow(1.5, -x); }, rep.nu);
    }
  };

  for (int trial = 0; trial < 40; ++trial) {
    const long len = rng.integer(1, 6);
    LadderOperator word = LadderOperator::identity();
    DenseMatrix dense = oracle::dense_shift(base, full, 0, [](long) { return Amplitude(1.0); });
    for (long i = 0; i < len; ++i) {
      const int pick = static_cast<int>(rng.integer(0, 3));
      word = compose(word, lib_gen(pick));
      dense = oracle::matmul(dense, dense_gen(pick));
    }
    const DenseMatrix lib_block = matrix_window(word, 0, dim);
    const DenseMatrix oracle_block = oracle::center_block(dense, pad, dim);
    CHECK(oracle::max_rel_diff(lib_block, oracle_block) < 1e-12);
  }
}

TEST_CASE("compose window equals dense product of padded windows") {
  const FockRep rep{make_gen_osc(DeformParams(1.3, 1.1, 0.4)), 0.5, 0.1};
  REQUIRE(rep.lambda(0) > 0.0);
  const OperatorTriple t = fock_ops(rep);
  const LadderOperator o1 = commutator(t.a, t.adag);
  const LadderOperator o2 = compose(t.adag, t.adag);

  const long dim = 6, pad = 4, full = dim + 2 * pad, base = -pad;
  const DenseMatrix dense =
      oracle::matmul(matrix_window(o1, base, full), matrix_window(o2, base, full));
  const DenseMatrix lib = matrix_window(compose(o1, o2), 0, dim);
  CHECK(oracle::max_rel_diff(lib, oracle::center_block(dense, pad, dim)) < 1e-12);
}
