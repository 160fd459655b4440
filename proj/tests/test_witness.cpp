#include <gtest/gtest.h>

#include "unital/covariant.hpp"
#include "unital/witness.hpp"

using namespace unital;

namespace {

RVector vec(std::initializer_list<double> v) {
  RVector r(Eigen::Index(v.size()));
  Eigen::Index k = 0;
  for (double x : v) r(k++) = x;
  return r;
}

}  // namespace

TEST(Witness, TightConstantForIdentity) {
  EXPECT_NEAR(tight_constant(RVector::Ones(3)), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(tight_constant(RVector::Ones(4)), 1.0, 1e-15);
  for (int d = 3; d <= 9; d += 2) EXPECT_NEAR(tight_constant(RVector::Ones(d)), 1.0 - 2.0 / d, 1e-15);
  EXPECT_NEAR(tight_constant(vec({2, 1, 0}), 3), 4.0 / 3.0, 1e-15);
}

TEST(Witness, TightConstantValidation) {
  EXPECT_THROW(tight_constant(vec({1, 2})), PreconditionError);
  EXPECT_THROW(tight_constant(vec({1, -1})), PreconditionError);
  EXPECT_THROW(tight_constant(vec({1, 1}), 3), DimensionError);
}

TEST(Witness, FlipWitnessForIdentity) {
  const Witness w3 = flip_witness(CMatrix::Identity(3, 3));
  EXPECT_LT((w3.matrix - flip_operator(3) - CMatrix::Identity(9, 9) / 3.0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(evaluate(w3, {3, rho_minus(3)}), -2.0 / 3.0, 1e-12);
  EXPECT_NEAR(evaluate(w3, {3, omega_projector(3)}), 4.0 / 3.0, 1e-12);

  const Witness w4 = flip_witness(CMatrix::Identity(4, 4));
  EXPECT_TRUE(is_psd(w4.matrix, 1e-12));

  const Witness w0 = flip_witness(CMatrix::Zero(3, 3));
  EXPECT_EQ(w0.w, 0.0);
  EXPECT_EQ(w0.matrix.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Witness, ValueOnCovariantFamilyIsMinusEpsilon) {
  const Witness w = flip_witness(CMatrix::Identity(3, 3));
  for (double e : {0.05, 0.2, 0.5, 2.0 / 3.0})
    EXPECT_NEAR(evaluate(w, covariant_family(3, e)), -e, 1e-12);
}

TEST(Witness, DimensionMismatch) {
  const Witness w = flip_witness(CMatrix::Identity(3, 3));
  EXPECT_THROW(evaluate(w, {2, omega_projector(2)}), DimensionError);
}

TEST(Witness, NonNegativeOnUnitaryChannels) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 4;
    const Witness w = flip_witness(random_ginibre(d, d, rng));
    EXPECT_GE(evaluate(w, {d, random_maximally_entangled(d, rng)}), -1e-9);
  }
}

TEST(Witness, OracleForIdentity) {
  EXPECT_NEAR(min_tr_b_ubar_oracle(CMatrix::Identity(3, 3), 20, 1), -1.0 / 3.0, 1e-6);
  EXPECT_NEAR(min_tr_b_ubar_oracle(CMatrix::Identity(2, 2), 20, 1), -1.0, 1e-6);
  CMatrix b = CMatrix::Zero(3, 3);
  b(0, 0) = 2.0;
  b(1, 1) = 1.0;
  EXPECT_NEAR(min_tr_b_ubar_oracle(b, 20, 1), -4.0 / 3.0, 1e-6);
}

TEST(Witness, TightnessAgainstOracle) {
  Rng rng(32);
  for (int d = 2; d <= 5; ++d)
    for (int trial = 0; trial < 5; ++trial) {
      const CMatrix b = random_ginibre(d, d, rng);
      const double w = tight_constant(singular_values(b));
      const double oracle = min_tr_b_ubar_oracle(b, 20, 1000 + trial);
      EXPECT_GE(oracle + w, -1e-3);
      EXPECT_LE(oracle + w, 1e-2);
    }
}

TEST(Witness, InvariantUnderRightUnitary) {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix b = random_ginibre(4, 4, rng);
    const CMatrix a = haar_unitary(4, rng);
    EXPECT_NEAR(tight_constant(singular_values(b)), tight_constant(singular_values(b * a.adjoint())), 1e-12);
  }
}

TEST(Witness, GradientMatchesFiniteDifference) {
  Rng rng(34);
  const WitnessObjective f{random_ginibre(3, 3, rng)};
  const CMatrix u = haar_unitary(3, rng);
  const CMatrix h = riemannian_gradient(f, u);
  const CMatrix dir = random_hermitian(3, rng);
  const double t = 1e-6;
  const double fp = f.value(unitary_from_hermitian(t * dir) * u);
  const double fm = f.value(unitary_from_hermitian(-t * dir) * u);
  const double fd = (fp - fm) / (2 * t);
  // d/dt f(exp(i t X) U) = <H, X>
  EXPECT_NEAR(fd, (h * dir).trace().real(), 1e-6 * std::max(1.0, std::abs(fd)));
}
