#include <gtest/gtest.h>

#include "unital/channel.hpp"

using namespace unital;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Channel, ChoiOfIdentityIsOmega) {
  for (int d = 2; d <= 4; ++d) {
    const ChoiState c = kraus_to_choi(identity_channel(d));
    EXPECT_LT(max_abs(c.rho - omega_projector(d)), 1e-14);
    EXPECT_TRUE(is_tp(c));
    EXPECT_TRUE(is_unital(c));
    EXPECT_TRUE(is_cp(c));
  }
}

TEST(Channel, ChoiRoundTrip) {
  Rng rng(11);
  for (int d = 2; d <= 4; ++d) {
    const KrausChannel ch = random_unital_channel(d, rng);
    const ChoiState c = kraus_to_choi(ch);
    const KrausChannel back = choi_to_kraus(c);
    EXPECT_LT(max_abs(kraus_to_choi(back).rho - c.rho), 1e-10);
    EXPECT_TRUE(is_tp(back, 1e-9));
    EXPECT_TRUE(is_unital(back, 1e-9));
  }
}

TEST(Channel, ChoiActsLikeChannel) {
  Rng rng(12);
  const int d = 3;
  const KrausChannel ch = random_unital_channel(d, rng);
  const ChoiState c = kraus_to_choi(ch);
  // T(X) = d tr_1[(X^T (x) 1) rho_T]
  const CMatrix x = random_ginibre(d, d, rng);
  const CMatrix lhs = apply(ch, x);
  const CMatrix rhs =
      double(d) * partial_trace(kron(x.transpose(), CMatrix::Identity(d, d)) * c.rho, d, d, 1);
  EXPECT_LT(max_abs(lhs - rhs), 1e-12);
}

TEST(Channel, WernerHolevoChannel) {
  const int d = 3;
  const KrausChannel wh = werner_holevo_channel(d);
  EXPECT_TRUE(is_tp(wh));
  EXPECT_TRUE(is_unital(wh));
  Rng rng(13);
  const CMatrix rho = random_density(d, rng);
  const CMatrix expect = (CMatrix::Identity(d, d) - rho.transpose()) / double(d - 1);
  EXPECT_LT(max_abs(apply(wh, rho) - expect), 1e-12);
}

TEST(Channel, NonTpConversionWarns) {
  std::string warning;
  KrausChannel ch = make_channel({2.0 * CMatrix::Identity(2, 2)});
  kraus_to_choi(ch, &warning);
  EXPECT_FALSE(warning.empty());
  kraus_to_choi(identity_channel(2), &warning);
  EXPECT_TRUE(warning.empty());
}

TEST(Channel, RejectsBadInput) {
  EXPECT_THROW(make_channel({}), DimensionError);
  EXPECT_THROW(make_channel({CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)}), DimensionError);
  EXPECT_THROW(choi_to_kraus({2, -CMatrix::Identity(4, 4)}), PreconditionError);
  EXPECT_THROW(choi_to_kraus({2, CMatrix::Identity(3, 3)}), DimensionError);
}

TEST(Channel, SuperoperatorComposition) {
  Rng rng(14);
  const int d = 3;
  const KrausChannel ch = random_unital_channel(d, rng);
  const CMatrix x = random_ginibre(d, d, rng);
  const CMatrix t = to_superoperator(ch).that;
  // row-major vec
  CVector vx(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) vx(i * d + j) = x(i, j);
  const CVector out = t * vx;
  const CMatrix y = apply(ch, x);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) EXPECT_NEAR(std::abs(out(i * d + j) - y(i, j)), 0.0, 1e-12);
}

TEST(Channel, SinkhornProducesUnitalChoi) {
  Rng rng(15);
  const CMatrix rho = random_density(9, rng);
  const CMatrix s = sinkhorn_unital_choi(rho, 3);
  const ChoiState c{3, s};
  EXPECT_TRUE(is_tp(c, 1e-12));
  EXPECT_TRUE(is_unital(c, 1e-12));
  EXPECT_TRUE(is_cp(c));
}

TEST(Channel, HsDecompositionReconstructs) {
  Rng rng(16);
  for (int d = 2; d <= 3; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      const KrausChannel ch = random_unital_channel(d, rng);
      const Superoperator t = to_superoperator(ch);
      const HsDecomposition h = hs_contraction_decomposition(t);
      EXPECT_TRUE(is_unitary(h.w_plus, 1e-10));
      EXPECT_TRUE(is_unitary(h.w_minus, 1e-10));
      EXPECT_LT(max_abs(0.5 * (h.w_plus + h.w_minus) - t.that), 1e-10);
    }
}

TEST(Channel, HsDecompositionRejectsExpansion) {
  Superoperator t{2, 2.0 * CMatrix::Identity(4, 4)};
  EXPECT_THROW(hs_contraction_decomposition(t), PreconditionError);
}

TEST(Channel, AffineDecompositionOfWernerHolevo) {
  const KrausChannel wh = werner_holevo_channel(3);
  const AffineUnitaryCombo combo = affine_unitary_decomposition(wh, min_affine_generators(3), 5);
  EXPECT_LT(combo.residual, 1e-8);
  EXPECT_NEAR(combo.coefficients.sum(), 1.0, 1e-10);
  // a non-mixture needs a negative coefficient
  EXPECT_LT(combo.coefficients.minCoeff(), 0.0);
}

TEST(Channel, AffineDecompositionValidation) {
  EXPECT_THROW(affine_unitary_decomposition(identity_channel(2), 3, 0), RangeError);
  KrausChannel non_unital = make_channel({CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)});
  non_unital.kraus[0](0, 0) = 1.0;
  non_unital.kraus[1](0, 1) = 1.0;
  EXPECT_THROW(affine_unitary_decomposition(non_unital, 11, 0), PreconditionError);
}

TEST(Channel, PauliBasisSpansTracelessHermitian) {
  for (int d = 2; d <= 4; ++d) {
    const auto basis = pauli_basis(d);
    ASSERT_EQ(int(basis.size()), d * d - 1);
    CMatrix cols(d * d, d * d - 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      EXPECT_NEAR(std::abs(basis[k].trace()), 0.0, 1e-14);
      EXPECT_TRUE(is_hermitian(basis[k]));
      cols.col(Eigen::Index(k)) = Eigen::Map<const CVector>(basis[k].data(), d * d);
    }
    EXPECT_EQ(psd_rank(cols.adjoint() * cols, 1e-12), d * d - 1);
  }
}
