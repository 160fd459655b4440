#include <gtest/gtest.h>

#include "unital/linalg.hpp"
#include "unital/random.hpp"

using namespace unital;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Linalg, KronMatchesIndexConvention) {
  Rng rng(1);
  const CMatrix a = random_ginibre(2, 2, rng);
  const CMatrix b = random_ginibre(3, 3, rng);
  const CMatrix k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) EXPECT_EQ(k(i * 3 + r, j * 3 + s), a(i, j) * b(r, s));
}

TEST(Linalg, PartialTraceOfProduct) {
  Rng rng(2);
  const CMatrix a = random_ginibre(2, 2, rng);
  const CMatrix b = random_ginibre(3, 3, rng);
  const CMatrix k = kron(a, b);
  EXPECT_LT(max_abs(partial_trace(k, 2, 3, 1) - a.trace() * b), 1e-12);
  EXPECT_LT(max_abs(partial_trace(k, 2, 3, 2) - b.trace() * a), 1e-12);
  EXPECT_THROW(partial_trace(k, 2, 3, 3), RangeError);
  EXPECT_THROW(partial_trace(k, 3, 3, 1), DimensionError);
}

TEST(Linalg, PartialTransposeOfProduct) {
  Rng rng(3);
  const CMatrix a = random_ginibre(3, 3, rng);
  const CMatrix b = random_ginibre(2, 2, rng);
  const CMatrix k = kron(a, b);
  EXPECT_LT(max_abs(partial_transpose(k, 3, 2, 1) - kron(a.transpose(), b)), 1e-14);
  EXPECT_LT(max_abs(partial_transpose(k, 3, 2, 2) - kron(a, b.transpose())), 1e-14);
}

TEST(Linalg, FlipPartialTransposeIsFlipHat) {
  for (int d = 2; d <= 4; ++d) {
    EXPECT_LT(max_abs(partial_transpose(flip_operator(d), d, d, 2) - flip_hat(d)), 1e-14);
    const CMatrix f = flip_operator(d);
    EXPECT_LT(max_abs(f * f - CMatrix::Identity(d * d, d * d)), 1e-14);
    EXPECT_NEAR((f * omega_projector(d)).trace().real(), 1.0, 1e-14);
  }
}

TEST(Linalg, Predicates) {
  Rng rng(4);
  EXPECT_TRUE(is_unitary(haar_unitary(5, rng)));
  EXPECT_TRUE(is_hermitian(random_hermitian(4, rng)));
  EXPECT_TRUE(is_psd(random_density(4, rng)));
  EXPECT_FALSE(is_psd(-CMatrix::Identity(2, 2)));
  EXPECT_TRUE(is_symmetric(random_symmetric(4, rng)));
  EXPECT_FALSE(is_unitary(CMatrix::Zero(2, 3)));
}

class TakagiTest : public ::testing::TestWithParam<int> {};

TEST_P(TakagiTest, ReconstructsRandomSymmetric) {
  Rng rng(100 + GetParam());
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = random_symmetric(GetParam(), rng);
    const TakagiResult t = takagi(a);
    EXPECT_TRUE(is_unitary(t.v, 1e-10));
    const CMatrix recon = t.v * t.sigma.cast<Complex>().asDiagonal() * t.v.transpose();
    EXPECT_LT(max_abs(recon - a), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, TakagiTest, ::testing::Values(1, 2, 3, 5, 8));

TEST(Linalg, TakagiDegenerateSpectrum) {
  Rng rng(7);
  // symmetric unitary: all singular values equal
  const CMatrix u = haar_unitary(4, rng);
  const CMatrix a = u * u.transpose();
  const TakagiResult t = takagi(a);
  EXPECT_LT(max_abs(t.v * t.sigma.cast<Complex>().asDiagonal() * t.v.transpose() - a), 1e-10);
  // rank deficient
  CMatrix b = CMatrix::Zero(3, 3);
  b(0, 1) = b(1, 0) = 2.0;
  const TakagiResult tb = takagi(b);
  EXPECT_LT(max_abs(tb.v * tb.sigma.cast<Complex>().asDiagonal() * tb.v.transpose() - b), 1e-10);
  EXPECT_THROW(takagi(random_ginibre(3, 3, rng)), PreconditionError);
}

TEST(Linalg, UnitaryFromHermitianAndPolar) {
  Rng rng(8);
  const CMatrix h = random_hermitian(4, rng);
  EXPECT_TRUE(is_unitary(unitary_from_hermitian(h), 1e-12));
  EXPECT_THROW(unitary_from_hermitian(random_ginibre(3, 3, rng)), PreconditionError);
  EXPECT_TRUE(is_unitary(nearest_unitary(random_ginibre(4, 4, rng)), 1e-12));
}

TEST(Linalg, TraceNormAndRank) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 3.0;
  m(1, 2) = -2.0;
  EXPECT_NEAR(trace_norm(m), 5.0, 1e-14);
  EXPECT_NEAR(operator_norm(m), 3.0, 1e-14);
  EXPECT_EQ(psd_rank(m.adjoint() * m, 1e-10), 2);
}
