#pragma once

// Seeded random ensembles used by the decompositions, the optimizers and the
// test suites.

#include <cstdint>
#include <functional>
#include <random>

#include "unital/linalg.hpp"

namespace unital {

using Rng = std::mt19937_64;

inline CMatrix random_ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = n01(rng);
      const double im = n01(rng);
      m(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  return m;
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// diag(R) moved into Q.
inline CMatrix haar_unitary(int n, Rng& rng) {
  const CMatrix z = random_ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex rk = r(k, k);
    const double mag = std::abs(rk);
    q.col(k) *= mag > 0 ? rk / mag : Complex(1.0);
  }
  return q;
}

inline CMatrix random_hermitian(int n, Rng& rng) {
  const CMatrix g = random_ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

inline CMatrix random_symmetric(int n, Rng& rng) {
  const CMatrix g = random_ginibre(n, n, rng);
  return 0.5 * (g + g.transpose());
}

/// Random full-rank density matrix of dimension n.
inline CMatrix random_density(int n, Rng& rng) {
  const CMatrix g = random_ginibre(n, n, rng);
  CMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

/// Random pure state (1 (x) U)|Omega> with Haar U.
inline CMatrix random_maximally_entangled(int d, Rng& rng) {
  const CMatrix u = haar_unitary(d, rng);
  const CVector psi = kron(CMatrix::Identity(d, d), u) * omega_vector(d);
  return psi * psi.adjoint();
}

/// Random vector of non-negative reals sorted non-increasingly.
inline RVector random_singular_values(int n, Rng& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> u(0.0, scale);
  RVector s(n);
  for (int k = 0; k < n; ++k) s(k) = u(rng);
  std::sort(s.data(), s.data() + n, std::greater<>());
  return s;
}

/// Random probability vector with strictly positive entries.
inline RVector random_probabilities(int n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  RVector p(n);
  for (int k = 0; k < n; ++k) p(k) = e(rng) + 1e-3;
  return p / p.sum();
}

}  // namespace unital
