#pragma once

// Dense complex matrix primitives. All bipartite operations use the ordered
// product basis |i,k> = |i> (x) |k>, i.e. row/column index i * d2 + k.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "unital/error.hpp"

namespace unital {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr Complex kI{0.0, 1.0};

struct SvdResult {
  CMatrix u;
  RVector sigma;  // non-increasing
  CMatrix v;
};

struct TakagiResult {
  CMatrix v;
  RVector sigma;  // non-increasing
};

namespace detail {

inline void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(what) + ": matrix must be square");
}

inline void require_bipartite(const CMatrix& m, int d1, int d2,
                              const char* what) {
  if (d1 < 1 || d2 < 1 || m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw DimensionError(std::string(what) + ": expected a " +
                         std::to_string(d1 * d2) + "x" +
                         std::to_string(d1 * d2) + " matrix");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// predicates

inline bool is_hermitian(const CMatrix& m, double tol = kDefaultTol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_symmetric(const CMatrix& m, double tol = kDefaultTol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unitary(const CMatrix& m, double tol = kDefaultTol) {
  if (m.rows() != m.cols()) return false;
  const auto n = m.rows();
  return (m * m.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <=
         tol;
}

inline RVector hermitian_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline bool is_psd(const CMatrix& m, double tol = kDefaultTol) {
  if (!is_hermitian(m, tol)) return false;
  const CMatrix h = 0.5 * (m + m.adjoint());
  return hermitian_eigenvalues(h).minCoeff() >= -tol;
}

// ---------------------------------------------------------------------------
// tensor structure

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Traces out `subsystem` (1 or 2) of an operator on C^d1 (x) C^d2.
inline CMatrix partial_trace(const CMatrix& m, int d1, int d2, int subsystem) {
  detail::require_bipartite(m, d1, d2, "partial_trace");
  if (subsystem == 1) {
    CMatrix out = CMatrix::Zero(d2, d2);
    for (int i = 0; i < d1; ++i) out += m.block(i * d2, i * d2, d2, d2);
    return out;
  }
  if (subsystem == 2) {
    CMatrix out(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j)
        out(i, j) = m.block(i * d2, j * d2, d2, d2).trace();
    return out;
  }
  throw RangeError("partial_trace: subsystem must be 1 or 2");
}

/// Linear extension of (A (x) B)^T1 = A^T (x) B and (A (x) B)^T2 = A (x) B^T.
inline CMatrix partial_transpose(const CMatrix& m, int d1, int d2,
                                 int subsystem) {
  detail::require_bipartite(m, d1, d2, "partial_transpose");
  if (subsystem != 1 && subsystem != 2)
    throw RangeError("partial_transpose: subsystem must be 1 or 2");
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < d1; ++j)
        for (int l = 0; l < d2; ++l) {
          const Complex v = m(i * d2 + k, j * d2 + l);
          if (subsystem == 2)
            out(i * d2 + l, j * d2 + k) = v;
          else
            out(j * d2 + k, i * d2 + l) = v;
        }
  return out;
}

/// Swap operator |k,l> -> |l,k> on C^d (x) C^d.
inline CMatrix flip_operator(int d) {
  if (d < 1) throw RangeError("flip_operator: d must be positive");
  CMatrix f = CMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) f(l * d + k, k * d + l) = 1.0;
  return f;
}

inline CVector omega_vector(int d) {
  if (d < 1) throw RangeError("omega_vector: d must be positive");
  CVector v = CVector::Zero(d * d);
  for (int j = 0; j < d; ++j) v(j * d + j) = 1.0 / std::sqrt(double(d));
  return v;
}

/// |Omega><Omega| with Omega = d^{-1/2} sum_j |j,j>.
inline CMatrix omega_projector(int d) {
  const CVector v = omega_vector(d);
  return v * v.adjoint();
}

/// d |Omega><Omega|, the partial transpose of the flip.
inline CMatrix flip_hat(int d) { return double(d) * omega_projector(d); }

// ---------------------------------------------------------------------------
// factorizations

inline SvdResult svd(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> s(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {s.matrixU(), s.singularValues(), s.matrixV()};
}

inline RVector singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> s(m);
  return s.singularValues();
}

inline double trace_norm(const CMatrix& m) { return singular_values(m).sum(); }

inline double operator_norm(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : singular_values(m)(0);
}

namespace detail {

// Principal square root of a complex-symmetric unitary Z. Such a Z = X + iY
// has commuting real symmetric X, Y, so a real orthogonal Q diagonalizes it.
inline CMatrix sqrt_symmetric_unitary(const CMatrix& z) {
  const auto n = z.rows();
  if (n == 1) return CMatrix::Constant(1, 1, std::sqrt(z(0, 0) / std::abs(z(0, 0))));
  const Eigen::MatrixXd x = z.real();
  const Eigen::MatrixXd y = z.imag();
  // generic real combination; eigenvectors of X + cY are shared by X and Y
  const Eigen::MatrixXd mix = 0.5 * (x + x.transpose()) +
                              0.6180339887498949 * 0.5 * (y + y.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mix);
  const Eigen::MatrixXd q = es.eigenvectors();
  const CMatrix qc = q.cast<Complex>();
  const CMatrix dz = qc.transpose() * z * qc;
  CVector root(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex p = dz(k, k);
    root(k) = std::sqrt(p / std::abs(p));
  }
  return qc * root.asDiagonal() * qc.transpose();
}

}  // namespace detail

/// Takagi factorization a = V diag(sigma) V^T of a complex-symmetric matrix.
///
/// Starts from a = U S W^dagger. Symmetry forces U = conj(W) Z with Z
/// block-diagonal over clusters of equal singular values, each block a
/// symmetric unitary, so V = conj(W) Z^{1/2}. Zero singular values keep
/// Z = 1.
inline TakagiResult takagi(const CMatrix& a, double tol = kDefaultTol) {
  detail::require_square(a, "takagi");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (!is_symmetric(a, tol * scale))
    throw PreconditionError("takagi: input is not complex symmetric");
  const auto n = a.rows();
  const CMatrix as = 0.5 * (a + a.transpose());
  const SvdResult s = svd(as);
  const CMatrix wbar = s.v.conjugate();
  CMatrix v = wbar;

  const double smax = n > 0 ? s.sigma(0) : 0.0;
  const double cluster_tol = 1e-8 * std::max(smax, 1e-300);
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && s.sigma(start) - s.sigma(end) <= cluster_tol) ++end;
    const Eigen::Index len = end - start;
    if (s.sigma(start) > cluster_tol) {
      const CMatrix ub = s.u.middleCols(start, len);
      const CMatrix wb = wbar.middleCols(start, len);
      CMatrix z = wb.adjoint() * ub;
      z = 0.5 * (z + z.transpose()).eval();
      v.middleCols(start, len) = wb * detail::sqrt_symmetric_unitary(z);
    }
    start = end;
  }
  return {v, s.sigma};
}

/// exp(i x) for Hermitian x.
inline CMatrix unitary_from_hermitian(const CMatrix& x,
                                      double tol = kDefaultTol) {
  detail::require_square(x, "unitary_from_hermitian");
  if (!is_hermitian(x, tol))
    throw PreconditionError("unitary_from_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (x + x.adjoint()));
  CVector phases(x.rows());
  for (Eigen::Index k = 0; k < x.rows(); ++k)
    phases(k) = std::exp(kI * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

/// Closest unitary in Frobenius norm (polar factor).
inline CMatrix nearest_unitary(const CMatrix& m) {
  const SvdResult s = svd(m);
  return s.u * s.v.adjoint();
}

/// Rank by eigenvalue count above rel_tol * (largest eigenvalue) of a PSD
/// Hermitian matrix.
inline int psd_rank(const CMatrix& gram, double rel_tol) {
  const RVector ev = hermitian_eigenvalues(gram);
  const double top = ev.size() ? ev.maxCoeff() : 0.0;
  if (top <= 0.0) return 0;
  return int((ev.array() > rel_tol * top).count());
}

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}
inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Block-diagonal matrix with `count` copies of `block` followed by `tail`.
inline CMatrix block_diag_repeat(const CMatrix& block, int count,
                                 const CMatrix& tail = CMatrix()) {
  const auto b = block.rows();
  const auto n = b * count + tail.rows();
  CMatrix out = CMatrix::Zero(n, n);
  for (int k = 0; k < count; ++k) out.block(k * b, k * b, b, b) = block;
  if (tail.size()) out.bottomRightCorner(tail.rows(), tail.cols()) = tail;
  return out;
}

}  // namespace unital
