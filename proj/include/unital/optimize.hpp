#pragma once

// Closed-form minima of tr[A conj A] at fixed singular values, the largest
// |tr U| at fixed tr[U conj U], and numerical minimization over the unitary
// group of tr[U conj(U)^T2] and its symmetrized variant.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "unital/covariant.hpp"
#include "unital/unitary_opt.hpp"
#include "unital/witness.hpp"

namespace unital {

struct MatrixValue {
  double value = 0.0;
  CMatrix matrix;
};

/// min tr[A conj A] over A with singular values sigma:
/// -2 sum_i sigma_{2i-1} sigma_{2i} (+ sigma_d^2 for odd d), attained by the
/// block matrix diag([[0, -sigma_2], [sigma_1, 0]], ..., sigma_d).
inline MatrixValue min_tr_a_abar(const RVector& sigma) {
  detail::require_sorted_nonnegative(sigma, "min_tr_a_abar");
  const auto d = sigma.size();
  if (d == 0) throw DimensionError("min_tr_a_abar: empty spectrum");
  MatrixValue out;
  out.matrix = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k + 1 < d; k += 2) {
    out.value -= 2.0 * sigma(k) * sigma(k + 1);
    out.matrix(k, k + 1) = -sigma(k + 1);
    out.matrix(k + 1, k) = sigma(k);
  }
  if (d % 2 == 1) {
    out.value += sigma(d - 1) * sigma(d - 1);
    out.matrix(d - 1, d - 1) = sigma(d - 1);
  }
  return out;
}

/// The block matrix with blocks [[0, s_i sigma_tau(2i)], [sigma_tau(2i-1), 0]]
/// for i = 1..r/2 (s_i = signs[i-1] = +-1) followed by the diagonal entries
/// sigma_tau(k), k > r. Its tr[A conj A] is
/// 2 sum_i s_i sigma_tau(2i-1) sigma_tau(2i) + sum_{k>r} sigma_tau(k)^2.
/// `tau` is a zero-based permutation.
inline MatrixValue attainable_tr_a_abar(const RVector& sigma, const std::vector<int>& tau, int r,
                                        const std::vector<int>& signs) {
  const int d = int(sigma.size());
  if (r < 0 || r % 2 != 0 || r > d) throw RangeError("attainable_tr_a_abar: r must be even and <= d");
  if (int(tau.size()) != d) throw DimensionError("attainable_tr_a_abar: tau must have length d");
  std::vector<int> check(tau);
  std::sort(check.begin(), check.end());
  for (int k = 0; k < d; ++k)
    if (check[std::size_t(k)] != k) throw PreconditionError("attainable_tr_a_abar: tau is not a permutation");
  if (int(signs.size()) != r / 2) throw DimensionError("attainable_tr_a_abar: need r/2 signs");
  MatrixValue out;
  out.matrix = CMatrix::Zero(d, d);
  for (int i = 0; i < r / 2; ++i) {
    const int s = signs[std::size_t(i)];
    if (s != 1 && s != -1) throw RangeError("attainable_tr_a_abar: signs must be +-1");
    const double a = sigma(tau[std::size_t(2 * i)]);
    const double b = sigma(tau[std::size_t(2 * i + 1)]);
    out.matrix(2 * i, 2 * i + 1) = double(s) * b;
    out.matrix(2 * i + 1, 2 * i) = a;
    out.value += 2.0 * s * a * b;
  }
  for (int k = r; k < d; ++k) {
    const double a = sigma(tau[std::size_t(k)]);
    out.matrix(k, k) = a;
    out.value += a * a;
  }
  return out;
}

/// max |tr U| subject to tr[U conj U] / d = x, for odd d.
inline MatrixValue max_abs_trace_given_x(double x, int d) {
  return {double(d) * m_curve(x, d), max_trace_unitary(x, d)};
}

/// (||U_s||_1, sqrt(tr[U conj U] + 2)) for a 2 x 2 unitary, U_s = (U + U^T)/2.
inline std::pair<double, double> u2_symmetric_trace_norm_identity(const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("u2_symmetric_trace_norm_identity: U must be 2 x 2");
  if (!is_unitary(u, 1e-9)) throw PreconditionError("u2_symmetric_trace_norm_identity: not unitary");
  const CMatrix us = 0.5 * (u + u.transpose());
  const double t = (u * u.conjugate()).trace().real();
  return {trace_norm(us), std::sqrt(std::max(0.0, t + 2.0))};
}

// ---------------------------------------------------------------------------
// objectives on U(n)

/// tr[U conj(U)^T2] / (d D) on C^d (x) C^D. df/d(conj U) = U^T1 / (d D).
struct TrUUbarT2 {
  int d = 1;
  int big_d = 1;
  int dim() const { return d * big_d; }
  double scale() const { return 1.0 / (double(d) * big_d); }
  double value(const CMatrix& u) const {
    return (u * partial_transpose(u.conjugate(), d, big_d, 2)).trace().real() * scale();
  }
  CMatrix wirtinger(const CMatrix& u) const { return scale() * partial_transpose(u, d, big_d, 1); }
  /// || U conj(U)^T2 - h.c. ||_F, zero at stationary points.
  double stationarity(const CMatrix& u) const {
    const CMatrix m = u * partial_transpose(u.conjugate(), d, big_d, 2);
    return (m - m.adjoint()).norm();
  }
};

/// tr[U_s conj(U_s)^T2] / (d1 d2) with U_s = (U + U^T) / 2.
struct TrUsymPT {
  int d1 = 1;
  int d2 = 1;
  int dim() const { return d1 * d2; }
  double scale() const { return 1.0 / (double(d1) * d2); }
  double value(const CMatrix& u) const {
    const CMatrix s = 0.5 * (u + u.transpose());
    return (s * partial_transpose(s.conjugate(), d1, d2, 2)).trace().real() * scale();
  }
  CMatrix wirtinger(const CMatrix& u) const {
    const CMatrix s = 0.5 * (u + u.transpose());
    const CMatrix gs = scale() * partial_transpose(s, d1, d2, 1);
    return 0.5 * (gs + gs.transpose());
  }
  /// Norm of the Riemannian gradient in units of the normalization.
  double stationarity(const CMatrix& u) const {
    return riemannian_gradient(*this, u).norm() / scale();
  }
};

enum class ObjectiveKind { tr_u_ubar_t2, tr_usym_pt };

inline ObjectiveKind parse_objective(const std::string& name) {
  if (name == "tr-u-ubar-t2") return ObjectiveKind::tr_u_ubar_t2;
  if (name == "tr-usym-pt") return ObjectiveKind::tr_usym_pt;
  throw RangeError("unknown objective '" + name + "'");
}

inline const char* to_string(ObjectiveKind k) {
  return k == ObjectiveKind::tr_u_ubar_t2 ? "tr-u-ubar-t2" : "tr-usym-pt";
}

struct OptimizeResult {
  double value = 0.0;
  CMatrix minimizer;
  int restarts_used = 0;
  double stationarity_residual = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct OptimizeOptions {
  int restarts = 50;
  std::uint64_t seed = 0;
  int max_iter = 3000;
  double tol = 1e-10;  // Riemannian gradient norm
};

template <class Objective>
OptimizeResult minimize_objective(const Objective& f, const OptimizeOptions& opt) {
  if (opt.restarts < 1) throw RangeError("manifold_minimize: restarts must be positive");
  DescentOptions dopt;
  dopt.max_iter = opt.max_iter;
  dopt.grad_tol = opt.tol;
  const DescentResult r = multistart(f, f.dim(), opt.restarts, opt.seed, dopt);
  OptimizeResult out;
  out.value = r.value;
  out.minimizer = r.u;
  out.restarts_used = opt.restarts;
  out.stationarity_residual = f.stationarity(r.u);
  out.grad_norm = r.grad_norm;
  out.iterations = r.iterations;
  out.converged = r.converged;
  return out;
}

/// Best local minimum over `restarts` Haar-random starts. `a`, `b` are
/// (d, D) for tr-u-ubar-t2 and (d1, d2) for tr-usym-pt.
inline OptimizeResult manifold_minimize(ObjectiveKind kind, int a, int b, const OptimizeOptions& opt) {
  if (a < 1 || b < 1) throw RangeError("manifold_minimize: dimensions must be positive");
  if (kind == ObjectiveKind::tr_u_ubar_t2) return minimize_objective(TrUUbarT2{a, b}, opt);
  return minimize_objective(TrUsymPT{a, b}, opt);
}

/// Numerical counterpart of min_tr_a_abar: min over unitary W of
/// tr[S W S conj W] with S = diag(sigma).
inline double min_tr_a_abar_numeric(const RVector& sigma, int restarts, std::uint64_t seed) {
  const CMatrix s = sigma.cast<Complex>().asDiagonal();
  return double(sigma.size()) * min_tr_b_ubar_oracle(s, restarts, seed);
}

}  // namespace unital
