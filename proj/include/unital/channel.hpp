#pragma once

// Channel representations (Kraus, Choi state, Hilbert-Schmidt superoperator),
// the CP/TP/unital predicates and the two constructive representations of a
// unital channel: as an average of two unitaries on Hilbert-Schmidt space and
// as an affine combination of unitary conjugations.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unital/linalg.hpp"
#include "unital/random.hpp"

namespace unital {

struct KrausChannel {
  int d = 0;
  std::vector<CMatrix> kraus;
};

struct ChoiState {
  int d = 0;
  CMatrix rho;  // d^2 x d^2, input factor first
};

/// Matrix of the channel on row-major vectorized operators,
/// vec(A X B) = (A (x) B^T) vec(X).
struct Superoperator {
  int d = 0;
  CMatrix that;
};

struct MixtureOfUnitaries {
  RVector weights;
  std::vector<CMatrix> unitaries;
};

struct AffineUnitaryCombo {
  RVector coefficients;
  std::vector<CMatrix> unitaries;
  double residual = 0.0;  // Frobenius norm of sum_i c_i U_i(x)conj(U_i) - T
  int attempts = 0;
};

/// T = (W_plus + W_minus) / 2 with both W unitary on Hilbert-Schmidt space.
struct HsDecomposition {
  double weight_plus = 0.5;
  double weight_minus = 0.5;
  CMatrix w_plus;
  CMatrix w_minus;
};

// ---------------------------------------------------------------------------
// construction

inline KrausChannel make_channel(std::vector<CMatrix> kraus) {
  if (kraus.empty()) throw DimensionError("channel needs at least one Kraus operator");
  const auto d = kraus.front().rows();
  for (const auto& a : kraus)
    if (a.rows() != d || a.cols() != d)
      throw DimensionError("Kraus operators must all be square of equal size");
  return {int(d), std::move(kraus)};
}

inline KrausChannel identity_channel(int d) {
  return make_channel({CMatrix::Identity(d, d)});
}

inline KrausChannel unitary_channel(const CMatrix& u) { return make_channel({u}); }

inline KrausChannel mixture_channel(const MixtureOfUnitaries& m) {
  std::vector<CMatrix> ks;
  for (std::size_t i = 0; i < m.unitaries.size(); ++i)
    ks.push_back(std::sqrt(m.weights(Eigen::Index(i))) * m.unitaries[i]);
  return make_channel(std::move(ks));
}

/// T(rho) = (tr[rho] 1 - rho^T) / (d - 1).
inline KrausChannel werner_holevo_channel(int d) {
  if (d < 2) throw RangeError("werner_holevo_channel: d >= 2 required");
  std::vector<CMatrix> ks;
  const double s = 1.0 / std::sqrt(double(d - 1));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix a = CMatrix::Zero(d, d);
      a(j, k) = s;
      a(k, j) = -s;
      ks.push_back(a);
    }
  return make_channel(std::move(ks));
}

/// T(rho) = tr[rho] 1 / d.
inline KrausChannel completely_depolarizing_channel(int d) {
  std::vector<CMatrix> ks;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      CMatrix a = CMatrix::Zero(d, d);
      a(j, k) = 1.0 / std::sqrt(double(d));
      ks.push_back(a);
    }
  return make_channel(std::move(ks));
}

/// Kraus union realizing alpha T1 + (1 - alpha) T2.
inline KrausChannel convex_combination(double alpha, const KrausChannel& t1,
                                       const KrausChannel& t2) {
  if (t1.d != t2.d) throw DimensionError("convex_combination: dimension mismatch");
  if (alpha < 0.0 || alpha > 1.0) throw RangeError("convex_combination: alpha outside [0,1]");
  std::vector<CMatrix> ks;
  for (const auto& a : t1.kraus) ks.push_back(std::sqrt(alpha) * a);
  for (const auto& a : t2.kraus) ks.push_back(std::sqrt(1.0 - alpha) * a);
  return make_channel(std::move(ks));
}

inline CMatrix apply(const KrausChannel& ch, const CMatrix& rho) {
  CMatrix out = CMatrix::Zero(ch.d, ch.d);
  for (const auto& a : ch.kraus) out += a * rho * a.adjoint();
  return out;
}

// ---------------------------------------------------------------------------
// predicates

inline bool is_tp(const KrausChannel& ch, double tol = kDefaultTol) {
  CMatrix s = CMatrix::Zero(ch.d, ch.d);
  for (const auto& a : ch.kraus) s += a.adjoint() * a;
  return (s - CMatrix::Identity(ch.d, ch.d)).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unital(const KrausChannel& ch, double tol = kDefaultTol) {
  CMatrix s = CMatrix::Zero(ch.d, ch.d);
  for (const auto& a : ch.kraus) s += a * a.adjoint();
  return (s - CMatrix::Identity(ch.d, ch.d)).cwiseAbs().maxCoeff() <= tol;
}

/// Any Kraus form is completely positive.
inline bool is_cp(const KrausChannel&, double = kDefaultTol) { return true; }

inline bool is_cp(const ChoiState& c, double tol = kDefaultTol) {
  return is_psd(c.rho, tol);
}

inline bool is_tp(const ChoiState& c, double tol = kDefaultTol) {
  const CMatrix r = partial_trace(c.rho, c.d, c.d, 2);
  return (r - CMatrix::Identity(c.d, c.d) / double(c.d)).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unital(const ChoiState& c, double tol = kDefaultTol) {
  const CMatrix r = partial_trace(c.rho, c.d, c.d, 1);
  return is_tp(c, tol) &&
         (r - CMatrix::Identity(c.d, c.d) / double(c.d)).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// conversions

/// rho_T = (id (x) T)(|Omega><Omega|) = sum_i (1 (x) A_i)|Omega><Omega|(1 (x) A_i)^dagger.
/// A non-trace-preserving input is converted anyway; `warning` receives a note.
inline ChoiState kraus_to_choi(const KrausChannel& ch, std::string* warning = nullptr) {
  if (warning) {
    warning->clear();
    if (!is_tp(ch)) *warning = "channel is not trace preserving";
  }
  const int d = ch.d;
  CMatrix rho = CMatrix::Zero(d * d, d * d);
  for (const auto& a : ch.kraus) {
    // (1 (x) A)|Omega> has amplitude A(k, j) / sqrt(d) on |j, k>
    CVector psi(d * d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) psi(j * d + k) = a(k, j) / std::sqrt(double(d));
    rho += psi * psi.adjoint();
  }
  return {d, rho};
}

/// Inverse duality: one Kraus operator per eigenvalue above rank_tol.
inline KrausChannel choi_to_kraus(const ChoiState& c, double rank_tol = 1e-10,
                                  double psd_tol = kDefaultTol) {
  const int d = c.d;
  if (c.rho.rows() != d * d || c.rho.cols() != d * d)
    throw DimensionError("choi_to_kraus: rho must be d^2 x d^2");
  if (!is_hermitian(c.rho, psd_tol)) throw PreconditionError("choi_to_kraus: rho is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (c.rho + c.rho.adjoint()));
  if (es.eigenvalues().minCoeff() < -psd_tol)
    throw PreconditionError("choi_to_kraus: rho has a negative eigenvalue");
  std::vector<CMatrix> ks;
  for (Eigen::Index n = es.eigenvalues().size() - 1; n >= 0; --n) {
    const double lam = es.eigenvalues()(n);
    if (lam <= rank_tol) continue;
    const CVector v = es.eigenvectors().col(n);
    CMatrix a(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) a(k, j) = std::sqrt(lam * d) * v(j * d + k);
    ks.push_back(a);
  }
  if (ks.empty()) throw PreconditionError("choi_to_kraus: rho has no support above rank_tol");
  return make_channel(std::move(ks));
}

inline Superoperator to_superoperator(const KrausChannel& ch) {
  CMatrix t = CMatrix::Zero(ch.d * ch.d, ch.d * ch.d);
  for (const auto& a : ch.kraus) t += kron(a, a.conjugate());
  return {ch.d, t};
}

inline CMatrix conjugation_superoperator(const CMatrix& u) { return kron(u, u.conjugate()); }

// ---------------------------------------------------------------------------
// random unital channels

/// Operator Sinkhorn scaling of a full-rank state on C^d (x) C^d until both
/// marginals equal 1/d. The result is the Choi state of a unital channel.
inline CMatrix sinkhorn_unital_choi(CMatrix rho, int d, double tol = 1e-14,
                                   int max_iter = 10000) {
  const CMatrix id = CMatrix::Identity(d, d);
  auto inv_sqrt = [&](const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
    const RVector s = es.eigenvalues().cwiseSqrt().cwiseInverse();
    return CMatrix(es.eigenvectors() * s.cast<Complex>().asDiagonal() *
                   es.eigenvectors().adjoint());
  };
  for (int it = 0; it < max_iter; ++it) {
    const CMatrix out = partial_trace(rho, d, d, 1);
    const CMatrix x = kron(id, inv_sqrt(double(d) * out));
    rho = x * rho * x.adjoint();
    const CMatrix in = partial_trace(rho, d, d, 2);
    const CMatrix y = kron(inv_sqrt(double(d) * in), id);
    rho = y * rho * y.adjoint();
    const double err =
        (partial_trace(rho, d, d, 1) - id / double(d)).cwiseAbs().maxCoeff();
    if (err < tol) break;
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return rho;
}

/// Generic unital channel: Sinkhorn-balanced random Choi state of the given
/// rank (full rank d^2 when rank <= 0).
inline KrausChannel random_unital_channel(int d, Rng& rng, int rank = 0) {
  const int r = rank <= 0 ? d * d : rank;
  const CMatrix g = random_ginibre(d * d, r, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  if (r < d * d) rho += 1e-3 * CMatrix::Identity(d * d, d * d) / double(d * d);
  return choi_to_kraus({d, sinkhorn_unital_choi(rho, d)}, 1e-13);
}

inline MixtureOfUnitaries random_mixture_of_unitaries(int d, int count, Rng& rng) {
  MixtureOfUnitaries m;
  m.weights = random_probabilities(count, rng);
  for (int i = 0; i < count; ++i) m.unitaries.push_back(haar_unitary(d, rng));
  return m;
}

// ---------------------------------------------------------------------------
// representations of unital channels

/// Traceless Hermitian basis from embedded Pauli matrices: sigma_x^{jk},
/// sigma_y^{jk} for j < k, then sigma_z^j = |j><j| - |j+1><j+1|.
inline std::vector<CMatrix> pauli_basis(int d) {
  if (d < 2) throw RangeError("pauli_basis: d >= 2 required");
  std::vector<CMatrix> out;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix x = CMatrix::Zero(d, d);
      x(j, k) = 1.0;
      x(k, j) = 1.0;
      CMatrix y = CMatrix::Zero(d, d);
      y(j, k) = -kI;
      y(k, j) = kI;
      out.push_back(x);
      out.push_back(y);
    }
  for (int j = 0; j + 1 < d; ++j) {
    CMatrix z = CMatrix::Zero(d, d);
    z(j, j) = 1.0;
    z(j + 1, j + 1) = -1.0;
    out.push_back(z);
  }
  return out;
}

/// Unital channels are exactly the Hilbert-Schmidt contractions, and a
/// contraction with SVD t = U D V^dagger is the average of the unitaries
/// U (D +- i sqrt(1 - D^2)) V^dagger.
inline HsDecomposition hs_contraction_decomposition(const Superoperator& t,
                                                    double tol = kDefaultTol) {
  const SvdResult s = svd(t.that);
  if (s.sigma.size() && s.sigma(0) > 1.0 + tol)
    throw PreconditionError("hs_contraction_decomposition: operator norm exceeds 1");
  const auto n = s.sigma.size();
  CVector plus(n), minus(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double c = std::min(1.0, s.sigma(k));
    const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
    plus(k) = Complex(c, sn);
    minus(k) = Complex(c, -sn);
  }
  HsDecomposition out;
  out.w_plus = s.u * plus.asDiagonal() * s.v.adjoint();
  out.w_minus = s.u * minus.asDiagonal() * s.v.adjoint();
  return out;
}

/// Smallest generator count for which Haar-random conjugations generically
/// span B(traceless Hermitian) plus the identity map.
inline int min_affine_generators(int d) { return (d * d - 1) * (d * d - 1) + 2; }

/// T = sum_i c_i U_i . U_i^dagger with real c_i summing to one.
///
/// The generator family is the identity conjugation plus `generator_count`
/// Haar-random conjugations; these span the affine hull of unitary channels
/// with probability one (an explicit spanning family also exists: compose
/// the block conjugations diag(1_2, -1), diag(sigma_y, 1), diag(sigma_z, 1)
/// to isolate each embedded Pauli basis element, then permute). The
/// coefficients are the minimum-norm least-squares solution of
/// sum_i c_i (U_i (x) conj U_i) = T together with sum_i c_i = 1. A
/// rank-deficient draw is re-sampled up to `max_retries` times.
inline AffineUnitaryCombo affine_unitary_decomposition(const KrausChannel& ch,
                                                       int generator_count,
                                                       std::uint64_t seed,
                                                       int max_retries = 5) {
  const int d = ch.d;
  if (!is_tp(ch) || !is_unital(ch))
    throw PreconditionError("affine_unitary_decomposition: channel must be unital and trace preserving");
  if (generator_count < min_affine_generators(d))
    throw RangeError("affine_unitary_decomposition: generator_count below (d^2-1)^2+2");
  const CMatrix target = to_superoperator(ch).that;
  const int n2 = d * d * d * d;
  const int expected_rank = (d * d - 1) * (d * d - 1) + 1;
  Rng rng(seed);

  for (int attempt = 1; attempt <= max_retries + 1; ++attempt) {
    std::vector<CMatrix> us{CMatrix::Identity(d, d)};
    for (int k = 0; k < generator_count; ++k) us.push_back(haar_unitary(d, rng));
    const auto m = Eigen::Index(us.size());

    Eigen::MatrixXd a(2 * n2 + 1, m);
    Eigen::VectorXd b(2 * n2 + 1);
    for (Eigen::Index i = 0; i < m; ++i) {
      const CMatrix s = conjugation_superoperator(us[std::size_t(i)]);
      for (int r = 0; r < n2; ++r) {
        const Complex z = s(r / (d * d), r % (d * d));
        a(r, i) = z.real();
        a(n2 + r, i) = z.imag();
      }
      a(2 * n2, i) = 1.0;
    }
    for (int r = 0; r < n2; ++r) {
      const Complex z = target(r / (d * d), r % (d * d));
      b(r) = z.real();
      b(n2 + r) = z.imag();
    }
    b(2 * n2) = 1.0;

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(1e-10);
    cod.compute(a);
    if (cod.rank() < expected_rank) continue;
    const Eigen::VectorXd c = cod.solve(b);

    CMatrix recon = CMatrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < m; ++i)
      recon += c(i) * conjugation_superoperator(us[std::size_t(i)]);
    const double residual = (recon - target).norm();
    if (residual >= 1e-8 || std::abs(c.sum() - 1.0) > 1e-10) continue;
    return {c, std::move(us), residual, attempt};
  }
  throw ConvergenceError("affine_unitary_decomposition: spanning family rank deficient");
}

}  // namespace unital
