#pragma once

// Separation witnesses W = (1 (x) B) F (1 (x) B^dagger) + w 1 built from the
// flip. W is non-negative on every mixture of unitary channels iff
// w >= -min_U tr[B^dagger U B^T conj(U)] / d, and that minimum depends on B
// only through its singular values.

#include <cstdint>

#include "unital/channel.hpp"
#include "unital/unitary_opt.hpp"

namespace unital {

struct Witness {
  int d = 0;
  CMatrix b;
  double w = 0.0;
  CMatrix matrix;
};

namespace detail {

inline void require_sorted_nonnegative(const RVector& sigma, const char* what) {
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) < 0.0) throw PreconditionError(std::string(what) + ": negative value");
    if (k > 0 && sigma(k) > sigma(k - 1))
      throw PreconditionError(std::string(what) + ": values must be non-increasing");
  }
}

}  // namespace detail

/// Smallest w making the flip ansatz a witness for B with singular values
/// `sigma`: (2 sum_i sigma_{2i-1} sigma_{2i} [- sigma_d^2 for odd d]) / d.
inline double tight_constant(const RVector& sigma) {
  detail::require_sorted_nonnegative(sigma, "tight_constant");
  const auto d = sigma.size();
  if (d == 0) throw DimensionError("tight_constant: empty spectrum");
  double s = 0.0;
  for (Eigen::Index k = 0; k + 1 < d; k += 2) s += 2.0 * sigma(k) * sigma(k + 1);
  if (d % 2 == 1) s -= sigma(d - 1) * sigma(d - 1);
  return s / double(d);
}

inline double tight_constant(const RVector& sigma, int d) {
  if (sigma.size() != d) throw DimensionError("tight_constant: expected d singular values");
  return tight_constant(sigma);
}

inline Witness flip_witness(const CMatrix& b) {
  detail::require_square(b, "flip_witness");
  const int d = int(b.rows());
  Witness wit;
  wit.d = d;
  wit.b = b;
  wit.w = tight_constant(singular_values(b));
  const CMatrix lb = kron(CMatrix::Identity(d, d), b);
  wit.matrix = lb * flip_operator(d) * lb.adjoint() +
               wit.w * CMatrix::Identity(d * d, d * d);
  return wit;
}

inline double evaluate(const Witness& wit, const ChoiState& rho) {
  if (rho.d != wit.d || rho.rho.rows() != wit.matrix.rows())
    throw DimensionError("evaluate: witness and state dimensions differ");
  return (wit.matrix * rho.rho).trace().real();
}

/// f(U) = tr[B^dagger U B^T conj(U)] / d; this is tr[W_0 rho_U] for the
/// unshifted witness on the unitary channel U.
struct WitnessObjective {
  CMatrix b;
  double value(const CMatrix& u) const {
    return (b.adjoint() * u * b.transpose() * u.conjugate()).trace().real() / double(b.rows());
  }
  CMatrix wirtinger(const CMatrix& u) const {
    return b * u.transpose() * b.conjugate() / double(b.rows());
  }
};

/// Multi-start local minimum of tr[B^dagger U B^T conj(U)] / d. An upper
/// bound on the global minimum.
inline double min_tr_b_ubar_oracle(const CMatrix& b, int trials = 50, std::uint64_t seed = 0) {
  detail::require_square(b, "min_tr_b_ubar_oracle");
  if (trials < 1) throw RangeError("min_tr_b_ubar_oracle: trials must be positive");
  DescentOptions opt;
  opt.max_iter = 2000;
  return multistart(WitnessObjective{b}, int(b.rows()), trials, seed, opt).value;
}

}  // namespace unital
