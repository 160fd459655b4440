#pragma once

// Channels covariant under U -> O (x) O for real orthogonal O. Their Choi
// states live in span{P0, P1, P2} with P0 = |Omega><Omega|, P1 = (1 - F)/2
// and P2 = (1 + F)/2 - P0, and are fixed by the coordinates (<F>, <F_hat>).

#include <array>
#include <cmath>
#include <vector>

#include "unital/channel.hpp"

namespace unital {

struct CovariantCoords {
  double x = 0.0;  // <F>
  double y = 0.0;  // <F_hat>
};

/// rho = q0 rho0 + q1 rho1 + q2 rho2 with rho_i = P_i / tr P_i.
struct CovariantState {
  int d = 0;
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
};

inline constexpr double kCovariantTol = 1e-9;

inline std::array<CMatrix, 3> covariant_projectors(int d) {
  if (d < 2) throw RangeError("covariant_projectors: d >= 2 required");
  const CMatrix id = CMatrix::Identity(d * d, d * d);
  const CMatrix f = flip_operator(d);
  const CMatrix p0 = omega_projector(d);
  return {p0, 0.5 * (id - f), 0.5 * (id + f) - p0};
}

inline CovariantCoords coords(const CovariantState& s) {
  return {s.q0 - s.q1 + s.q2, double(s.d) * s.q0};
}

inline CovariantState state_from_coords(const CovariantCoords& c, int d) {
  const double q0 = c.y / double(d);
  const double q1 = 0.5 * (1.0 - c.x);
  return {d, q0, q1, 1.0 - q0 - q1};
}

inline CovariantCoords coords_of_state(const ChoiState& rho) {
  return {(flip_operator(rho.d) * rho.rho).trace().real(),
          (flip_hat(rho.d) * rho.rho).trace().real()};
}

/// Group average over O (x) O. The weights are q_i = tr[rho P_i].
inline CovariantState twirl(const ChoiState& rho) {
  const auto p = covariant_projectors(rho.d);
  if (rho.rho.rows() != rho.d * rho.d) throw DimensionError("twirl: rho must be d^2 x d^2");
  return {rho.d, (p[0] * rho.rho).trace().real(), (p[1] * rho.rho).trace().real(),
          (p[2] * rho.rho).trace().real()};
}

inline ChoiState to_choi(const CovariantState& s) {
  const auto p = covariant_projectors(s.d);
  CMatrix rho = s.q0 * p[0];
  rho += s.q1 / p[1].trace().real() * p[1];
  rho += s.q2 / p[2].trace().real() * p[2];
  return {s.d, rho};
}

/// (tr[U conj U] / d, |tr U|^2 / d): the coordinates of the twirled unitary
/// channel U.
inline CovariantCoords coords_of_unitary(const CMatrix& u) {
  if (!is_unitary(u, 1e-9)) throw PreconditionError("coords_of_unitary: matrix is not unitary");
  const double d = double(u.rows());
  return {(u * u.conjugate()).trace().real() / d, std::norm(u.trace()) / d};
}

// ---------------------------------------------------------------------------
// boundary of the unitary mixtures

namespace detail {

inline void require_odd(int d, const char* what) {
  if (d < 3 || d % 2 == 0) throw RangeError(std::string(what) + ": d must be odd and >= 3");
}

inline double clamp_x(double x, int d, const char* what) {
  const double x0 = -1.0 + 2.0 / d;
  if (x < x0 - 1e-12 || x > 1.0 + 1e-12)
    throw RangeError(std::string(what) + ": x outside [-1+2/d, 1]");
  return std::clamp(x, x0, 1.0);
}

}  // namespace detail

/// Largest |tr U| / d over unitaries with tr[U conj U] / d = x (d odd).
inline double m_curve(double x, int d) {
  detail::require_odd(d, "m_curve");
  x = detail::clamp_x(x, d, "m_curve");
  const double dd = d;
  return std::sqrt(0.5 * (1.0 - 1.0 / dd) * (1.0 - 2.0 / dd + x)) + 1.0 / dd;
}

/// diag(R, ..., R, 1) with R = [[a, b], [-b, a]] real rotations; attains
/// m_curve(x, d).
inline CMatrix max_trace_unitary(double x, int d) {
  detail::require_odd(d, "max_trace_unitary");
  x = detail::clamp_x(x, d, "max_trace_unitary");
  const double a = std::sqrt(std::clamp((d * (1.0 + x) - 2.0) / (2.0 * (d - 1)), 0.0, 1.0));
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  CMatrix r(2, 2);
  r << a, b, -b, a;
  return block_diag_repeat(r, (d - 1) / 2, CMatrix::Identity(1, 1));
}

/// 1, diag(sigma_y, ...) and diag(sigma_z, ...): the vertices (1, d), (-1, 0),
/// (1, 0) for even d.
inline std::array<CMatrix, 3> even_vertex_unitaries(int d) {
  if (d < 2 || d % 2 != 0) throw RangeError("even_vertex_unitaries: d must be even");
  return {CMatrix::Identity(d, d), block_diag_repeat(pauli_y(), d / 2),
          block_diag_repeat(pauli_z(), d / 2)};
}

/// Unitaries with coordinates (-1 + 2/d, 0) and (1, 0) for odd d.
inline std::array<CMatrix, 2> odd_vertex_unitaries(int d) {
  detail::require_odd(d, "odd_vertex_unitaries");
  const Complex i = kI;
  CMatrix q0(3, 3);
  q0 << 0.0, 1.0 - i, -1.0 - i,
        -1.0 + i, -i, 1.0,
        1.0 + i, 1.0, i;
  q0 *= 0.5;
  const Complex phi = std::exp(2.0 * M_PI * i / 3.0);
  CMatrix tail = CMatrix::Zero(3, 3);
  tail(0, 0) = phi;
  tail(1, 1) = phi * phi;
  tail(2, 2) = 1.0;
  const int blocks = (d - 3) / 2;
  return {block_diag_repeat(pauli_y(), blocks, q0), block_diag_repeat(pauli_z(), blocks, tail)};
}

/// Whether the covariant state with these coordinates is a mixture of
/// unitary channels. Even d: the whole state triangle. Odd d: the region
/// between the base segment y = 0 and the concave curve y = d m(x)^2.
inline bool membership_in_U(const CovariantCoords& c, int d, double tol = kCovariantTol) {
  if (d < 2) throw RangeError("membership_in_U: d >= 2 required");
  if (c.y < -tol || c.x > 1.0 + tol) return false;
  if (d % 2 == 0) return c.y <= 0.5 * d * (1.0 + c.x) + tol;
  const double x0 = -1.0 + 2.0 / d;
  if (c.x < x0 - tol) return false;
  const double m = m_curve(std::clamp(c.x, x0, 1.0), d);
  return c.y <= d * m * m + tol;
}

/// Base-norm distance to the unitary mixtures within the covariant states:
/// the least alpha_n with rho = (1 + alpha_n) sigma_p - alpha_n sigma_n.
inline double negativity(const CovariantState& s, double tol = kCovariantTol) {
  if (s.q0 < -tol || s.q1 < -tol || s.q2 < -tol || std::abs(s.q0 + s.q1 + s.q2 - 1.0) > 1e-8)
    throw PreconditionError("negativity: weights must form a probability vector");
  if (membership_in_U(coords(s), s.d, tol)) return 0.0;
  detail::require_odd(s.d, "negativity");
  if (s.q1 <= 0.0) throw PreconditionError("negativity: q1 must be positive outside the mixtures");
  const double d = s.d;
  const double q = s.q0 / s.q1;
  if (q > 1.0 / (d * (d - 1.0))) {
    const double root = std::sqrt(q * q + (d - 2.0) / (d - 1.0) * q);
    return (d - 1.0 + (d + 2.0 / (d - 2.0)) * q - 2.0 * (d - 1.0) / (d - 2.0) * root) /
               (d - 2.0) * s.q1 -
           1.0;
  }
  return d / (d - 1.0) * s.q1 - 1.0;
}

// ---------------------------------------------------------------------------
// the family T(rho) = ((1 + delta) tr[rho] 1 - delta d rho^T) / d

/// Normalized projections onto the antisymmetric (minus) and symmetric (plus)
/// subspaces.
inline CMatrix rho_minus(int d) {
  const CMatrix p = 0.5 * (CMatrix::Identity(d * d, d * d) - flip_operator(d));
  return p / p.trace().real();
}
inline CMatrix rho_plus(int d) {
  const CMatrix p = 0.5 * (CMatrix::Identity(d * d, d * d) + flip_operator(d));
  return p / p.trace().real();
}

/// Values within this distance outside [0, 2/d] are snapped onto the end
/// point, so that rounded inputs such as 0.6667 for d = 3 are accepted.
inline constexpr double kEpsilonSnap = 1e-4;

inline double snap_epsilon(double epsilon, int d) {
  const double hi = 2.0 / d;
  if (epsilon < -kEpsilonSnap || epsilon > hi + kEpsilonSnap || std::isnan(epsilon))
    throw RangeError("covariant_family: epsilon outside [0, 2/d]");
  return std::clamp(epsilon, 0.0, hi);
}

/// rho_T = (1 - 1/d + eps/2) rho_minus + (1/d - eps/2) rho_plus; tr[rho_T F]
/// = -1 + 2/d - eps. eps in (0, 2/d] lies outside the unitary mixtures.
inline ChoiState covariant_family(int d, double epsilon) {
  detail::require_odd(d, "covariant_family");
  const double e = snap_epsilon(epsilon, d);
  const double dd = d;
  return {d, (1.0 - 1.0 / dd + 0.5 * e) * rho_minus(d) + (1.0 / dd - 0.5 * e) * rho_plus(d)};
}

/// Choi state (1 + delta) / d^2 1 - (delta / d) F of the delta form.
inline ChoiState covariant_family_delta(int d, double delta) {
  const double dd = d;
  return {d, (1.0 + delta) / (dd * dd) * CMatrix::Identity(d * d, d * d) -
                 delta / dd * flip_operator(d)};
}

inline double epsilon_from_delta(double delta, int d) {
  return (d - 1.0) * (delta * (d + 1.0) - 1.0) / double(d);
}

inline double delta_from_epsilon(double epsilon, int d) {
  return (double(d) * epsilon / (d - 1.0) + 1.0) / (d + 1.0);
}

}  // namespace unital
