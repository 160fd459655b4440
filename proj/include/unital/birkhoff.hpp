#pragma once

// Tensor products T (x) T~ of covariant channels that are mixtures of unitary
// channels although T alone is not. Two cases: two copies of T (d = 3), and T
// supplemented by a completely depolarizing channel on C^D.

#include <array>
#include <cmath>
#include <string>

#include "unital/covariant.hpp"
#include "unital/quaternion.hpp"

namespace unital {

/// (<F>, <F12>) with F = (1 (x) F + F (x) 1) / 2 and F12 = F (x) F, the flips
/// acting between input and output of each copy.
struct TwoCopyCoords {
  double f = 0.0;
  double f12 = 0.0;
};

inline TwoCopyCoords two_copy_coords_of_states(const ChoiState& a, const ChoiState& b) {
  if (a.d != b.d) throw DimensionError("two_copy_coords_of_states: dimension mismatch");
  const double xa = coords_of_state(a).x;
  const double xb = coords_of_state(b).x;
  return {0.5 * (xa + xb), xa * xb};
}

/// Reorders the tensor factors of an operator on (x)_k C^{dims[k]}: factor k
/// of the input becomes factor perm[k] of the output.
inline CMatrix permute_subsystems(const CMatrix& m, const std::vector<int>& dims,
                                  const std::vector<int>& perm) {
  const std::size_t n = dims.size();
  if (perm.size() != n) throw DimensionError("permute_subsystems: perm size mismatch");
  int total = 1;
  for (int d : dims) total *= d;
  if (m.rows() != total || m.cols() != total)
    throw DimensionError("permute_subsystems: operator size mismatch");
  std::vector<int> out_dims(n);
  for (std::size_t k = 0; k < n; ++k) out_dims[std::size_t(perm[k])] = dims[k];

  std::vector<int> map(static_cast<std::size_t>(total));
  std::vector<int> digits(n);
  for (int idx = 0; idx < total; ++idx) {
    int r = idx;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = r % dims[k];
      r /= dims[k];
    }
    int out = 0;
    std::vector<int> od(n);
    for (std::size_t k = 0; k < n; ++k) od[std::size_t(perm[k])] = digits[k];
    for (std::size_t k = 0; k < n; ++k) out = out * out_dims[k] + od[k];
    map[std::size_t(idx)] = out;
  }
  CMatrix res(total, total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) res(map[std::size_t(i)], map[std::size_t(j)]) = m(i, j);
  return res;
}

/// Coordinates of a state on C^{d^2} (x) C^{d^2} given in the order
/// (input copy 1, input copy 2, output copy 1, output copy 2).
inline TwoCopyCoords two_copy_coords_of_joint_state(const CMatrix& rho, int d) {
  const CMatrix r = permute_subsystems(rho, {d, d, d, d}, {0, 2, 1, 3});
  const CMatrix f = flip_operator(d);
  const CMatrix id = CMatrix::Identity(d * d, d * d);
  const CMatrix fsym = 0.5 * (kron(id, f) + kron(f, id));
  return {(fsym * r).trace().real(), (kron(f, f) * r).trace().real()};
}

/// Unitary channel U on C^d (x) C^d: f12 = tr[U conj U] / d^2 and
/// f = tr[U_s conj(U_s)^T2] / d^2 with U_s = (U + U^T) / 2.
inline TwoCopyCoords two_copy_coords_of_unitary(const CMatrix& u, int d) {
  if (u.rows() != d * d) throw DimensionError("two_copy_coords_of_unitary: expected d^2 x d^2");
  if (!is_unitary(u, 1e-9)) throw PreconditionError("two_copy_coords_of_unitary: not unitary");
  const double n = double(d) * d;
  const CMatrix us = 0.5 * (u + u.transpose());
  return {(us * partial_transpose(us.conjugate(), d, d, 2)).trace().real() / n,
          (u * u.conjugate()).trace().real() / n};
}

// ---------------------------------------------------------------------------
// the d = 3 construction

/// (f, f12) = ((-8/3 (cos t + 1)^2 + 3) / 9, (16 cos^2 t - 7) / 9).
inline TwoCopyCoords theta_curve(double theta) {
  if (!(theta >= -1e-12 && theta <= M_PI / 2 + 1e-12))
    throw RangeError("theta_curve: theta outside [0, pi/2]");
  const double c = std::cos(theta);
  return {(-8.0 / 3.0 * (c + 1.0) * (c + 1.0) + 3.0) / 9.0, (16.0 * c * c - 7.0) / 9.0};
}

/// The fixed 9 x 9 unitary V splitting U = V D V^T for d = 3.
inline CMatrix two_copy_v() {
  const Complex i = kI;
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  CMatrix v = CMatrix::Zero(9, 9);
  v(0, 1) = i / s2;
  v(0, 2) = -i / (2.0 * s6);
  v(0, 4) = -i / (2.0 * s2);
  v(0, 8) = 1.0 / s3;
  v(1, 0) = i / s2;
  v(1, 2) = -std::sqrt(3.0 / 8.0);
  v(1, 4) = 1.0 / (2.0 * s2);
  v(2, 5) = 1.0 / s2;
  v(2, 7) = i / s2;
  v(3, 0) = i / s2;
  v(3, 2) = std::sqrt(3.0 / 8.0);
  v(3, 4) = -1.0 / (2.0 * s2);
  v(4, 2) = i / s6;
  v(4, 4) = i / s2;
  v(4, 8) = 1.0 / s3;
  v(5, 3) = 1.0 / s2;
  v(5, 6) = i / s2;
  v(6, 5) = -1.0 / s2;
  v(6, 7) = i / s2;
  v(7, 3) = -1.0 / s2;
  v(7, 6) = i / s2;
  v(8, 1) = -i / s2;
  v(8, 2) = -i / (2.0 * s6);
  v(8, 4) = -i / (2.0 * s2);
  v(8, 8) = 1.0 / s3;
  return v;
}

/// Four 2 x 2 rotations by theta followed by a 1.
inline CMatrix theta_block(double theta) {
  CMatrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return block_diag_repeat(r, 4, CMatrix::Identity(1, 1));
}

/// U = V D(theta) V^T, whose two-copy coordinates trace theta_curve.
inline CMatrix theta_construction(double theta) {
  const CMatrix v = two_copy_v();
  return v * theta_block(theta) * v.transpose();
}

/// g_ij = tr[s_ij^2] / (d1 d2) where (s_ij)_kl = <x_ik, x_jl> and x_ik is the
/// k-th block (length d2) of column i of V.
inline CMatrix gram_G(const CMatrix& v, int d1, int d2) {
  const int n = d1 * d2;
  if (v.rows() != n || v.cols() != n) throw DimensionError("gram_G: V must be (d1 d2)-square");
  if (!is_unitary(v, 1e-9)) throw PreconditionError("gram_G: V is not unitary");
  std::vector<CMatrix> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    CMatrix xi(d1, d2);
    for (int k = 0; k < d1; ++k)
      for (int l = 0; l < d2; ++l) xi(k, l) = v(k * d2 + l, i);
    x[std::size_t(i)] = xi;
  }
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CMatrix s = x[std::size_t(i)].conjugate() * x[std::size_t(j)].transpose();
      g(i, j) = (s * s).trace() / double(n);
    }
  return g;
}

/// Parameter of the family whose square T (x) T meets theta_curve:
/// (2/3)(4 - 3 sqrt 2 - sqrt 3 + sqrt 6).
inline double epsilon_star() {
  return 2.0 / 3.0 * (4.0 - 3.0 * std::sqrt(2.0) - std::sqrt(3.0) + std::sqrt(6.0));
}

/// f-coordinate of theta_curve at the point with f12 = y.
inline double theta_curve_f_at(double y) {
  const double c = std::sqrt(std::max(0.0, (9.0 * y + 7.0) / 16.0));
  return (-8.0 / 3.0 * (c + 1.0) * (c + 1.0) + 3.0) / 9.0;
}

/// Convex hull of theta_curve and the points (1, 1), (1/9, -7/9). The curve
/// is convex as a function of f12, so the region is
/// -7/9 <= f12 <= 1, curve(f12) <= f <= 1/9 + (f12 + 7/9) / 2.
inline bool two_copy_membership(const TwoCopyCoords& c, double tol = 1e-9) {
  if (c.f12 < -7.0 / 9.0 - tol || c.f12 > 1.0 + tol) return false;
  const double y = std::clamp(c.f12, -7.0 / 9.0, 1.0);
  return c.f >= theta_curve_f_at(y) - tol && c.f <= 1.0 / 9.0 + 0.5 * (y + 7.0 / 9.0) + tol;
}

// ---------------------------------------------------------------------------
// supplementing by a completely depolarizing channel

/// tr[U conj(U)^T2] / (d D) for U on C^d (x) C^D; the <Y> coordinate of the
/// unitary channel U.
inline double y_expectation(const CMatrix& u, int d, int big_d) {
  if (d < 1 || big_d < 1 || u.rows() != d * big_d || u.cols() != d * big_d)
    throw DimensionError("y_expectation: U must be (d D)-square");
  if (!is_unitary(u, 1e-9)) throw PreconditionError("y_expectation: not unitary");
  return (u * partial_transpose(u.conjugate(), d, big_d, 2)).trace().real() /
         (double(d) * big_d);
}

/// Quaternion matrices A with A^2 + 2A - (d^2 - 1) = 0, giving the Hermitian
/// unitary (1 + A) / d.
inline QuaternionMatrix quaternion_a(int d) {
  using Q = Quaternion;
  QuaternionMatrix a(d);
  if (d == 3) {
    a(0, 1) = Q::i(-2);
    a(0, 2) = Q::j(2);
    a(1, 0) = Q::i(2);
    a(1, 2) = Q::k(-2);
    a(2, 0) = Q::j(-2);
    a(2, 1) = Q::k(2);
    return a;
  }
  if (d == 5) {
    const double r = std::sqrt(12.0);
    a(0, 1) = Q::i(-2);
    a(0, 2) = Q::j(-r);
    a(0, 3) = Q::k(2);
    a(0, 4) = Q::j(-2);
    a(1, 0) = Q::i(2);
    a(1, 3) = Q::j(-2);
    a(1, 4) = Q::k(4);
    a(2, 0) = Q::j(r);
    a(2, 3) = Q::i(-r);
    a(3, 0) = Q::k(-2);
    a(3, 1) = Q::j(2);
    a(3, 2) = Q::i(r);
    a(3, 4) = Q::i(-2);
    a(4, 0) = Q::j(2);
    a(4, 1) = Q::k(-4);
    a(4, 3) = Q::i(2);
    return a;
  }
  throw RangeError("quaternion_a: only d = 3 and d = 5 are available");
}

struct QuaternionCertificate {
  int d = 0;
  CMatrix a;  // 2d x 2d embedding of A
  CMatrix u;  // (1 + A) / d
  double y = 0.0;
  double hermitian_defect = 0.0;
  double unitary_defect = 0.0;
  double polynomial_defect = 0.0;  // || A^2 + 2A - (d^2 - 1) ||_max
};

inline QuaternionCertificate quaternion_certificate(int d) {
  QuaternionCertificate c;
  c.d = d;
  c.a = quatmat_embed(quaternion_a(d));
  const CMatrix id = CMatrix::Identity(2 * d, 2 * d);
  c.u = (id + c.a) / double(d);
  c.y = y_expectation(c.u, d, 2);
  c.hermitian_defect = (c.u - c.u.adjoint()).cwiseAbs().maxCoeff();
  c.unitary_defect = (c.u * c.u.adjoint() - id).cwiseAbs().maxCoeff();
  c.polynomial_defect =
      (c.a * c.a + 2.0 * c.a - double(d * d - 1) * id).cwiseAbs().maxCoeff();
  return c;
}

enum class Verdict { inside, outside, undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::outside: return "outside";
    default: return "undetermined";
  }
}

struct DepolarizingVerdict {
  double y = 0.0;            // <Y> of rho_T (x) 1 / D^2, equal to tr[rho_T F]
  double lower_bound = 0.0;  // smallest <Y> reached by an explicit unitary
  std::string bound_source;
  Verdict verdict = Verdict::undetermined;
};

/// Decides whether T (x) depolarizing_D lies in the unitary mixtures by
/// comparing <Y> with the smallest value reached by an explicit unitary on
/// C^d (x) C^D. Points above the bound are inside. Below it the answer is
/// "outside" only for D = 1, where the bound is known to be optimal.
inline DepolarizingVerdict depolarizing_verdict(int d, int big_d, double epsilon) {
  detail::require_odd(d, "depolarizing_verdict");
  if (big_d < 1) throw RangeError("depolarizing_verdict: D must be positive");
  DepolarizingVerdict v;
  v.y = coords_of_state(covariant_family(d, epsilon)).x;
  if ((d == 3 || d == 5) && big_d % 2 == 0) {
    v.lower_bound = quaternion_certificate(d).y;
    v.bound_source = "quaternion";
  } else {
    v.lower_bound = -1.0 + 2.0 / d;
    v.bound_source = big_d == 1 ? "single-channel" : "product";
  }
  if (v.y >= v.lower_bound - 1e-12)
    v.verdict = Verdict::inside;
  else
    v.verdict = big_d == 1 ? Verdict::outside : Verdict::undetermined;
  return v;
}

}  // namespace unital
