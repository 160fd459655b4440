#pragma once

// Extremality of a channel within all channels and within unital channels,
// decided by linear independence of the Kraus products A_k^dagger A_l (resp.
// A_k^dagger A_l (+) A_l A_k^dagger). Also builds a d = 3 channel with four
// Kraus operators that is extremal among unital channels but not among all
// channels.

#include <array>
#include <functional>
#include <vector>

#include "unital/channel.hpp"

namespace unital {

struct ExtremalityReport {
  int d = 0;
  int n_kraus = 0;
  int rank_full = 0;    // rank of {A_k^dagger A_l}
  int rank_unital = 0;  // rank of {A_k^dagger A_l (+) A_l A_k^dagger}
  bool extremal_in_all = false;
  bool extremal_in_unital = false;
  double min_gram_eigenvalue_full = 0.0;
  double min_gram_eigenvalue_unital = 0.0;
};

namespace detail {

inline CMatrix gram_of_columns(const CMatrix& cols) { return cols.adjoint() * cols; }

inline CVector vectorize(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

}  // namespace detail

/// Re-expresses a channel with linearly independent Kraus operators.
inline KrausChannel reduce_kraus(const KrausChannel& ch, double rank_tol = 1e-10) {
  return choi_to_kraus(kraus_to_choi(ch), rank_tol);
}

inline ExtremalityReport extremality_test(const KrausChannel& ch, double tol = 1e-8) {
  const int d = ch.d;
  const int n = int(ch.kraus.size());

  CMatrix kcols(d * d, n);
  for (int k = 0; k < n; ++k) kcols.col(k) = detail::vectorize(ch.kraus[std::size_t(k)]);
  if (psd_rank(detail::gram_of_columns(kcols), tol) != n)
    throw PreconditionError("extremality_test: Kraus operators are linearly dependent; reduce first");

  CMatrix full(d * d, n * n);
  CMatrix unital(2 * d * d, n * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const auto& ak = ch.kraus[std::size_t(k)];
      const auto& al = ch.kraus[std::size_t(l)];
      const CVector left = detail::vectorize(ak.adjoint() * al);
      const CVector right = detail::vectorize(al * ak.adjoint());
      full.col(k * n + l) = left;
      unital.col(k * n + l) << left, right;
    }

  ExtremalityReport r;
  r.d = d;
  r.n_kraus = n;
  const CMatrix gf = detail::gram_of_columns(full);
  const CMatrix gu = detail::gram_of_columns(unital);
  r.rank_full = psd_rank(gf, tol);
  r.rank_unital = psd_rank(gu, tol);
  r.min_gram_eigenvalue_full = hermitian_eigenvalues(gf).minCoeff();
  r.min_gram_eigenvalue_unital = hermitian_eigenvalues(gu).minCoeff();
  r.extremal_in_all = r.rank_full == n * n;
  r.extremal_in_unital = is_unital(ch) && r.rank_unital == n * n;
  return r;
}

// ---------------------------------------------------------------------------
// the d = 3, N = 4 example

namespace detail {

inline double horner(const std::array<double, 4>& c, double x) {
  return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
}

}  // namespace detail

/// Real roots, ascending, of c0 + c1 x + c2 x^2 + c3 x^3 (c3 != 0). Brackets
/// each monotone piece between critical points, bisects, then polishes with
/// Newton steps.
inline std::vector<double> cubic_real_roots(const std::array<double, 4>& c) {
  if (c[3] == 0.0) throw PreconditionError("cubic_real_roots: leading coefficient is zero");
  const auto f = [&](double x) { return detail::horner(c, x); };
  const auto df = [&](double x) { return (3.0 * c[3] * x + 2.0 * c[2]) * x + c[1]; };

  // Cauchy bound on root magnitudes
  const double bound =
      1.0 + std::max({std::abs(c[0] / c[3]), std::abs(c[1] / c[3]), std::abs(c[2] / c[3])});
  std::vector<double> knots{-bound};
  const double qa = 3.0 * c[3], qb = 2.0 * c[2], qc = c[1];
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    double r1 = (-qb - s) / (2.0 * qa), r2 = (-qb + s) / (2.0 * qa);
    if (r1 > r2) std::swap(r1, r2);
    knots.push_back(r1);
    knots.push_back(r2);
  }
  knots.push_back(bound);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double lo = knots[i], hi = knots[i + 1];
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) {
      if (roots.empty() || roots.back() != lo) roots.push_back(lo);
      continue;
    }
    if (flo * fhi > 0.0) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
      const double g = df(x);
      if (g == 0.0) break;
      const double step = f(x) / g;
      if (std::abs(step) > hi - lo + 1e-12) break;
      x -= step;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// The parameters mu_1..mu_4 of the example, each the designated real root of
/// its cubic (root index 1 = smallest).
inline std::array<double, 4> unital_extremal_mu() {
  // mu_1 = sqrt(Root_1[-356 + 312 x - 66 x^2 + 3 x^3]) / 6
  const double r1 = cubic_real_roots({-356.0, 312.0, -66.0, 3.0}).at(0);
  // mu_2 = Root_1[-1 + 432 x^2 + 2592 x^3]
  const double r2 = cubic_real_roots({-1.0, 0.0, 432.0, 2592.0}).at(0);
  // mu_4 = Root_2[1 - 6 x + 18 x^3]
  const double r4 = cubic_real_roots({1.0, -6.0, 0.0, 18.0}).at(1);
  return {std::sqrt(r1) / 6.0, r2, 1.0 / 6.0, r4};
}

/// Coefficient matrix X of rho_T in the basis psi_1..psi_6.
inline CMatrix unital_extremal_x() {
  const auto mu = unital_extremal_mu();
  const Complex i = kI;
  const double m1 = mu[0], m2 = mu[1], m3 = mu[2], m4 = mu[3];
  CMatrix x(6, 6);
  // clang-format off
  x << 0.5,       0.0,              -i * m1,          i * m3,   i * m4,               0.0,
       0.0,       0.5,              -i * m1,         -i * m4,  -(2.0 + i) * m3,      0.0,
       i * m1,    i * m1,            0.5,             0.0,      0.0,                  2.0 * m2 + i * m3,
      -i * m3,    i * m4,            0.0,             0.5,      0.0,                 -i * m1,
      -i * m4,    (i - 2.0) * m3,    0.0,             0.0,      0.5,                  i * m1,
       0.0,       0.0,               2.0 * m2 - i * m3, i * m1, -i * m1,              0.5;
  // clang-format on
  return x / 3.0;
}

/// Columns psi_1..psi_6: symmetric then antisymmetric combinations of
/// |12>,|13>,|23>; together they span the complement of span{|kk>}.
inline CMatrix unital_extremal_basis() {
  CMatrix psi = CMatrix::Zero(9, 6);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const double s = 1.0 / std::sqrt(2.0);
  for (int p = 0; p < 3; ++p) {
    const int a = pairs[p][0], b = pairs[p][1];
    psi(a * 3 + b, p) = s;
    psi(b * 3 + a, p) = s;
    psi(a * 3 + b, p + 3) = s / kI;
    psi(b * 3 + a, p + 3) = -s / kI;
  }
  return psi;
}

inline ChoiState unital_extremal_choi() {
  const CMatrix psi = unital_extremal_basis();
  return {3, psi * unital_extremal_x() * psi.adjoint()};
}

inline KrausChannel appendix_b_channel() { return choi_to_kraus(unital_extremal_choi(), 1e-10); }

}  // namespace unital
