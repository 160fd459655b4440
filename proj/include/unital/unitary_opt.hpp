#pragma once

// First-order descent on the unitary group. Iterates U <- exp(-i t H) U where
// H = i (U G^dagger - G U^dagger) is the Riemannian gradient of a real
// objective f and G = df/d(conj U) is its Wirtinger derivative, so that
// f(U + dU) = f(U) + 2 Re tr[G^dagger dU].

#include <cstdint>
#include <limits>

#include "unital/linalg.hpp"
#include "unital/random.hpp"

namespace unital {

struct DescentOptions {
  int max_iter = 3000;
  double grad_tol = 1e-9;   // stop when ||H||_F falls below
  double value_tol = 1e-15;  // stop when a step improves f by less than this (relative)
  double armijo = 1e-4;
  double max_step = 10.0;
};

struct DescentResult {
  double value = 0.0;
  CMatrix u;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Objective concept: `double value(const CMatrix&) const` and
/// `CMatrix wirtinger(const CMatrix&) const` returning df/d(conj U).
template <class Objective>
CMatrix riemannian_gradient(const Objective& f, const CMatrix& u) {
  const CMatrix g = f.wirtinger(u);
  const CMatrix m = u * g.adjoint();
  return kI * (m - m.adjoint());
}

template <class Objective>
DescentResult descend(const Objective& f, CMatrix u, const DescentOptions& opt = {}) {
  const auto n = u.rows();
  DescentResult res;
  double fu = f.value(u);
  CMatrix h = riemannian_gradient(f, u);
  double step = 1.0 / std::max(1.0, h.norm());
  CMatrix h_prev;
  double step_prev = 0.0;

  int it = 0;
  for (; it < opt.max_iter; ++it) {
    const double gn2 = h.squaredNorm();
    if (std::sqrt(gn2) < opt.grad_tol) {
      res.converged = true;
      break;
    }
    // Barzilai-Borwein guess from the previous step; s = -step_prev * h_prev
    if (it > 0) {
      const CMatrix y = h - h_prev;
      const double sy = step_prev * std::abs((h_prev.adjoint() * y).trace().real());
      const double ss = step_prev * step_prev * h_prev.squaredNorm();
      if (sy > 1e-300) step = std::clamp(ss / sy, 1e-8, opt.max_step);
    }

    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()));
    const CMatrix& vecs = es.eigenvectors();
    const RVector& lam = es.eigenvalues();
    auto rotate = [&](double t) {
      CVector ph(n);
      for (Eigen::Index k = 0; k < n; ++k) ph(k) = std::exp(-kI * (t * lam(k)));
      return CMatrix(vecs * ph.asDiagonal() * vecs.adjoint() * u);
    };

    double t = step;
    CMatrix cand;
    double fc = std::numeric_limits<double>::infinity();
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      cand = rotate(t);
      fc = f.value(cand);
      if (fc <= fu - opt.armijo * t * gn2) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      res.converged = true;  // no descent available at machine precision
      break;
    }
    const double gain = fu - fc;
    // re-orthonormalize occasionally against drift
    u = (it % 50 == 49) ? nearest_unitary(cand) : cand;
    fu = (it % 50 == 49) ? f.value(u) : fc;
    h_prev = h;
    step_prev = t;
    h = riemannian_gradient(f, u);
    if (gain <= opt.value_tol * std::max(1.0, std::abs(fu))) {
      res.converged = h.norm() < std::sqrt(opt.grad_tol);
      ++it;
      break;
    }
  }
  res.value = fu;
  res.u = u;
  res.grad_norm = h.norm();
  res.iterations = it;
  if (res.grad_norm < opt.grad_tol) res.converged = true;
  return res;
}

/// Best of `restarts` descents from Haar-random starts; restart k draws its
/// start from seed + k. Ties keep the lowest restart index.
template <class Objective>
DescentResult multistart(const Objective& f, int n, int restarts, std::uint64_t seed,
                         const DescentOptions& opt = {}) {
  DescentResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int k = 0; k < restarts; ++k) {
    Rng rng(seed + std::uint64_t(k));
    DescentResult r = descend(f, haar_unitary(n, rng), opt);
    if (r.value < best.value) best = std::move(r);
  }
  return best;
}

}  // namespace unital
