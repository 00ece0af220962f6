#pragma once

// Closed-form resolvent algebra for the free half-lattice operator H_1 and the
// point interaction H_a (first off-diagonal entry a/2).

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "gcheb/branch.hpp"
#include "gcheb/errors.hpp"
#include "gcheb/genchebyshev.hpp"

namespace gcheb {

namespace detail {

inline void require_off_edge(const EnergyPoint& pt, const char* who) {
  if (pt.is_edge()) throw PoleError(std::string(who) + ": singular energy z = +-1");
}

// D vanishes at eigenvalues; scale-aware zero test.
inline void require_nonzero_det(cplx det, double scale, const char* who) {
  if (std::abs(det) <= 1e-14 * scale) throw PoleError(std::string(who) + ": perturbation determinant vanishes (eigenvalue)");
}

inline double det_scale(double a, const EnergyPoint& pt) {
  return 1.0 + std::abs(1.0 - a * a) * std::norm(pt.omega_val);
}

}  // namespace detail

/// (R_1(z) e_n, e_m) = (omega^{n+m+2} - omega^{|n-m|}) / sqrt(z^2 - 1).
inline cplx free_resolvent_entry(int n, int m, const EnergyPoint& pt) {
  detail::require(n >= 0 && m >= 0, "free_resolvent_entry: indices must be >= 0");
  detail::require_off_edge(pt, "free_resolvent_entry");
  const cplx w = pt.omega_val;
  return (std::pow(w, n + m + 2) - std::pow(w, std::abs(n - m))) / pt.sqrt_val;
}

/// Whole-line free resolvent: -omega^{|n-m|} / sqrt(z^2 - 1).
inline cplx whole_line_resolvent_entry(int n, int m, const EnergyPoint& pt) {
  detail::require_off_edge(pt, "whole_line_resolvent_entry");
  return -std::pow(pt.omega_val, std::abs(n - m)) / pt.sqrt_val;
}

/// D_a(z) = 1 + (1 - a^2) omega^2.
inline cplx pert_det(double a, const EnergyPoint& pt) {
  detail::require(a > 0.0, "pert_det: a must be positive");
  return 1.0 + (1.0 - a * a) * pt.omega_val * pt.omega_val;
}

/// D_{a,b}(z) = (1 - a^2) omega^2 - b omega + 1.
inline cplx pert_det(const CouplingParams& p, const EnergyPoint& pt) {
  const cplx w = pt.omega_val;
  return (1.0 - p.a * p.a) * w * w - p.b * w + 1.0;
}

/// D_a'(z) = 2 (1 - a^2) omega omega', with omega' = -omega / sqrt(z^2 - 1).
inline cplx pert_det_derivative(double a, const EnergyPoint& pt) {
  detail::require_off_edge(pt, "pert_det_derivative");
  const cplx w = pt.omega_val;
  return -2.0 * (1.0 - a * a) * w * w / pt.sqrt_val;
}

/// Complex-step derivative of D_a on the real axis off [-1, 1], where D_a is
/// real-analytic.
inline double pert_det_derivative_complex_step(double a, double x, double h = 1e-20) {
  detail::require(std::abs(x) > 1.0, "complex-step derivative needs |x| > 1");
  return pert_det(a, EnergyPoint::at(cplx(x, h))).imag() / h;
}

/// Tr(R_a(z) - R_1(z)) = -D_a'/D_a = 2 (1 - a^2) omega^2 / (D_a sqrt(z^2 - 1)).
inline cplx trace_resolvent_difference(double a, const EnergyPoint& pt) {
  detail::require_off_edge(pt, "trace_resolvent_difference");
  const cplx det = pert_det(a, pt);
  detail::require_nonzero_det(det, detail::det_scale(a, pt), "trace_resolvent_difference");
  return 2.0 * (1.0 - a * a) * pt.omega_val * pt.omega_val / (det * pt.sqrt_val);
}

/// Entries of 2 D_a(z) T_a(z) on span{e_0, e_1}.
struct TMatrixEntries {
  cplx t00, t01, t10, t11;
  cplx det;
  cplx z;
};

inline TMatrixEntries tmatrix(double a, const EnergyPoint& pt) {
  const cplx det = pert_det(a, pt);
  detail::require_nonzero_det(det, detail::det_scale(a, pt), "tmatrix");
  const cplx w = pt.omega_val;
  const double am1 = a - 1.0;
  const double am1_sq = am1 * am1;
  TMatrixEntries t;
  t.t00 = 2.0 * am1_sq * pt.z * w * w;
  t.t11 = am1_sq * w;
  t.t01 = am1 - am1_sq * w * w;
  t.t10 = t.t01;
  t.det = det;
  t.z = pt.z;
  return t;
}

/// Weyl m-function (R_a(z) e_0, e_0) = -2 omega / D_a(z).
inline cplx weyl_m(double a, const EnergyPoint& pt) {
  const cplx det = pert_det(a, pt);
  detail::require_nonzero_det(det, detail::det_scale(a, pt), "weyl_m");
  return -2.0 * pt.omega_val / det;
}

/// Any matrix element (R_a(z) e_n, e_m).
inline cplx resolvent_entry(double a, int n, int m, const EnergyPoint& pt) {
  detail::require(n >= 0 && m >= 0, "resolvent_entry: indices must be >= 0");
  if (n < m) std::swap(n, m);
  if (n == 0) return weyl_m(a, pt);
  const cplx det = pert_det(a, pt);
  detail::require_nonzero_det(det, detail::det_scale(a, pt), "resolvent_entry");
  const cplx w = pt.omega_val;
  const cplx r = free_resolvent_entry(n, m, pt);
  if (m == 0) return r - 2.0 * (a - 1.0) * std::pow(w, n + 2) * (2.0 * pt.z + a * w) / det;
  return r - 4.0 * (a * a - 1.0) * pt.z * std::pow(w, n + m + 2) / det;
}

}  // namespace gcheb
