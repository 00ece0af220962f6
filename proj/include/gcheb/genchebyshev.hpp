#pragma once

// Generalized Chebyshev polynomials Ch_n(z; a, b): the orthonormal polynomials
// of the Jacobi matrix whose first row is (b, a, 0, ...)/2 and which is free
// (off-diagonal 1/2, diagonal 0) afterwards.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "gcheb/branch.hpp"
#include "gcheb/errors.hpp"

namespace gcheb {

/// Point-interaction parameters: a is the first off-diagonal entry times two,
/// b the first diagonal entry times two. b = 0 gives the operator H_a.
struct CouplingParams {
  double a = 1.0;
  double b = 0.0;

  CouplingParams() = default;
  CouplingParams(double a_, double b_ = 0.0) : a(a_), b(b_) {  // NOLINT(google-explicit-constructor)
    detail::require(a > 0.0 && std::isfinite(a), "coupling a must be a positive finite number");
    detail::require(std::isfinite(b), "coupling b must be finite");
  }
};

/// Ch_0..Ch_{n_max} at a fixed z.
struct PolySeq {
  CouplingParams params;
  cplx z;
  std::vector<cplx> values;
};

/// Three-term recurrence, the canonical evaluator. T is double or complex.
template <class T>
std::vector<T> chebyshev_values(const CouplingParams& p, T z, std::size_t n_max) {
  std::vector<T> ch(n_max + 1);
  ch[0] = T(1);
  if (n_max == 0) return ch;
  const T two_z = T(2) * z;
  ch[1] = (two_z - T(p.b)) / T(p.a);
  if (n_max == 1) return ch;
  ch[2] = two_z * ch[1] - T(p.a);
  for (std::size_t k = 2; k < n_max; ++k) ch[k + 1] = two_z * ch[k] - ch[k - 1];
  return ch;
}

inline PolySeq eval_recurrence(const CouplingParams& p, cplx z, std::size_t n_max) {
  return PolySeq{p, z, chebyshev_values<cplx>(p, z, n_max)};
}

/// gamma_+ omega^n + gamma_- omega^{-n}, valid for n >= 1 away from z = +-1.
inline cplx eval_closed_form(const CouplingParams& p, const EnergyPoint& pt, int n) {
  detail::require(n >= 1, "eval_closed_form: n must be >= 1");
  constexpr double kEdgeWindow = 1e-8;
  if (std::abs(pt.z - 1.0) < kEdgeWindow || std::abs(pt.z + 1.0) < kEdgeWindow)
    throw DomainError("eval_closed_form: z within 1e-8 of a band edge, use eval_edge or the recurrence");
  const double a = p.a;
  cplx tail = ((a * a - 2.0) * pt.z + p.b) / (2.0 * a * pt.sqrt_val);
  cplx gamma_plus = a / 2.0 + tail;
  cplx gamma_minus = a / 2.0 - tail;
  cplx wn = std::pow(pt.omega_val, n);
  return gamma_plus * wn + gamma_minus / wn;
}

/// Ch_n(+-1; a) = (+-1)^n (2n/a - (n-1)a). Only for b = 0.
inline double eval_edge(const CouplingParams& p, int sign, int n) {
  detail::require(n >= 1, "eval_edge: n must be >= 1");
  detail::require(sign == 1 || sign == -1, "eval_edge: sign must be +1 or -1");
  detail::require(p.b == 0.0, "eval_edge: edge formula holds for b = 0 only");
  double v = 2.0 * n / p.a - (n - 1) * p.a;
  return (sign < 0 && n % 2 != 0) ? -v : v;
}

/// Trigonometric form kappa(theta) cos(n theta - delta(theta)), lambda = cos theta.
inline double eval_trig(double a, double lambda, int n) {
  detail::require(a > 0.0, "eval_trig: a must be positive");
  detail::require(std::abs(lambda) < 1.0, "eval_trig: |lambda| must be < 1");
  detail::require(n >= 1, "eval_trig: n must be >= 1");
  const double theta = std::acos(lambda);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double a2 = a * a;
  const double kappa = std::sqrt(a2 * a2 + 4.0 * (1.0 - a2) * c * c) / (a * s);
  const double delta = std::atan((2.0 - a2) / a2 * (c / s));
  return kappa * std::cos(n * theta - delta);
}

/// Weight turning Ch_n into the L^2(-1, 1) eigenfunction psi_n, given r = sqrt(1 - lambda^2).
inline double psi_weight_r(double a, double r) {
  const double a2 = a * a;
  return std::sqrt(2.0 / std::numbers::pi) * a * std::sqrt(r) /
         std::sqrt((a2 - 2.0) * (a2 - 2.0) + 4.0 * (a2 - 1.0) * r * r);
}

inline double psi_weight(double a, double lambda) {
  detail::require(a > 0.0, "psi: a must be positive");
  detail::require(std::abs(lambda) < 1.0, "psi: |lambda| must be < 1");
  return psi_weight_r(a, std::sqrt((1.0 - lambda) * (1.0 + lambda)));
}

/// psi_0..psi_{n_max} at lambda.
inline std::vector<double> psi_values(double a, double lambda, std::size_t n_max) {
  const double w = psi_weight(a, lambda);
  auto ch = chebyshev_values<double>(CouplingParams(a), lambda, n_max);
  for (auto& v : ch) v *= w;
  return ch;
}

// Same with r = sqrt(1 - lambda^2) supplied by the caller.
inline std::vector<double> psi_values(double a, double lambda, double r, std::size_t n_max) {
  detail::require(a > 0.0, "psi: a must be positive");
  const double w = psi_weight_r(a, r);
  auto ch = chebyshev_values<double>(CouplingParams(a), lambda, n_max);
  for (auto& v : ch) v *= w;
  return ch;
}

inline double psi(double a, double lambda, std::size_t n) { return psi_values(a, lambda, n)[n]; }

}  // namespace gcheb
