#pragma once

// Scattering data of H_a relative to H_1: the scattering matrix by three
// formulas, the spectral shift function, the multipliers sigma_+-, the
// eigenfunction transform and numerical checks of the wave operators.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "gcheb/branch.hpp"
#include "gcheb/errors.hpp"
#include "gcheb/genchebyshev.hpp"
#include "gcheb/oracle.hpp"
#include "gcheb/parallel.hpp"
#include "gcheb/pointres.hpp"
#include "gcheb/quadrature.hpp"
#include "gcheb/spectral.hpp"

namespace gcheb {

namespace detail {

inline void require_scattering_args(double a, double lambda, const char* who) {
  require(a > 0.0, std::string(who) + ": a must be positive");
  require(std::abs(lambda) < 1.0, std::string(who) + ": |lambda| must be < 1");
}

}  // namespace detail

/// S_a(lambda) = D_a(lambda - i0) / D_a(lambda + i0).
inline cplx smatrix(double a, double lambda) {
  detail::require_scattering_args(a, lambda, "smatrix");
  const double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  const double c = 1.0 - a * a;
  const double re = 1.0 + c * (2.0 * lambda * lambda - 1.0);
  const double im = 2.0 * c * lambda * r;
  return cplx(re, im) / cplx(re, -im);
}

/// S_a from the T-matrix entries: 1 - 2i sqrt(1 - l^2) (t00 + 4 l t01 + 4 l^2 t11) / D_a(l + i0).
inline cplx smatrix_via_t(double a, double lambda) {
  detail::require_scattering_args(a, lambda, "smatrix_via_t");
  const auto pt = EnergyPoint::boundary(lambda, Side::Plus);
  const auto t = tmatrix(a, pt);
  const double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  const cplx inner = t.t00 + 2.0 * lambda * (t.t01 + t.t10) + 4.0 * lambda * lambda * t.t11;
  return 1.0 - cplx(0.0, 2.0 * r) * inner / t.det;
}

struct SigmaPair {
  cplx plus;
  cplx minus;
};

/// sigma_+-(lambda; a) = (a^2 + 2(1 - a^2) l^2 +- 2i (a^2 - 1) l sqrt(1 - l^2)) / sqrt(a^4 - 4(a^2 - 1) l^2),
/// labelled so that S_a = sigma_- / sigma_+ and W_+- = F_a^* sigma_+- F_1.
inline SigmaPair sigma_pm(double a, double lambda) {
  detail::require_scattering_args(a, lambda, "sigma_pm");
  const double a2 = a * a;
  const double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  const double re = a2 + 2.0 * (1.0 - a2) * lambda * lambda;
  const double im = 2.0 * (a2 - 1.0) * lambda * r;
  const double norm = std::sqrt(a2 * a2 - 4.0 * (a2 - 1.0) * lambda * lambda);
  return {cplx(re, im) / norm, cplx(re, -im) / norm};
}

inline cplx smatrix_via_sigma(double a, double lambda) {
  const auto s = sigma_pm(a, lambda);
  return s.minus / s.plus;
}

/// Limit of S_a as a -> infinity.
inline cplx smatrix_large_coupling_limit(double lambda) {
  detail::require(std::abs(lambda) < 1.0, "smatrix_large_coupling_limit: |lambda| must be < 1");
  const double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  const cplx w2(2.0 * lambda * lambda - 1.0, 2.0 * lambda * r);
  return w2 / std::conj(w2);
}

/// Limit of S_a as a -> 0.
inline cplx smatrix_weak_coupling_limit(double lambda) {
  detail::require(std::abs(lambda) < 1.0, "smatrix_weak_coupling_limit: |lambda| must be < 1");
  const double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  return cplx(lambda, r) / cplx(lambda, -r);
}

// ---------------------------------------------------------------------------
// Spectral shift function

/// xi_a(lambda), closed form. Values at the jump points +-1 and lambda_+-(a) are
/// the one-sided limits from the side closer to 0.
inline double ssf_closed(double a, double lambda) {
  detail::require(a > 0.0, "ssf_closed: a must be positive");
  if (lambda < 0.0) return -ssf_closed(a, -lambda);
  if (lambda == 0.0 || a == 1.0) return 0.0;
  const double a2 = a * a;
  const bool critical = detail::is_critical(a);
  const bool above = !critical && a > detail::kSqrt2;
  if (lambda >= 1.0) {
    if (critical && lambda == 1.0) return 0.5;
    if (above && (lambda == 1.0 || lambda <= eigenvalues(a).back())) return 1.0;
    return 0.0;
  }
  const double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  if (critical) return std::atan(lambda / r) / std::numbers::pi;
  const double num = 2.0 * (a2 - 1.0) * lambda * r;
  const double den = 1.0 + (1.0 - a2) * (2.0 * lambda * lambda - 1.0);
  if (!above) return std::atan(num / den) / std::numbers::pi;
  // arccot with values in (0, pi); num > 0 here
  return (0.5 * std::numbers::pi - std::atan(den / num)) / std::numbers::pi;
}

/// xi_a(lambda) = (1/pi) arg D_a(lambda + i eps), the argument followed
/// continuously down the vertical line from a height where D_a is close to 1.
inline double ssf_arg_tracked(double a, double lambda, double eps_floor = 1e-12) {
  detail::require(a > 0.0, "ssf_arg_tracked: a must be positive");
  detail::require(eps_floor > 0.0, "ssf_arg_tracked: eps_floor must be positive");
  detail::require(std::abs(lambda) != 1.0, "ssf_arg_tracked: lambda must differ from +-1");
  for (double l : eigenvalues(a))
    detail::require(std::abs(lambda - l) > 1e-12, "ssf_arg_tracked: lambda is an eigenvalue");
  auto D = [a, lambda](double y) { return pert_det(a, EnergyPoint::at(cplx(lambda, y))); };

  const double Y = std::max(10.0, 4.0 * std::sqrt(std::abs(a * a - 1.0)));
  constexpr double kMaxJump = std::numbers::pi / 8.0;
  constexpr double kMinLogStep = 1e-10;
  double y = Y;
  cplx prev = D(y);
  double phase = std::arg(prev);
  double log_step = 0.1;
  while (y > eps_floor) {
    double step = log_step;
    double y_next;
    cplx next;
    double jump;
    for (;;) {
      y_next = std::max(eps_floor, y * std::exp(-step));
      next = D(y_next);
      jump = std::arg(next / prev);
      if (std::abs(jump) <= kMaxJump || step <= kMinLogStep) break;
      step *= 0.5;
    }
    if (std::abs(jump) > 0.5 * std::numbers::pi)
      throw ConvergenceError("ssf_arg_tracked: phase jump exceeds pi/2 after maximal refinement");
    phase += jump;
    prev = next;
    y = y_next;
    log_step = std::min(0.1, 2.0 * step);
  }
  return phase / std::numbers::pi;
}

struct ScatteringRecord {
  double lambda;
  cplx s_value;
  double xi;
  cplx sigma_plus;
  cplx sigma_minus;
  cplx det_plus;
};

inline ScatteringRecord scattering_record(double a, double lambda) {
  const auto sg = sigma_pm(a, lambda);
  return ScatteringRecord{lambda, smatrix(a, lambda), ssf_closed(a, lambda), sg.plus, sg.minus,
                          pert_det(a, EnergyPoint::boundary(lambda, Side::Plus))};
}

// ---------------------------------------------------------------------------
// Eigenfunction transform and wave operators

/// (F_a e_n)(lambda) = psi_n(lambda; a) on a grid.
inline std::vector<double> transform_row(double a, std::size_t n, const std::vector<double>& grid) {
  detail::require(a > 0.0, "transform_row: a must be positive");
  std::vector<double> row;
  row.reserve(grid.size());
  for (double l : grid) {
    detail::require(std::abs(l) < 1.0, "transform_row: grid point outside (-1, 1)");
    row.push_back(psi(a, l, n));
  }
  return row;
}

namespace detail {

// Node-parallel accumulation of sum_k w_k psi_n(lambda_k; a) g_k for n < size.
// Chunks are fixed independently of the thread count and reduced in order.
inline std::vector<cplx> adjoint_transform(double a, const QuadratureRule& rule, const std::vector<cplx>& g,
                                           std::size_t size) {
  constexpr std::size_t kChunks = 64;
  const std::size_t M = rule.nodes.size();
  std::vector<std::vector<cplx>> partial(kChunks, std::vector<cplx>(size, 0.0));
  const CouplingParams p(a);
  parallel_for(kChunks, [&](std::size_t c) {
    const std::size_t lo = c * M / kChunks;
    const std::size_t hi = (c + 1) * M / kChunks;
    auto& acc = partial[c];
    for (std::size_t k = lo; k < hi; ++k) {
      const double l = rule.nodes[k];
      const cplx coeff = rule.weights[k] * psi_weight(a, l) * g[k];
      auto ch = chebyshev_values<double>(p, l, size - 1);
      for (std::size_t n = 0; n < size; ++n) acc[n] += coeff * ch[n];
    }
  });
  std::vector<cplx> out(size, 0.0);
  for (const auto& part : partial)
    for (std::size_t n = 0; n < size; ++n) out[n] += part[n];
  return out;
}

}  // namespace detail

/// F_a^* Sigma F_1 f on indices < size: Sigma = sigma_+ for t > 0, sigma_- for
/// t < 0, identity for t = 0. Gauss-Legendre in theta with 2 size + 256 nodes.
inline std::vector<cplx> wave_operator_target(double a, double t, const std::vector<cplx>& f, std::size_t size,
                                              const QuadratureRule* rule = nullptr) {
  detail::require(a > 0.0, "wave_operator_target: a must be positive");
  detail::require(!f.empty(), "wave_operator_target: f must be nonempty");
  QuadratureRule own;
  if (rule == nullptr) {
    own = theta_rule(2 * size + 256);
    rule = &own;
  }
  const std::size_t M = rule->nodes.size();
  std::vector<cplx> g(M);
  const CouplingParams free_params(1.0);
  parallel_for(M, [&](std::size_t k) {
    const double l = rule->nodes[k];
    auto ch = chebyshev_values<double>(free_params, l, f.size() - 1);
    cplx acc = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) acc += f[n] * ch[n];
    acc *= psi_weight(1.0, l);
    if (t > 0.0) acc *= sigma_pm(a, l).plus;
    if (t < 0.0) acc *= sigma_pm(a, l).minus;
    g[k] = acc;
  });
  return detail::adjoint_transform(a, *rule, g, size);
}

struct WaveCheckResult {
  double deviation = 0.0;
  double target_norm = 0.0;
  double input_norm = 0.0;
  bool reflection_warning = false;
};

/// Finite-time comparison of e^{iH_a t} e^{-iH_1 t} f with F_a^* Sigma F_1 f on a
/// truncation. Both eigensystems are computed once and reused across times.
class WavePropagator {
 public:
  WavePropagator(double a, std::size_t truncation)
      : a_(a), size_(truncation), rule_(theta_rule(2 * truncation + 256)) {
    detail::require(a > 0.0, "WavePropagator: a must be positive");
    detail::require(truncation >= 2, "WavePropagator: truncation must be >= 2");
    free_ = oracle::dense_eigensystem(oracle::truncate(CouplingParams(1.0), truncation));
    pert_ = a == 1.0 ? free_ : oracle::dense_eigensystem(oracle::truncate(CouplingParams(a), truncation));
  }

  double a() const { return a_; }
  std::size_t truncation() const { return size_; }

  /// e^{i H_a t} e^{-i H_1 t} f.
  std::vector<cplx> evolve(double t, const std::vector<cplx>& f) const {
    auto v = apply(free_, f, -t);
    return apply(pert_, v, t);
  }

  std::vector<cplx> target(double t, const std::vector<cplx>& f) const;

  WaveCheckResult check(double t, std::vector<cplx> f) const {
    detail::require(!f.empty() && f.size() <= size_, "wave_operator_check: f must fit in the truncation");
    auto ev = evolve(t, padded(f));
    auto tg = target(t, f);
    WaveCheckResult r;
    for (std::size_t n = 0; n < size_; ++n) {
      r.deviation += std::norm(ev[n] - tg[n]);
      r.target_norm += std::norm(tg[n]);
    }
    for (const auto& v : f) r.input_norm += std::norm(v);
    r.deviation = std::sqrt(r.deviation);
    r.target_norm = std::sqrt(r.target_norm);
    r.input_norm = std::sqrt(r.input_norm);
    r.reflection_warning = std::abs(t) + double(f.size()) > 0.8 * double(size_);
    return r;
  }

 private:
  std::vector<cplx> padded(const std::vector<cplx>& f) const {
    std::vector<cplx> out(size_, 0.0);
    std::copy(f.begin(), f.end(), out.begin());
    return out;
  }

  // V diag(e^{i lambda s}) V^T x
  std::vector<cplx> apply(const oracle::DenseEigensystem& E, const std::vector<cplx>& x, double s) const {
    const std::size_t N = size_;
    std::vector<cplx> coeff(N);
    parallel_for(N, [&](std::size_t k) {
      cplx acc = 0.0;
      const double* col = &E.vectors[k * N];
      for (std::size_t i = 0; i < N; ++i) acc += col[i] * x[i];
      coeff[k] = acc * std::polar(1.0, E.eigenvalues[k] * s);
    });
    std::vector<cplx> out(N, 0.0);
    for (std::size_t k = 0; k < N; ++k) {
      const double* col = &E.vectors[k * N];
      const cplx c = coeff[k];
      for (std::size_t i = 0; i < N; ++i) out[i] += c * col[i];
    }
    return out;
  }

  double a_;
  std::size_t size_;
  QuadratureRule rule_;
  oracle::DenseEigensystem free_;
  oracle::DenseEigensystem pert_;
};

/// F_a^* Sigma F_1 f with the multiplier for the sign of t.
inline std::vector<cplx> WavePropagator::target(double t, const std::vector<cplx>& f) const {
  return wave_operator_target(a_, t, f, size_, &rule_);
}

/// ||e^{iH_a t} e^{-iH_1 t} f - F_a^* Sigma F_1 f|| on a truncation. Allocates
/// two dense truncation x truncation eigenvector matrices per call; use
/// WavePropagator directly to reuse them across times.
inline WaveCheckResult wave_operator_check(double a, double t, const std::vector<cplx>& f, std::size_t truncation) {
  detail::require(truncation >= 2048, "wave_operator_check: truncation must be >= 2048");
  detail::require(f.size() * 8 <= truncation, "wave_operator_check: f must be supported on indices < truncation/8");
  return WavePropagator(a, truncation).check(t, f);
}

// ---------------------------------------------------------------------------
// Oscillatory integrals

/// A smooth test function with compact support [lo, hi] inside (-1, 1).
struct Bump {
  std::function<double(double)> f;
  double lo;
  double hi;
};

/// exp(1 - 1/(1 - ((l - c)/h)^2)) on (c - h, c + h).
inline Bump standard_bump(double center = 0.0, double half_width = 0.8) {
  detail::require(std::abs(center) + half_width < 1.0, "standard_bump: support must lie in (-1, 1)");
  return Bump{[center, half_width](double l) {
                const double x = (l - center) / half_width;
                return std::abs(x) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - x * x)) : 0.0;
              },
              center - half_width, center + half_width};
}

/// |int omega(l +- i0)^n e^{-i l t} g(l) dl| (n + |t|)^p. By default the side
/// without a stationary point is used: l - i0 for t >= 0, l + i0 for t < 0.
inline double oscillatory_decay_check(std::size_t n, double t, int p, const Bump& bump,
                                      std::optional<Side> side = std::nullopt) {
  detail::require(p == 1 || p == 2, "oscillatory_decay_check: p must be 1 or 2");
  detail::require(bump.lo > -1.0 && bump.hi < 1.0 && bump.lo < bump.hi,
                  "oscillatory_decay_check: bump support must lie in (-1, 1)");
  const Side sd = side.value_or(t >= 0.0 ? Side::Minus : Side::Plus);
  // omega(l + i0) = e^{-i theta}, omega(l - i0) = e^{i theta}
  const double dir = sd == Side::Plus ? -1.0 : 1.0;
  const double th_lo = std::acos(bump.hi);
  const double th_hi = std::acos(bump.lo);
  static const QuadratureRule rule = gauss_legendre(20);
  const double rate = double(n) + std::abs(t) + 1.0;
  const std::size_t panels = static_cast<std::size_t>(std::ceil((th_hi - th_lo) * rate / 0.5)) + 4;
  const double width = (th_hi - th_lo) / double(panels);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < panels; ++j) {
    const double lo = th_lo + width * double(j);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double th = lo + 0.5 * width * (rule.nodes[k] + 1.0);
      const double l = std::cos(th);
      const double phase = dir * double(n) * th - t * l;
      acc += 0.5 * width * rule.weights[k] * std::sin(th) * bump.f(l) * std::polar(1.0, phase);
    }
  }
  return std::abs(acc) * std::pow(double(n) + std::abs(t), p);
}

}  // namespace gcheb
