#pragma once

// Gauss-Legendre rules and adaptive integration over (-1, 1) in the variable
// theta = arccos(lambda), which absorbs sqrt(1 - lambda^2) endpoint behaviour.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <type_traits>
#include <utility>
#include <vector>

#include "gcheb/errors.hpp"

namespace gcheb {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on the Legendre recurrence).
inline QuadratureRule gauss_legendre(std::size_t n) {
  detail::require(n >= 1, "gauss_legendre: n must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * double(j) - 1.0) * x * p1 - (double(j) - 1.0) * p2) / double(j);
      }
      dp = double(n) * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

/// Quadrature for integrals over lambda in (-1, 1): nodes lambda_k = cos theta_k
/// with theta_k Gauss-Legendre on (0, pi), weights include the sin theta Jacobian.
inline QuadratureRule theta_rule(std::size_t n) {
  auto gl = gauss_legendre(n);
  QuadratureRule out;
  out.nodes.resize(n);
  out.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double theta = 0.5 * std::numbers::pi * (gl.nodes[k] + 1.0);
    out.nodes[k] = std::cos(theta);
    out.weights[k] = 0.5 * std::numbers::pi * gl.weights[k] * std::sin(theta);
  }
  return out;
}

namespace detail {

// cos(theta) kept strictly inside (-1, 1).
inline double interior_cos(double theta) {
  double c = std::cos(theta);
  if (c >= 1.0) c = std::nextafter(1.0, 0.0);
  if (c <= -1.0) c = std::nextafter(-1.0, 0.0);
  return c;
}

template <class F>
auto panel_gl(const F& g, const QuadratureRule& rule, double lo, double hi) {
  using R = std::decay_t<decltype(g(0.0))>;
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  R acc{};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * g(mid + half * rule.nodes[k]);
  return acc * half;
}

// f(lambda) or f(lambda, sqrt(1 - lambda^2)); the second form receives sin theta
// exactly, which matters where 1 - lambda^2 cancels.
template <class F>
auto call_on_theta(F& f, double theta) {
  if constexpr (std::is_invocable_v<F&, double, double>)
    return f(interior_cos(theta), std::sin(theta));
  else
    return f(interior_cos(theta));
}

}  // namespace detail

/// Integral of f over (-1, 1) to absolute tolerance tol, adaptive composite
/// Gauss-Legendre in theta. f may be real or complex valued and may behave like
/// (1 - lambda^2)^{-1/2} at the endpoints. f is called as f(lambda) or, if it
/// accepts two arguments, as f(lambda, sqrt(1 - lambda^2)).
template <class F>
auto quad_integrate(F&& f, double tol, std::size_t max_panels = 20000) {
  auto g = [&f](double theta) { return detail::call_on_theta(f, theta) * std::sin(theta); };
  using R = std::decay_t<decltype(g(0.0))>;
  static const QuadratureRule rule = gauss_legendre(20);

  struct Panel {
    double lo, hi;
    R value;
  };
  constexpr int kInitial = 16;
  std::vector<Panel> stack;
  for (int i = kInitial - 1; i >= 0; --i) {
    double lo = std::numbers::pi * i / kInitial;
    double hi = std::numbers::pi * (i + 1) / kInitial;
    stack.push_back({lo, hi, detail::panel_gl(g, rule, lo, hi)});
  }
  R total{};
  std::size_t panels = 0;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    R left = detail::panel_gl(g, rule, p.lo, mid);
    R right = detail::panel_gl(g, rule, mid, p.hi);
    const double local_tol = tol * (p.hi - p.lo) / std::numbers::pi;
    if (std::abs(left + right - p.value) <= local_tol || (p.hi - p.lo) < 1e-12) {
      total += left + right;
      continue;
    }
    if (++panels > max_panels) throw ConvergenceError("quad_integrate: panel budget exceeded");
    stack.push_back({mid, p.hi, right});
    stack.push_back({p.lo, mid, left});
  }
  return total;
}

}  // namespace gcheb
