#pragma once

// Brute-force engines for cross-checking the closed forms: finite sections of
// the operator, dense spectra, direct resolvent solves, numeric moments and
// recurrence-coefficient recovery from a discrete measure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#ifndef lapack_complex_float
#define lapack_complex_float std::complex<float>
#endif
#ifndef lapack_complex_double
#define lapack_complex_double std::complex<double>
#endif
#include <lapacke.h>

#include "gcheb/branch.hpp"
#include "gcheb/errors.hpp"
#include "gcheb/genchebyshev.hpp"
#include "gcheb/jost.hpp"
#include "gcheb/quadrature.hpp"
#include "gcheb/spectral.hpp"

namespace gcheb::oracle {

/// Top-left size x size section of a half-lattice Jacobi operator.
struct TruncatedOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
};

inline TruncatedOperator truncate(const JacobiCoeffs& c, std::size_t size) {
  detail::require(size >= 2, "truncate: size must be >= 2");
  TruncatedOperator t;
  t.diag.resize(size);
  t.offdiag.resize(size - 1);
  for (std::size_t n = 0; n < size; ++n) t.diag[n] = c.b(static_cast<long>(n));
  for (std::size_t n = 0; n + 1 < size; ++n) t.offdiag[n] = c.a(static_cast<long>(n));
  return t;
}

inline TruncatedOperator truncate(const CouplingParams& p, std::size_t size) {
  return truncate(JacobiCoeffs::from_coupling(p), size);
}

/// Eigenvalues (ascending) with the first component of each normalized eigenvector.
struct DenseSpectrum {
  std::vector<double> eigenvalues;
  std::vector<double> first_components;

  std::vector<double> weights() const {
    std::vector<double> w(first_components.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = first_components[k] * first_components[k];
    return w;
  }
};

/// Implicit QL on the tridiagonal, rotating only the first row of the
/// eigenvector matrix: O(size^2) time, O(size) memory.
inline DenseSpectrum dense_spectrum(const TruncatedOperator& T) {
  const std::size_t n = T.size();
  std::vector<double> d = T.diag;
  std::vector<double> e(n, 0.0);
  std::copy(T.offdiag.begin(), T.offdiag.end(), e.begin());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  constexpr double eps = 1e-300;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd + eps) break;
      }
      if (m != l) {
        if (++iter > 60) throw ConvergenceError("dense_spectrum: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  DenseSpectrum out;
  out.eigenvalues.reserve(n);
  out.first_components.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(d[k]);
    out.first_components.push_back(z[k]);
  }
  return out;
}

/// Full eigendecomposition; vectors column-major, vectors[i + k*size] = component i of eigenvector k.
struct DenseEigensystem {
  std::vector<double> eigenvalues;
  std::vector<double> vectors;
  std::size_t size = 0;

  double component(std::size_t i, std::size_t k) const { return vectors[i + k * size]; }
};

inline DenseEigensystem dense_eigensystem(const TruncatedOperator& T) {
  const std::size_t n = T.size();
  DenseEigensystem out;
  out.size = n;
  out.eigenvalues = T.diag;
  std::vector<double> e = T.offdiag;
  e.push_back(0.0);
  out.vectors.assign(n * n, 0.0);
  const lapack_int info = LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', static_cast<lapack_int>(n), out.eigenvalues.data(),
                                         e.data(), out.vectors.data(), static_cast<lapack_int>(n));
  if (info != 0) throw ConvergenceError("dense_eigensystem: dstevd failed with info " + std::to_string(info));
  return out;
}

/// Column m of (T - z)^{-1}.
inline std::vector<cplx> dense_resolvent_column(const TruncatedOperator& T, std::size_t m, cplx z) {
  const std::size_t n = T.size();
  detail::require(m < n, "dense_resolvent_column: index outside the truncation");
  std::vector<cplx> dl(T.offdiag.begin(), T.offdiag.end());
  std::vector<cplx> du = dl;
  std::vector<cplx> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = T.diag[k] - z;
  std::vector<cplx> rhs(n, 0.0);
  rhs[m] = 1.0;
  const lapack_int info = LAPACKE_zgtsv(LAPACK_COL_MAJOR, static_cast<lapack_int>(n), 1, dl.data(), d.data(),
                                        du.data(), rhs.data(), static_cast<lapack_int>(n));
  if (info != 0) throw PoleError("dense_resolvent_entry: near-singular tridiagonal solve");
  for (const auto& v : rhs)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw PoleError("dense_resolvent_entry: near-singular tridiagonal solve");
  return rhs;
}

/// ((T - z)^{-1} e_m, e_n). Truncation error is O(|omega(z)|^{2 size}).
inline cplx dense_resolvent_entry(const TruncatedOperator& T, std::size_t n, std::size_t m, cplx z) {
  detail::require(n < T.size(), "dense_resolvent_entry: index outside the truncation");
  return dense_resolvent_column(T, m, z)[n];
}

/// Tr(T^n), by applying T to every basis vector.
inline double power_trace(const TruncatedOperator& T, std::size_t n) {
  const std::size_t N = T.size();
  double tr = 0.0;
  std::vector<double> v(N), w(N);
  for (std::size_t k = 0; k < N; ++k) {
    std::fill(v.begin(), v.end(), 0.0);
    v[k] = 1.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t i = 0; i < N; ++i) {
        double acc = T.diag[i] * v[i];
        if (i > 0) acc += T.offdiag[i - 1] * v[i - 1];
        if (i + 1 < N) acc += T.offdiag[i] * v[i + 1];
        w[i] = acc;
      }
      std::swap(v, w);
    }
    tr += v[k];
  }
  return tr;
}

/// int lambda^n d rho_a by quadrature of the density plus the atoms.
inline double numeric_moment(double a, std::size_t n, double tol = 1e-13) {
  const int p = static_cast<int>(n);
  double m = quad_integrate([a, p](double l, double r) { return std::pow(l, p) * density_r(a, r); }, tol);
  for (double l : eigenvalues(a)) m += atom_weight(a) * std::pow(l, p);
  return m;
}

/// Recurrence coefficients of a discrete measure.
struct RecurrenceCoeffs {
  std::vector<double> a;
  std::vector<double> b;
};

/// Lanczos on diag(nodes) from the start vector sqrt(weights), with full
/// reorthogonalization. Returns a_0..a_{depth-1}, b_0..b_{depth-1}.
inline RecurrenceCoeffs stieltjes_coeffs(const std::vector<double>& nodes, const std::vector<double>& weights,
                                         std::size_t depth) {
  const std::size_t n = nodes.size();
  detail::require(weights.size() == n, "stieltjes_coeffs: nodes and weights differ in length");
  detail::require(depth >= 1 && depth < n, "stieltjes_coeffs: depth must be in [1, number of nodes)");
  double mass = 0.0;
  for (double w : weights) {
    detail::require(w >= 0.0, "stieltjes_coeffs: weights must be nonnegative");
    mass += w;
  }
  detail::require(mass > 0.0, "stieltjes_coeffs: zero measure");

  auto dot = [n](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<std::vector<double>> Q;
  Q.reserve(depth + 1);
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = std::sqrt(weights[i] / mass);
  Q.push_back(q);

  RecurrenceCoeffs out;
  for (std::size_t j = 0; j < depth; ++j) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = nodes[i] * Q[j][i];
    const double bj = dot(Q[j], v);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& qi : Q) {
        const double c = dot(qi, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * qi[i];
      }
    const double aj = std::sqrt(dot(v, v));
    out.b.push_back(bj);
    out.a.push_back(aj);
    if (aj <= 1e-300) throw ConvergenceError("stieltjes_coeffs: measure supported on fewer points than depth");
    for (auto& x : v) x /= aj;
    for (const auto& qi : Q)
      if (std::abs(dot(qi, v)) > 1e-8) throw ConvergenceError("stieltjes_coeffs: loss of orthogonality");
    Q.push_back(std::move(v));
  }
  return out;
}

inline RecurrenceCoeffs stieltjes_coeffs(const DenseSpectrum& s, std::size_t depth) {
  return stieltjes_coeffs(s.eigenvalues, s.weights(), depth);
}

}  // namespace gcheb::oracle
