#pragma once

// Spectral data of H_a: density of the absolutely continuous part, eigenvalues
// and atom weights, second-sheet resonances, moments and trace generating
// functions, Hankel determinants of a moment sequence.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "gcheb/branch.hpp"
#include "gcheb/errors.hpp"
#include "gcheb/genchebyshev.hpp"
#include "gcheb/pointres.hpp"
#include "gcheb/quadrature.hpp"

namespace gcheb {

namespace detail {

inline constexpr double kSqrt2 = std::numbers::sqrt2;

inline bool is_critical(double a) { return std::abs(a * a - 2.0) <= 1e-13; }

}  // namespace detail

/// d rho_a / d lambda on (-1, 1), given r = sqrt(1 - lambda^2).
inline double density_r(double a, double r) {
  const double a2 = a * a;
  // a^4 - 4(a^2 - 1) lambda^2 rewritten without cancellation at a = sqrt2
  return 2.0 / std::numbers::pi * a2 * r / ((a2 - 2.0) * (a2 - 2.0) + 4.0 * (a2 - 1.0) * r * r);
}

/// d rho_a / d lambda on (-1, 1).
inline double density(double a, double lambda) {
  detail::require(a > 0.0, "density: a must be positive");
  detail::require(std::abs(lambda) < 1.0, "density: |lambda| must be < 1");
  return density_r(a, std::sqrt((1.0 - lambda) * (1.0 + lambda)));
}

/// Eigenvalues outside [-1, 1]: empty for a <= sqrt2, +-a^2 / (2 sqrt(a^2 - 1)) otherwise.
inline std::vector<double> eigenvalues(double a) {
  detail::require(a > 0.0, "eigenvalues: a must be positive");
  if (a <= detail::kSqrt2 || detail::is_critical(a)) return {};
  const double lp = a * a / (2.0 * std::sqrt(a * a - 1.0));
  return {-lp, lp};
}

/// Spectral weight of each eigenvalue, (a^2 - 2) / (2 (a^2 - 1)).
inline double atom_weight(double a) {
  detail::require(a > detail::kSqrt2, "atom_weight: requires a > sqrt(2)");
  return (a * a - 2.0) / (2.0 * (a * a - 1.0));
}

struct SpectralAtom {
  double location;
  double weight;
};

struct SpectralMeasureRecord {
  double a;
  std::vector<SpectralAtom> atoms;

  double density(double lambda) const { return gcheb::density(a, lambda); }

  double ac_mass(double tol = 1e-12) const {
    return quad_integrate([this](double, double r) { return density_r(a, r); }, tol);
  }
  double atom_mass() const {
    double m = 0.0;
    for (const auto& at : atoms) m += at.weight;
    return m;
  }
  double total_mass(double tol = 1e-12) const { return ac_mass(tol) + atom_mass(); }
};

inline SpectralMeasureRecord spectral_measure(double a) {
  SpectralMeasureRecord rec{a, {}};
  for (double l : eigenvalues(a)) rec.atoms.push_back({l, atom_weight(a)});
  return rec;
}

// ---------------------------------------------------------------------------
// Resonances

struct ResonanceSet {
  std::vector<cplx> points;
};

/// D_a continued to the second sheet.
inline cplx second_sheet_det(double a, cplx z) { return pert_det(a, EnergyPoint::at(z, Sheet::Second)); }

/// Zeros of D_a on the second sheet. Candidates solve omega^2 = 1/(a^2 - 1);
/// those with |omega| < 1 are physical-sheet eigenvalues and are dropped. Each
/// survivor is polished by Newton steps on the second-sheet determinant.
inline ResonanceSet resonances(double a) {
  detail::require(a > 0.0, "resonances: a must be positive");
  ResonanceSet out;
  if (a == 1.0) return out;
  const cplx w0 = std::sqrt(cplx(1.0 / (a * a - 1.0), 0.0));
  for (cplx w : {w0, -w0}) {
    if (std::abs(w) < 1.0 - 1e-12) continue;
    cplx z = 0.5 * (w + 1.0 / w);
    for (int it = 0; it < 8; ++it) {
      auto pt = EnergyPoint::at(z, Sheet::Second);
      if (std::abs(pt.sqrt_val) < 1e-8) break;  // branch point: derivative is unbounded
      cplx d = pert_det(a, pt);
      if (std::abs(d) < 1e-15) break;
      z -= d / pert_det_derivative(a, pt);
    }
    out.points.push_back(z + cplx(0.0, 0.0));
  }
  std::sort(out.points.begin(), out.points.end(), [](cplx l, cplx r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Power series in x = zeta^2

namespace detail {

// Taylor coefficients of sqrt(1 - x) and 1/sqrt(1 - x).
inline std::vector<double> sqrt1m_series(std::size_t K) {
  std::vector<double> c(K + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= K; ++k) c[k] = c[k - 1] * (double(k) - 1.5) / double(k);
  return c;
}

inline std::vector<double> inv_sqrt1m_series(std::size_t K) {
  std::vector<double> c(K + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= K; ++k) c[k] = c[k - 1] * (double(k) - 0.5) / double(k);
  return c;
}

inline std::vector<double> series_mul(const std::vector<double>& p, const std::vector<double>& q, std::size_t K) {
  std::vector<double> r(K + 1, 0.0);
  for (std::size_t i = 0; i <= K && i < p.size(); ++i)
    for (std::size_t j = 0; i + j <= K && j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

inline std::vector<double> series_div(const std::vector<double>& num, const std::vector<double>& den, std::size_t K) {
  std::vector<double> q(K + 1, 0.0);
  for (std::size_t k = 0; k <= K; ++k) {
    double acc = k < num.size() ? num[k] : 0.0;
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

// Even-power coefficients spread onto powers of zeta.
inline std::vector<double> spread_even(const std::vector<double>& x_coeffs, std::size_t n_max) {
  std::vector<double> out(n_max + 1, 0.0);
  for (std::size_t k = 0; 2 * k <= n_max && k < x_coeffs.size(); ++k) out[2 * k] = x_coeffs[k];
  return out;
}

inline double gf_radius(double a) {
  if (a <= kSqrt2) return 1.0;
  return 2.0 * std::sqrt(a * a - 1.0) / (a * a);
}

}  // namespace detail

/// kappa_0 .. kappa_{n_max} of rho_a, from the generating function
/// 2 / (a^2 sqrt(1 - zeta^2) + 2 - a^2).
inline std::vector<double> moment_series(double a, std::size_t n_max) {
  detail::require(a > 0.0, "moment_series: a must be positive");
  const std::size_t K = n_max / 2;
  auto g = detail::sqrt1m_series(K);
  for (auto& v : g) v *= a * a;
  g[0] += 2.0 - a * a;
  auto f = detail::series_div(std::vector<double>{2.0}, g, K);
  return detail::spread_even(f, n_max);
}

inline double moment(double a, std::size_t n) { return moment_series(a, n)[n]; }

/// Moment generating function; |zeta| must lie inside the convergence disc.
inline cplx moment_gf(double a, cplx zeta) {
  detail::require(a > 0.0, "moment_gf: a must be positive");
  detail::require(std::abs(zeta) < detail::gf_radius(a), "moment_gf: zeta outside the convergence radius");
  return 2.0 / (a * a * std::sqrt(1.0 - zeta * zeta) + 2.0 - a * a);
}

/// Generating function of Tr(H_a^n - H_1^n).
inline cplx trace_gf(double a, cplx zeta) {
  detail::require(a > 0.0, "trace_gf: a must be positive");
  detail::require(std::abs(zeta) < detail::gf_radius(a), "trace_gf: zeta outside the convergence radius");
  if (zeta == cplx(0.0)) return 0.0;
  const cplx s = std::sqrt(1.0 - zeta * zeta);
  // 1 - s written cancellation-free.
  const cplx u = zeta * zeta / (1.0 + s);
  return 2.0 * (a * a - 1.0) / s * u * u / (zeta * zeta + (1.0 - a * a) * u * u);
}

/// Tr(H_a^n - H_1^n) for n = 0 .. n_max (index 0 is 0), from the series of trace_gf.
inline std::vector<double> trace_series(double a, std::size_t n_max) {
  detail::require(a > 0.0, "trace_series: a must be positive");
  const std::size_t K = n_max / 2 + 2;
  auto s = detail::sqrt1m_series(K + 1);
  std::vector<double> u(K + 2, 0.0);
  for (std::size_t k = 1; k < u.size(); ++k) u[k] = -s[k];
  auto u2 = detail::series_mul(u, u, K + 1);
  // numerator and denominator divided by x
  std::vector<double> num(K + 1), den(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    num[k] = 2.0 * (a * a - 1.0) * u2[k + 1];
    den[k] = (k == 0 ? 1.0 : 0.0) + (1.0 - a * a) * u2[k + 1];
  }
  auto q = detail::series_mul(detail::series_div(num, den, K), detail::inv_sqrt1m_series(K), K);
  return detail::spread_even(q, n_max);
}

// ---------------------------------------------------------------------------
// Orthogonality and Cauchy-integral identities

/// Atom contribution I_a(n, m) to the orthogonality relation (0 for a <= sqrt2).
inline double atom_orthogonality_term(double a, std::size_t n, std::size_t m) {
  double acc = 0.0;
  for (double l : eigenvalues(a)) {
    auto ch = chebyshev_values<double>(CouplingParams(a), l, std::max(n, m));
    acc += ch[n] * ch[m];
  }
  return eigenvalues(a).empty() ? 0.0 : atom_weight(a) * acc;
}

/// Atom contribution I_a(z; n, m) to the Cauchy-integral identity.
inline cplx atom_cauchy_term(double a, cplx z, std::size_t n, std::size_t m) {
  cplx acc = 0.0;
  for (double l : eigenvalues(a)) {
    auto ch = chebyshev_values<double>(CouplingParams(a), l, std::max(n, m));
    acc += ch[n] * ch[m] / (l - z);
  }
  return eigenvalues(a).empty() ? cplx(0.0) : atom_weight(a) * acc;
}

/// int U_n U_m sqrt(1 - l^2) / (l - z) dl = (pi/2) r_{n,m}(z).
inline cplx chebyshev_u_cauchy(int n, int m, const EnergyPoint& pt) {
  return 0.5 * std::numbers::pi * free_resolvent_entry(n, m, pt);
}

/// (1/pi) int T_n T_m / ((l - z) sqrt(1 - l^2)) dl.
inline cplx chebyshev_t_cauchy(int n, int m, const EnergyPoint& pt) {
  detail::require(n >= 0 && m >= 0, "chebyshev_t_cauchy: indices must be >= 0");
  detail::require_off_edge(pt, "chebyshev_t_cauchy");
  const cplx w = pt.omega_val;
  const cplx s = pt.sqrt_val;
  if (n == 0 && m == 0) return -1.0 / s;
  if (n == 0 || m == 0) return -std::pow(w, std::max(n, m)) / s;
  return -(std::pow(w, n + m) + std::pow(w, std::abs(n - m))) / (2.0 * s);
}

// ---------------------------------------------------------------------------
// Hankel determinants

struct HankelData {
  std::vector<double> h;          // h_0 = 1, h_1 .. h_{n_max}
  std::vector<double> a_recovered;  // a_n = sqrt(h_n h_{n+2}) / h_{n+1}
};

namespace detail {

inline double determinant(std::vector<double> m, std::size_t n) {
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
    if (m[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[c * n + k], m[piv * n + k]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = m[r * n + c] / m[c * n + c];
      for (std::size_t k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
    }
  }
  return det;
}

}  // namespace detail

/// h_n = det(kappa_{i+j})_{i,j<n}. Throws NumericalError if the sequence is not
/// positive definite up to n_max.
inline HankelData hankel_dets(const std::vector<double>& moments, std::size_t n_max) {
  detail::require(n_max == 0 || moments.size() + 1 >= 2 * n_max, "hankel_dets: need at least 2 n_max - 1 moments");
  HankelData out;
  out.h.push_back(1.0);
  double diag_product = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<double> mat(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mat[i * n + j] = moments[i + j];
    const double h = detail::determinant(mat, n);
    diag_product *= std::max(std::abs(moments[2 * (n - 1)]), 1e-300);
    // Hadamard: a positive definite h_n never exceeds the product of the diagonal.
    if (!(h > 1e-12 * diag_product))
      throw NumericalError("hankel_dets: h_" + std::to_string(n) + " <= 0, moment sequence is not positive definite");
    out.h.push_back(h);
  }
  for (std::size_t n = 0; n + 2 <= n_max; ++n)
    out.a_recovered.push_back(std::sqrt(out.h[n] * out.h[n + 2]) / out.h[n + 1]);
  return out;
}

/// True iff every odd moment vanishes within tol.
inline bool is_even_measure(const std::vector<double>& moments, double tol) {
  for (std::size_t k = 1; k < moments.size(); k += 2)
    if (std::abs(moments[k]) > tol) return false;
  return true;
}

/// kappa_{2m}(a) divided by its leading large-m prediction.
inline double moment_asymptotics_check(double a, std::size_t m) {
  detail::require(a > 0.0 && m >= 1, "moment_asymptotics_check: a > 0 and m >= 1 required");
  const double k = moment(a, 2 * m);
  const double md = double(m);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (detail::is_critical(a)) return k * sqrt_pi * std::sqrt(md);
  const double a2 = a * a;
  if (a < detail::kSqrt2) {
    const double c = a / (a2 - 2.0);
    return k / (c * c / (sqrt_pi * md * std::sqrt(md)));
  }
  const double rate = a2 * a2 / (4.0 * (a2 - 1.0));
  return k / ((a2 - 2.0) / (a2 - 1.0) * std::pow(rate, md));
}

}  // namespace gcheb
