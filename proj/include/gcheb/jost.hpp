#pragma once

// Finite-support Jacobi perturbations of the free operator: Jost solution,
// perturbation determinant, regular solution, resolvent entries and recovery of
// the coefficients from the determinant polynomial (support 1 and 2).

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "gcheb/branch.hpp"
#include "gcheb/errors.hpp"
#include "gcheb/genchebyshev.hpp"

namespace gcheb {

/// Jacobi coefficients a_n (off-diagonal), b_n (diagonal) that take the free
/// values 1/2 and 0 for n >= support().
class JacobiCoeffs {
 public:
  JacobiCoeffs() = default;

  JacobiCoeffs(std::vector<double> a_seq, std::vector<double> b_seq)
      : a_(std::move(a_seq)), b_(std::move(b_seq)) {
    detail::require(a_.size() == b_.size(), "JacobiCoeffs: a and b sequences must have equal length");
    for (double v : a_) detail::require(v > 0.0 && std::isfinite(v), "JacobiCoeffs: off-diagonal entries must be positive");
    for (double v : b_) detail::require(std::isfinite(v), "JacobiCoeffs: diagonal entries must be finite");
  }

  static JacobiCoeffs from_coupling(const CouplingParams& p) { return JacobiCoeffs({p.a / 2.0}, {p.b / 2.0}); }

  std::size_t support() const { return a_.size(); }

  // a(-1) = 1 is the normalization used for the Jost function.
  double a(long n) const {
    if (n < 0) return 1.0;
    return static_cast<std::size_t>(n) < a_.size() ? a_[n] : 0.5;
  }
  double b(long n) const {
    if (n < 0) return 0.0;
    return static_cast<std::size_t>(n) < b_.size() ? b_[n] : 0.0;
  }

  const std::vector<double>& a_seq() const { return a_; }
  const std::vector<double>& b_seq() const { return b_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

/// u_first .. u_last of the Jost solution.
struct JostSolution {
  long first = -1;
  std::vector<cplx> values;

  cplx at(long n) const { return values.at(static_cast<std::size_t>(n - first)); }
  long last() const { return first + static_cast<long>(values.size()) - 1; }
};

namespace detail {

// u_{-1} .. u_{N+1}, seeded with omega^N, omega^{N+1} and recursed downwards.
inline std::vector<cplx> jost_values(const JacobiCoeffs& c, cplx z, cplx w) {
  const long N = static_cast<long>(c.support());
  std::vector<cplx> u(static_cast<std::size_t>(N + 3));
  auto slot = [&](long n) -> cplx& { return u[static_cast<std::size_t>(n + 1)]; };
  slot(N) = std::pow(w, N);
  slot(N + 1) = slot(N) * w;
  for (long n = N; n >= 0; --n) slot(n - 1) = ((z - c.b(n)) * slot(n) - c.a(n) * slot(n + 1)) / c.a(n - 1);
  return u;
}

inline cplx det_prefactor(const JacobiCoeffs& c, cplx w) {
  cplx f = std::pow(2.0, static_cast<double>(c.support() + 1)) * w;
  for (double v : c.a_seq()) f *= v;
  return f;
}

}  // namespace detail

/// Jost solution u_{n_min} .. u_N (u_m = omega^m for m >= N).
inline JostSolution jost_solution(const JacobiCoeffs& c, const EnergyPoint& pt, long n_min = -1) {
  detail::require(n_min >= -1, "jost_solution: n_min must be >= -1");
  auto u = detail::jost_values(c, pt.z, pt.omega_val);
  const long N = static_cast<long>(c.support());
  JostSolution out;
  out.first = n_min;
  for (long n = n_min; n <= std::max(N, n_min); ++n)
    out.values.push_back(n <= N + 1 ? u[static_cast<std::size_t>(n + 1)] : std::pow(pt.omega_val, n));
  return out;
}

/// The Jost function u_{-1}(z).
inline cplx jost_function(const JacobiCoeffs& c, const EnergyPoint& pt) {
  return detail::jost_values(c, pt.z, pt.omega_val).front();
}

/// D(z) = 2^{N+1} omega a_0 ... a_{N-1} u_{-1}(z).
inline cplx pert_det_general(const JacobiCoeffs& c, const EnergyPoint& pt) {
  return detail::det_prefactor(c, pt.omega_val) * jost_function(c, pt);
}

/// The same determinant as a function of omega directly, z = (omega + 1/omega)/2.
inline cplx pert_det_at_omega(const JacobiCoeffs& c, cplx w) {
  const cplx z = 0.5 * (w + 1.0 / w);
  return detail::det_prefactor(c, w) * detail::jost_values(c, z, w).front();
}

/// Regular solution phi_0 .. phi_{n_max} (phi_{-1} = 0, phi_0 = 1).
template <class T>
std::vector<T> regular_solution(const JacobiCoeffs& c, T z, std::size_t n_max) {
  std::vector<T> phi(n_max + 1);
  phi[0] = T(1);
  T prev = T(0);
  for (std::size_t n = 0; n < n_max; ++n) {
    const long k = static_cast<long>(n);
    phi[n + 1] = ((z - T(c.b(k))) * phi[n] - T(c.a(k - 1)) * prev) / T(c.a(k));
    prev = phi[n];
  }
  return phi;
}

/// (R(z) e_n, e_m) = -phi_min(z) u_max(z) / u_{-1}(z).
inline cplx resolvent_entry_general(const JacobiCoeffs& c, int n, int m, const EnergyPoint& pt) {
  detail::require(n >= 0 && m >= 0, "resolvent_entry_general: indices must be >= 0");
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const auto u = detail::jost_values(c, pt.z, pt.omega_val);
  const cplx det = detail::det_prefactor(c, pt.omega_val) * u.front();
  if (std::abs(det) <= 1e-14) throw PoleError("resolvent_entry_general: Jost function vanishes (eigenvalue)");
  const long N = static_cast<long>(c.support());
  const cplx u_hi = hi <= N + 1 ? u[static_cast<std::size_t>(hi + 1)] : std::pow(pt.omega_val, hi);
  const cplx phi_lo = regular_solution<cplx>(c, pt.z, static_cast<std::size_t>(lo))[static_cast<std::size_t>(lo)];
  return -phi_lo * u_hi / u.front();
}

/// Coefficients c_0 .. c_{2N} of D as a polynomial in omega.
struct DetPolynomial {
  std::vector<cplx> coeffs;

  cplx operator()(cplx w) const {
    cplx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
    return acc;
  }
  std::size_t degree_bound() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  cplx coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : cplx{}; }
};

/// Extracts the determinant polynomial by sampling at 2N+1 roots of unity in
/// omega and inverting the Vandermonde system (an inverse DFT).
inline DetPolynomial det_polynomial(const JacobiCoeffs& c) {
  const std::size_t M = 2 * c.support() + 1;
  std::vector<cplx> samples(M);
  for (std::size_t j = 0; j < M; ++j)
    samples[j] = pert_det_at_omega(c, std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(M)));
  DetPolynomial out;
  out.coeffs.resize(M);
  for (std::size_t k = 0; k < M; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < M; ++j)
      acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k % M) / double(M));
    out.coeffs[k] = acc / double(M);
  }
  return out;
}

namespace detail {

inline std::vector<double> real_coeffs(const DetPolynomial& L, std::size_t max_degree, const char* who) {
  if (L.coeffs.size() > max_degree + 1) {
    for (std::size_t k = max_degree + 1; k < L.coeffs.size(); ++k)
      if (std::abs(L.coeffs[k]) > 1e-12)
        throw AdmissibilityError(std::string(who) + ": polynomial degree exceeds " + std::to_string(max_degree));
  }
  std::vector<double> l(max_degree + 1, 0.0);
  for (std::size_t k = 0; k <= max_degree && k < L.coeffs.size(); ++k) {
    if (std::abs(L.coeffs[k].imag()) > 1e-12) throw AdmissibilityError(std::string(who) + ": coefficients must be real");
    l[k] = L.coeffs[k].real();
  }
  if (std::abs(l[0] - 1.0) > 1e-12) throw AdmissibilityError(std::string(who) + ": constant term must equal 1");
  return l;
}

}  // namespace detail

/// Support-1 inverse problem: a_0 = sqrt(1 - l_2)/2, b_0 = -l_1/2.
inline JacobiCoeffs recover_rank1(const DetPolynomial& L) {
  auto l = detail::real_coeffs(L, 2, "recover_rank1");
  if (!(l[2] < 1.0)) throw AdmissibilityError("recover_rank1: leading coefficient must be < 1");
  return JacobiCoeffs({0.5 * std::sqrt(1.0 - l[2])}, {-0.5 * l[1]});
}

/// Support-2 inverse problem.
inline JacobiCoeffs recover_rank2(const DetPolynomial& L) {
  auto l = detail::real_coeffs(L, 4, "recover_rank2");
  if (!(l[4] < 1.0)) throw AdmissibilityError("recover_rank2: leading coefficient must be < 1");
  const double q = 1.0 - l[4];
  const double cross = (l[3] - l[1]) * (l[1] * l[4] - l[3]);
  // Equivalent to l_2 < 1 + l_4 + cross / q^2; the boundary case is rejected.
  const double radicand = (1.0 - l[2] + l[4]) * q * q + cross;
  if (!(radicand > 0.0)) throw AdmissibilityError("recover_rank2: admissibility inequality for l_2 fails");
  const double a1 = 0.5 * std::sqrt(q);
  const double b0 = (l[3] - l[1]) / (2.0 * q);
  const double b1 = (l[1] * l[4] - l[3]) / (2.0 * q);
  const double a0 = 0.5 / q * std::sqrt(radicand);
  return JacobiCoeffs({a0, a1}, {b0, b1});
}

}  // namespace gcheb
