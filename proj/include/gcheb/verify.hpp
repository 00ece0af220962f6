#pragma once

// Agreement suites: every closed form checked against an independent route
// (recurrence, dense truncation, quadrature, argument tracking, Lanczos).
// Shared by the CLI verify command and the acceptance test binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gcheb/branch.hpp"
#include "gcheb/genchebyshev.hpp"
#include "gcheb/jost.hpp"
#include "gcheb/oracle.hpp"
#include "gcheb/pointres.hpp"
#include "gcheb/scattering.hpp"
#include "gcheb/spectral.hpp"

namespace gcheb::verify {

struct CriterionResult {
  int id = 0;
  std::string suite;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  std::size_t truncation = 4096;
  std::size_t eigen_truncation = 8192;
  std::uint64_t seed = 20240601;
};

namespace detail {

// Worst observed error against a tolerance.
struct Gauge {
  double worst = 0.0;
  double tol;
  std::string where;

  explicit Gauge(double t) : tol(t) {}
  void see(double err, const std::string& at) {
    if (!(err <= worst)) {  // also catches NaN
      worst = std::isnan(err) ? INFINITY : err;
      where = at;
    }
  }
  bool ok() const { return worst <= tol; }
  std::string str(const char* label) const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s max err %.3g (tol %.0e)%s%s", label, worst, tol, where.empty() ? "" : " at ",
                  where.c_str());
    return buf;
  }
};

inline std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

inline std::string fmt(const char* f, double x, double y) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x, y);
  return buf;
}

inline double dist_to_cut(cplx z) {
  const double x = std::clamp(z.real(), -1.0, 1.0);
  return std::abs(z - cplx(x, 0.0));
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace detail

/// 1. Recurrence vs closed form, and the band-edge formula.
inline CriterionResult poly(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ua(0.0, 4.0), ux(-2.0, 2.0), uy(-1.5, 1.5);
  std::uniform_int_distribution<int> un(1, 60);
  detail::Gauge dual(1e-9);
  for (int trial = 0; trial < 1000; ++trial) {
    double a;
    do a = ua(rng);
    while (a <= 0.0);
    cplx z;
    do z = cplx(ux(rng), uy(rng));
    while (detail::dist_to_cut(z) < 0.01);
    const int n = un(rng);
    const CouplingParams p(a);
    const auto pt = EnergyPoint::at(z);
    const cplx rec = chebyshev_values<cplx>(p, z, n)[n];
    const cplx cf = eval_closed_form(p, pt, n);
    // relative to the size of the two exponential terms
    const cplx tail = ((a * a - 2.0) * z) / (2.0 * a * pt.sqrt_val);
    const cplx wn = std::pow(pt.omega_val, n);
    const double scale = std::abs((a / 2.0 + tail) * wn) + std::abs((a / 2.0 - tail) / wn);
    dual.see(std::abs(rec - cf) / scale, "a=" + std::to_string(a) + " n=" + std::to_string(n));
  }
  detail::Gauge edge(1e-12);
  for (double a : {0.5, 1.0, std::numbers::sqrt2, 2.0}) {
    for (int sign : {1, -1}) {
      auto ch = chebyshev_values<double>(CouplingParams(a), double(sign), 100);
      for (int n = 1; n <= 100; ++n) {
        const double e = eval_edge(CouplingParams(a), sign, n);
        edge.see(std::abs(ch[n] - e) / std::max(1.0, std::abs(e)), "a=" + std::to_string(a));
      }
    }
  }
  return {1, "poly", dual.ok() && edge.ok(), detail::join({dual.str("dual-path"), edge.str("edge")})};
}

/// 2. Closed-form resolvent entries vs dense tridiagonal solves.
inline CriterionResult resolvent(const Options& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(-1.0, 1.0);
  detail::Gauge g(1e-8);
  for (double a : {0.7, 1.0, std::numbers::sqrt2, 2.0}) {
    const auto T = oracle::truncate(CouplingParams(a), opt.truncation);
    const auto eig = eigenvalues(a);
    for (int k = 0; k < 20; ++k) {
      cplx z;
      bool ok;
      do {
        z = cplx(ux(rng), uy(rng));
        ok = detail::dist_to_cut(z) >= 0.05;
        for (double l : eig) ok = ok && std::abs(z - l) >= 0.05;
      } while (!ok);
      const auto pt = EnergyPoint::at(z);
      for (int m = 0; m <= 8; ++m) {
        const auto col = oracle::dense_resolvent_column(T, m, z);
        for (int n = 0; n <= 8; ++n) {
          const cplx cf = resolvent_entry(a, n, m, pt);
          g.see(std::abs(cf - col[n]) / std::max(1.0, std::abs(cf)),
                "a=" + std::to_string(a) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
      }
    }
  }
  return {2, "resolvent", g.ok(), g.str("closed vs dense")};
}

/// 3. Total mass, and eigenvalues/weights against the truncated eigensolver.
inline CriterionResult measure(const Options& opt) {
  detail::Gauge mass(1e-9);
  for (double a : {0.3, 0.5, 1.0, 1.2, std::numbers::sqrt2, 1.7, 2.0, 3.0})
    mass.see(std::abs(spectral_measure(a).total_mass(1e-12) - 1.0), "a=" + std::to_string(a));
  const double a = 2.0;
  const auto sp = oracle::dense_spectrum(oracle::truncate(CouplingParams(a), opt.eigen_truncation));
  const auto ev = eigenvalues(a);
  detail::Gauge eig(1e-8), wt(1e-6);
  const std::size_t n = sp.eigenvalues.size();
  eig.see(std::abs(sp.eigenvalues.front() - ev[0]), "lambda_-");
  eig.see(std::abs(sp.eigenvalues.back() - ev[1]), "lambda_+");
  const auto w = sp.weights();
  wt.see(std::abs(w.front() + w.back() - 2.0 * atom_weight(a)), "outlier weights");
  bool inside = n >= 3 && std::abs(sp.eigenvalues[1]) < 1.0 && std::abs(sp.eigenvalues[n - 2]) < 1.0;
  return {3, "measure", mass.ok() && eig.ok() && wt.ok() && inside,
          detail::join({mass.str("mass"), eig.str("eigenvalues"), wt.str("weights"),
                        inside ? "exactly two outliers" : "outlier count wrong"})};
}

/// 4. Orthogonality with atom terms; Cauchy-integral identities for U_n and T_n.
inline CriterionResult orthogonality(const Options&) {
  detail::Gauge orth(1e-8);
  for (double a : {0.5, 1.0, std::numbers::sqrt2, 2.0}) {
    const CouplingParams p(a);
    for (int n = 0; n <= 12; ++n)
      for (int m = n; m <= 12; ++m) {
        const double q = quad_integrate(
            [&](double l, double r) {
              auto ch = chebyshev_values<double>(p, l, m);
              return ch[n] * ch[m] * density_r(a, r);
            },
            1e-12);
        const double lhs = q + atom_orthogonality_term(a, n, m);
        orth.see(std::abs(lhs - (n == m ? 1.0 : 0.0)),
                 "a=" + std::to_string(a) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
  }
  const cplx z(2.0, 0.5);
  const auto pt = EnergyPoint::at(z);
  const CouplingParams free_p(1.0);
  detail::Gauge cheu(1e-7), chet(1e-7);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) {
      const cplx u = quad_integrate(
          [&](double l, double r) {
            auto U = chebyshev_values<double>(free_p, l, std::max(n, m));
            return cplx(U[n] * U[m] * r) / (l - z);
          },
          1e-12);
      cheu.see(std::abs(u - chebyshev_u_cauchy(n, m, pt)), "n=" + std::to_string(n) + " m=" + std::to_string(m));
      const cplx t = quad_integrate(
                         [&](double l, double r) {
                           const double th = std::atan2(r, l);
                           return cplx(std::cos(n * th) * std::cos(m * th) / r) / (l - z);
                         },
                         1e-12) /
                     std::numbers::pi;
      chet.see(std::abs(t - chebyshev_t_cauchy(n, m, pt)), "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  return {4, "orthogonality", orth.ok() && cheu.ok() && chet.ok(),
          detail::join({orth.str("orthogonality"), cheu.str("U-Cauchy"), chet.str("T-Cauchy")})};
}

/// 5. Scattering matrix: three formulas, unitarity, S(0), a = sqrt2, band-edge limits.
inline CriterionResult scattering(const Options&) {
  detail::Gauge triple(1e-12), unit(1e-12), zero(1e-12), crit(1e-12), edge(1e-3);
  for (int i = 0; i < 20; ++i) {
    const double a = 0.2 * (i + 1);
    for (int j = 0; j < 50; ++j) {
      const double l = -0.995 + 1.99 * j / 49.0;
      const cplx s = smatrix(a, l);
      const std::string at = detail::fmt("a=%.2f l=%.4f", a, l);
      triple.see(std::max(std::abs(s - smatrix_via_t(a, l)), std::abs(s - smatrix_via_sigma(a, l))), at);
      unit.see(std::abs(std::abs(s) - 1.0), at);
    }
    zero.see(std::abs(smatrix(a, 0.0) - 1.0), detail::fmt("a=%.2f", a));
  }
  for (int j = 0; j < 50; ++j) {
    const double l = -0.99 + 1.98 * j / 49.0;
    const double r = std::sqrt((1.0 - l) * (1.0 + l));
    crit.see(std::abs(smatrix(std::numbers::sqrt2, l) - cplx(r, -l) / cplx(r, l)), detail::fmt("l=%.3f", l));
  }
  const double delta = 1e-6;
  for (double a : {0.5, 1.0, 1.2, std::numbers::sqrt2, 2.0, 3.0}) {
    const double target = gcheb::detail::is_critical(a) ? -1.0 : 1.0;
    for (double l : {1.0 - delta, -(1.0 - delta)}) edge.see(std::abs(smatrix(a, l) - target), detail::fmt("a=%.3f l=%+.6f", a, l));
  }
  // Supplementary: the approach to the limit is O(sqrt(1 - |l|)).
  const double e6 = std::abs(smatrix(2.0, 1.0 - 1e-6) - 1.0);
  const double e8 = std::abs(smatrix(2.0, 1.0 - 1e-8) - 1.0);
  const bool ok = triple.ok() && unit.ok() && zero.ok() && crit.ok() && edge.ok();
  return {5, "scattering", ok,
          detail::join({triple.str("triple"), unit.str("|S|-1"), zero.str("S(0)"), crit.str("a=sqrt2 form"),
                        edge.str("edge limit at 1-1e-6"),
                        detail::fmt("edge rate |S-1| at a=2: %.3g (1e-6), %.3g (1e-8)", e6, e8)})};
}

/// 6. Spectral shift function: argument tracking vs closed form, plateaus, Birman-Krein.
inline CriterionResult ssf(const Options&) {
  detail::Gauge dual(1e-8), bk(1e-10);
  for (double a : {0.3, 0.5, 0.9, 1.0, 1.2, std::numbers::sqrt2, 1.7, 2.0, 3.0}) {
    std::vector<double> grid;
    for (int j = 0; j <= 40; ++j) grid.push_back(-0.99 + 1.98 * j / 40.0);
    for (double l : eigenvalues(a))
      if (l > 0) {
        grid.push_back(0.5 * (1.0 + l));
        grid.push_back(-0.5 * (1.0 + l));
        grid.push_back(l + 0.3);
        grid.push_back(-l - 0.3);
      }
    grid.push_back(1.5);
    grid.push_back(-2.5);
    for (double l : grid) {
      const std::string at = detail::fmt("a=%.3f l=%.4f", a, l);
      dual.see(std::abs(ssf_arg_tracked(a, l) - ssf_closed(a, l)), at);
      if (std::abs(l) < 1.0)
        bk.see(std::abs(smatrix(a, l) - std::exp(cplx(0.0, -2.0 * std::numbers::pi * ssf_closed(a, l)))), at);
    }
  }
  const double lp = eigenvalues(2.0)[1];
  bool plateau = true;
  for (double l : {1.0 + 1e-6, 1.05, 0.5 * (1.0 + lp), lp - 1e-4}) {
    plateau = plateau && std::abs(ssf_arg_tracked(2.0, l) - 1.0) <= 1e-8 && ssf_closed(2.0, l) == 1.0;
    plateau = plateau && std::abs(ssf_arg_tracked(2.0, -l) + 1.0) <= 1e-8 && ssf_closed(2.0, -l) == -1.0;
  }
  return {6, "ssf", dual.ok() && bk.ok() && plateau,
          detail::join({dual.str("tracked vs closed"), bk.str("Birman-Krein"),
                        plateau ? "plateau +-1 on (1, lambda_+(2))" : "plateau check failed"})};
}

/// 7. Generating functions vs quadrature moments and truncated traces.
inline CriterionResult genfun(const Options&) {
  detail::Gauge mom(1e-9), tr(1e-10);
  bool odd_zero = true;
  for (double a : {0.5, 1.0, 1.2, std::numbers::sqrt2, 2.0}) {
    const auto ms = moment_series(a, 19);
    for (std::size_t n = 0; n < 20; ++n) {
      mom.see(std::abs(ms[n] - oracle::numeric_moment(a, n)) / std::max(1.0, std::abs(ms[n])),
              detail::fmt("a=%.3f n=%.0f", a, double(n)));
      if (n % 2 == 1) odd_zero = odd_zero && ms[n] == 0.0;
    }
    const auto ts = trace_series(a, 10);
    for (std::size_t n = 1; n <= 10; ++n) {
      const std::size_t size = n + 1;
      const double dense = oracle::power_trace(oracle::truncate(CouplingParams(a), std::max<std::size_t>(size, 2)), n) -
                           oracle::power_trace(oracle::truncate(CouplingParams(1.0), std::max<std::size_t>(size, 2)), n);
      tr.see(std::abs(ts[n] - dense), detail::fmt("a=%.3f n=%.0f", a, double(n)));
      if (n % 2 == 1) odd_zero = odd_zero && ts[n] == 0.0;
    }
  }
  return {7, "genfun", mom.ok() && tr.ok() && odd_zero,
          detail::join({mom.str("moments"), tr.str("traces"), odd_zero ? "odd coefficients 0" : "odd coefficient nonzero"})};
}

/// 8. Large-m moment asymptotics.
inline CriterionResult asymptotics(const Options&) {
  std::vector<std::string> parts;
  bool ok = true;
  for (double a : {0.5, 1.2}) {
    const double r = moment_asymptotics_check(a, 400);
    ok = ok && r >= 0.97 && r <= 1.03;
    parts.push_back(detail::fmt("a=%.1f ratio %.5f", a, r));
  }
  const auto ms = moment_series(2.0, 402);
  const double ratio = ms[402] / ms[400];
  const double err = std::abs(ratio - 4.0 / 3.0);
  ok = ok && err <= 1e-6;
  parts.push_back(detail::fmt("a=2 successive ratio err %.3g", err));
  return {8, "asymptotics", ok, detail::join(parts)};
}

/// 9. Jost determinant vs the explicit polynomials; inverse recovery round trips; degree bound.
inline CriterionResult jost(const Options& opt) {
  std::mt19937_64 rng(opt.seed + 9);
  std::uniform_real_distribution<double> ua(0.1, 1.5), ub(-1.0, 1.0);
  detail::Gauge d1(1e-12), d2(1e-12), r1(1e-12), r2(1e-12), dd(1e-12);
  for (int k = 0; k < 100; ++k) {
    const double a = 2.0 * ua(rng), b = 2.0 * ub(rng);
    const auto L = det_polynomial(JacobiCoeffs::from_coupling(CouplingParams(a, b)));
    const std::vector<double> expect{1.0, -b, 1.0 - a * a};
    for (std::size_t j = 0; j < 3; ++j) d1.see(std::abs(L.coeff(j) - expect[j]), "N=1");
    const auto back = recover_rank1(L);
    r1.see(std::max(std::abs(back.a(0) - a / 2), std::abs(back.b(0) - b / 2)), "rank1");

    const double a0 = ua(rng), a1 = ua(rng), b0 = ub(rng), b1 = ub(rng);
    const JacobiCoeffs c({a0, a1}, {b0, b1});
    const auto L2 = det_polynomial(c);
    const double al0 = 1.0 - 4.0 * a0 * a0, al1 = 1.0 - 4.0 * a1 * a1;
    const std::vector<double> quartic{1.0, -2.0 * (b0 + b1), al1 + al0 + 4.0 * b0 * b1, -2.0 * (al1 * b0 + b1), al1};
    for (std::size_t j = 0; j < 5; ++j) d2.see(std::abs(L2.coeff(j) - quartic[j]), "N=2");
    const auto back2 = recover_rank2(L2);
    r2.see(std::max({std::abs(back2.a(0) - a0), std::abs(back2.a(1) - a1), std::abs(back2.b(0) - b0),
                     std::abs(back2.b(1) - b1)}),
           "rank2");
  }
  bool bound = true;
  for (std::size_t N = 1; N <= 5; ++N)
    for (int k = 0; k < 100; ++k) {
      std::vector<double> as(N), bs(N);
      for (auto& v : as) v = ua(rng);
      for (auto& v : bs) v = ub(rng);
      const auto L = det_polynomial(JacobiCoeffs(as, bs));
      bound = bound && L.degree_bound() == 2 * N;
      dd.see(std::abs(L.coeff(0) - 1.0), "c_0");
      const double lead = 1.0 - 4.0 * as.back() * as.back();
      dd.see(std::abs(L.coeff(2 * N) - lead), "leading");
      bound = bound && L.coeff(2 * N).real() < 1.0;
    }
  const bool ok = d1.ok() && d2.ok() && r1.ok() && r2.ok() && dd.ok() && bound;
  return {9, "jost", ok,
          detail::join({d1.str("N=1"), d2.str("N=2 quartic"), r1.str("rank1 round trip"), r2.str("rank2 round trip"),
                        dd.str("degree bound")})};
}

/// 10. Wave operators on a truncation: decreasing deviation, isometry of the limit.
inline CriterionResult wave(const Options& opt) {
  const std::vector<cplx> e0{1.0};
  WavePropagator W(1.5, opt.truncation);
  const double d10 = W.check(10.0, e0).deviation;
  const double d50 = W.check(50.0, e0).deviation;
  const double d200 = W.check(200.0, e0).deviation;
  const double dm200 = W.check(-200.0, e0).deviation;
  const bool decay = d200 < d50 && d50 < d10 && d200 <= 5e-2 && dm200 <= 5e-2;
  detail::Gauge iso(1e-8);
  const std::vector<cplx> f{0.5, cplx(0.0, -0.5), 0.5, cplx(0.25, 0.25), -0.3};
  double fn = 0.0;
  for (auto v : f) fn += std::norm(v);
  fn = std::sqrt(fn);
  for (double a : {0.5, 1.0, 1.2, std::numbers::sqrt2}) {
    for (double t : {1.0, -1.0}) {
      for (const auto& g : {e0, f}) {
        const auto tg = wave_operator_target(a, t, g, opt.truncation);
        double nn = 0.0;
        for (auto v : tg) nn += std::norm(v);
        iso.see(std::abs(std::sqrt(nn) - (g.size() == 1 ? 1.0 : fn)), detail::fmt("a=%.3f t=%+.0f", a, t));
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "dev(10)=%.4g dev(50)=%.4g dev(200)=%.4g dev(-200)=%.4g", d10, d50, d200, dm200);
  return {10, "wave", decay && iso.ok(), detail::join({buf, iso.str("isometry")})};
}

/// 11. Hankel determinants: a_0 recovery, odd moments, synthetic a_n = 1 measure.
inline CriterionResult hankel(const Options& opt) {
  detail::Gauge a0(1e-9), odd(1e-12), h1(1e-8);
  for (double a : {0.5, 1.0, std::numbers::sqrt2, 2.0}) {
    const auto hd = hankel_dets(moment_series(a, 7), 4);
    a0.see(std::abs(hd.a_recovered[0] - a / 2.0), detail::fmt("a=%.3f", a));
    std::vector<double> nm;
    for (std::size_t n = 0; n <= 15; ++n) nm.push_back(oracle::numeric_moment(a, n));
    for (std::size_t n = 1; n < nm.size(); n += 2) odd.see(std::abs(nm[n]), detail::fmt("a=%.3f n=%.0f", a, double(n)));
    if (!is_even_measure(nm, 1e-12)) odd.see(INFINITY, "is_even_measure");
  }
  // a_n = 1 for all n, b_n = 0
  const std::size_t size = opt.truncation;
  const JacobiCoeffs ones(std::vector<double>(size, 1.0), std::vector<double>(size, 0.0));
  const auto sp = oracle::dense_spectrum(oracle::truncate(ones, size));
  const auto rc = oracle::stieltjes_coeffs(sp, 12);
  detail::Gauge lanczos(1e-8);
  for (std::size_t n = 0; n < rc.a.size(); ++n) lanczos.see(std::abs(rc.a[n] - 1.0) + std::abs(rc.b[n]), "stieltjes");
  const auto w = sp.weights();
  std::vector<double> mom(17, 0.0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    double p = w[k];
    for (std::size_t j = 0; j < mom.size(); ++j) {
      mom[j] += p;
      p *= sp.eigenvalues[k];
    }
  }
  const auto hd = hankel_dets(mom, 8);
  for (std::size_t n = 1; n <= 8; ++n) h1.see(std::abs(hd.h[n] - 1.0), detail::fmt("h_%.0f", double(n)));
  return {11, "hankel", a0.ok() && odd.ok() && h1.ok() && lanczos.ok(),
          detail::join({a0.str("a_0 recovery"), odd.str("odd moments"), lanczos.str("a_n = 1 round trip"),
                        h1.str("h_n = 1")})};
}

/// 12. Second-sheet resonances vs closed forms.
inline CriterionResult resonance(const Options&) {
  detail::Gauge g(1e-10);
  bool counts = true;
  for (double a : {0.5, std::numbers::sqrt2 / 2.0, 1.2, std::numbers::sqrt2}) {
    const auto rs = resonances(a);
    std::vector<cplx> expect;
    if (a < 1.0) {
      const double y = a * a / (2.0 * std::sqrt(1.0 - a * a));
      expect = {cplx(0.0, -y), cplx(0.0, y)};
    } else {
      const double x = a * a / (2.0 * std::sqrt(a * a - 1.0));
      expect = {cplx(-x, 0.0), cplx(x, 0.0)};
    }
    counts = counts && rs.points.size() == 2;
    for (std::size_t k = 0; k < std::min<std::size_t>(2, rs.points.size()); ++k) {
      g.see(std::abs(rs.points[k] - expect[k]), detail::fmt("a=%.4f k=%.0f", a, double(k)));
      if (!gcheb::detail::is_critical(a))
        g.see(std::abs(second_sheet_det(a, rs.points[k])), detail::fmt("|D| a=%.4f", a));
    }
  }
  for (double a : {1.0, 2.0}) counts = counts && resonances(a).points.empty();
  return {12, "resonances", g.ok() && counts,
          detail::join({g.str("closed forms"), counts ? "counts ok (empty for a=1,2)" : "wrong resonance count"})};
}

struct Suite {
  int id;
  const char* name;
  std::function<CriterionResult(const Options&)> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {1, "poly", poly},         {2, "resolvent", resolvent},     {3, "measure", measure},
      {4, "orthogonality", orthogonality}, {5, "scattering", scattering}, {6, "ssf", ssf},
      {7, "genfun", genfun},     {8, "asymptotics", asymptotics}, {9, "jost", jost},
      {10, "wave", wave},        {11, "hankel", hankel},          {12, "resonances", resonance},
  };
  return all;
}

/// Runs one suite, recording wall time and turning exceptions into failures.
inline CriterionResult run_suite(const Suite& s, const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = s.run(opt);
  } catch (const std::exception& e) {
    r = {s.id, s.name, false, std::string("exception: ") + e.what()};
  }
  r.id = s.id;
  r.suite = s.name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace gcheb::verify
