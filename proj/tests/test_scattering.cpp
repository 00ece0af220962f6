#include <gtest/gtest.h>

#include <numbers>

#include "gcheb/scattering.hpp"
#include "gcheb/spectral.hpp"
#include "test_util.hpp"

using namespace gcheb;
using testutil::cplx;

namespace {
const double kS2 = std::numbers::sqrt2;
const double kPi = std::numbers::pi;
}  // namespace

TEST(Scattering, SMatrixExamples) {
  for (double l : {-0.7, 0.0, 0.4}) EXPECT_EQ(smatrix(1.0, l), cplx(1.0));
  EXPECT_NEAR(std::abs(smatrix(kS2, 1.0 / kS2) - cplx(0, -1)), 0.0, 1e-15);
  for (double a : {0.3, 2.0, 5.0}) EXPECT_EQ(smatrix(a, 0.0), cplx(1.0));
  EXPECT_NEAR(std::abs(smatrix(2.0, 0.3) - smatrix_via_t(2.0, 0.3)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(smatrix(2.0, 0.3) - smatrix_via_sigma(2.0, 0.3)), 0.0, 1e-12);
  double l = 0.5, r = std::sqrt(1 - l * l);
  EXPECT_NEAR(std::abs(smatrix_via_t(kS2, l) - cplx(r, -l) / cplx(r, l)), 0.0, 1e-13);
  EXPECT_THROW(smatrix(1.0, 1.0), DomainError);
  EXPECT_THROW(smatrix_via_t(2.0, -1.0), DomainError);
  EXPECT_THROW(sigma_pm(0.0, 0.2), DomainError);
}

TEST(Scattering, EdgeLimits) {
  for (double a : {0.5, 2.0, 3.0})
    EXPECT_NEAR(std::abs(smatrix_via_t(a, 1 - 1e-10) - 1.0), 0.0, 1e-3);
  EXPECT_NEAR(std::abs(smatrix(kS2, 1 - 1e-10) + 1.0), 0.0, 1e-3);
}

TEST(Scattering, SigmaExamples) {
  auto s1 = sigma_pm(1.0, 0.37);
  EXPECT_NEAR(std::abs(s1.plus - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s1.minus - 1.0), 0.0, 1e-15);
  auto s2 = sigma_pm(2.0, 0.0);
  EXPECT_NEAR(std::abs(s2.plus - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s2.minus - 1.0), 0.0, 1e-15);
  auto s = sigma_pm(1.3, 0.7);
  EXPECT_NEAR(std::abs(s.minus / s.plus - smatrix(1.3, 0.7)), 0.0, 1e-12);
}

TEST(Scattering, TripleAgreementUnitaritySymmetry) {
  testutil::Rng rng(51);
  for (int i = 0; i < 1000; ++i) {
    double a = rng.uniform(0.05, 5.0), l = rng.uniform(-0.999, 0.999);
    cplx s = smatrix(a, l);
    EXPECT_NEAR(std::abs(s - smatrix_via_t(a, l)), 0.0, 1e-12) << a << " " << l;
    EXPECT_NEAR(std::abs(s - smatrix_via_sigma(a, l)), 0.0, 1e-12) << a << " " << l;
    EXPECT_NEAR(std::abs(s), 1.0, 1e-12);
    auto sg = sigma_pm(a, l);
    EXPECT_NEAR(std::abs(sg.plus), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(sg.minus), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(smatrix(a, -l) - std::conj(s)), 0.0, 1e-14);
    EXPECT_NEAR(ssf_closed(a, -l), -ssf_closed(a, l), 0.0);
    EXPECT_NEAR(std::abs(s - std::exp(cplx(0, -2 * kPi * ssf_closed(a, l)))), 0.0, 1e-10) << a << " " << l;
  }
}

TEST(Scattering, CouplingLimits) {
  for (double l : {-0.8, -0.2, 0.1, 0.6}) {
    EXPECT_NEAR(std::abs(smatrix(1e3, l) - smatrix_large_coupling_limit(l)), 0.0, 1e-4);
    EXPECT_NEAR(std::abs(smatrix(1e-3, l) - smatrix_weak_coupling_limit(l)), 0.0, 1e-4);
  }
}

TEST(Scattering, SsfClosedExamples) {
  for (double a : {0.5, kS2, 2.0}) EXPECT_EQ(ssf_closed(a, 0.0), 0.0);
  EXPECT_NEAR(ssf_closed(kS2, 1 - 1e-12), 0.5, 1e-6);
  EXPECT_EQ(ssf_closed(kS2, 1.0), 0.5);
  double a = 0.8;
  double want = std::atan((a * a - 1) / (a * std::sqrt(2 - a * a))) / kPi;
  EXPECT_NEAR(ssf_closed(a, a / kS2), want, 1e-14);
  for (double d : {1e-3, 1e-2}) {
    EXPECT_GE(ssf_closed(a, a / kS2 + d), want);
    EXPECT_GE(ssf_closed(a, a / kS2 - d), want);
  }
  double lp = eigenvalues(2.0)[1];
  EXPECT_EQ(ssf_closed(2.0, 1.05), 1.0);
  EXPECT_EQ(ssf_closed(2.0, lp), 1.0);
  EXPECT_EQ(ssf_closed(2.0, lp + 1e-9), 0.0);
  EXPECT_EQ(ssf_closed(2.0, -1.05), -1.0);
  EXPECT_EQ(ssf_closed(0.5, 1.5), 0.0);
  EXPECT_NEAR(ssf_closed(2.0, 1 - 1e-9), 1.0, 1e-4);
}

TEST(Scattering, SsfArgTracked) {
  EXPECT_NEAR(ssf_arg_tracked(2.0, 1.05), 1.0, 1e-8);
  EXPECT_NEAR(ssf_arg_tracked(0.5, 0.5), ssf_closed(0.5, 0.5), 1e-8);
  for (double l : {-0.5, 0.2, 1.5}) EXPECT_EQ(ssf_arg_tracked(1.0, l), 0.0);
  testutil::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    double a = rng.uniform(0.1, 3.0), l = rng.uniform(-1.5, 1.5);
    if (std::abs(std::abs(l) - 1.0) < 1e-3) continue;
    bool near_eig = false;
    for (double e : eigenvalues(a)) near_eig |= std::abs(l - e) < 1e-3;
    if (near_eig) continue;
    EXPECT_NEAR(ssf_arg_tracked(a, l), ssf_closed(a, l), 1e-8) << a << " " << l;
  }
  EXPECT_THROW(ssf_arg_tracked(2.0, 1.0), DomainError);
  EXPECT_THROW(ssf_arg_tracked(2.0, eigenvalues(2.0)[0]), DomainError);
}

TEST(Scattering, Record) {
  auto r = scattering_record(1.7, 0.45);
  EXPECT_EQ(r.s_value, smatrix(1.7, 0.45));
  EXPECT_EQ(r.xi, ssf_closed(1.7, 0.45));
  EXPECT_NEAR(std::abs(r.det_plus), std::sqrt(std::pow(1.7, 4) + 4 * (1 - 1.7 * 1.7) * 0.45 * 0.45), 1e-13);
  EXPECT_NEAR(std::abs(std::conj(r.det_plus) / r.det_plus - r.s_value), 0.0, 1e-13);
}

TEST(Scattering, TransformRow) {
  std::vector<double> grid = {-0.9, -0.1, 0.0, 0.6};
  auto row = transform_row(1.0, 0, grid);
  for (std::size_t k = 0; k < grid.size(); ++k)
    EXPECT_NEAR(row[k], std::sqrt(2 / kPi) * std::pow(1 - grid[k] * grid[k], 0.25), 1e-15);
  EXPECT_THROW(transform_row(1.0, 0, {0.2, 1.0}), DomainError);
}

TEST(Scattering, TransformCompleteness) {
  // F_a^* F_a e_0 = e_0 minus the atom part
  for (double a : {0.6, 1.0, kS2, 1.8, 2.5}) {
    double norm = quad_integrate([&](double l, double r) { double p = psi_values(a, l, r, 0)[0]; return p * p; }, 1e-12);
    double want = a > kS2 ? 1.0 - 2.0 * atom_weight(a) : 1.0;
    EXPECT_NEAR(norm, want, 1e-9) << a;
  }
  // F_a F_a^* g = g for a smooth g
  auto bump = standard_bump(0.1, 0.6);
  auto rule = theta_rule(3000);
  for (double a : {0.7, 2.0}) {
    const std::size_t N = 400;
    std::vector<double> coef(N, 0.0);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      auto ps = psi_values(a, rule.nodes[k], N - 1);
      double g = bump.f(rule.nodes[k]);
      if (g == 0.0) continue;
      for (std::size_t n = 0; n < N; ++n) coef[n] += rule.weights[k] * ps[n] * g;
    }
    for (double l : {-0.3, 0.1, 0.45}) {
      auto ps = psi_values(a, l, N - 1);
      double back = 0.0;
      for (std::size_t n = 0; n < N; ++n) back += coef[n] * ps[n];
      EXPECT_NEAR(back, bump.f(l), 1e-8) << a << " " << l;
    }
  }
}

TEST(Scattering, WaveOperatorPreconditions) {
  std::vector<cplx> f = {1.0};
  EXPECT_THROW(wave_operator_check(1.5, 10.0, f, 1024), DomainError);
  EXPECT_THROW(wave_operator_check(1.5, 10.0, std::vector<cplx>(300, 1.0), 2048), DomainError);
}

TEST(Scattering, WavePropagatorSmall) {
  WavePropagator free(1.0, 512);
  std::vector<cplx> f = {1.0, cplx(0.0, 0.5)};
  for (double t : {-30.0, 0.0, 40.0}) EXPECT_LT(free.check(t, f).deviation, 1e-10);

  WavePropagator w(1.5, 1024);
  std::vector<cplx> e0 = {1.0};
  auto d10 = w.check(10.0, e0), d80 = w.check(80.0, e0), m80 = w.check(-80.0, e0);
  EXPECT_LT(d80.deviation, d10.deviation);
  EXPECT_LT(m80.deviation, d10.deviation);
  EXPECT_NEAR(d80.target_norm, 1.0, 1e-8);
  EXPECT_FALSE(d80.reflection_warning);
  EXPECT_TRUE(w.check(900.0, e0).reflection_warning);
  auto ev = w.evolve(37.0, std::vector<cplx>(1024, 0.0));
  EXPECT_EQ(ev.size(), 1024u);
}

TEST(Scattering, WaveTargetIsometry) {
  std::vector<cplx> f = {0.6, cplx(0.0, 0.8), 0.3};
  double in = 0;
  for (auto v : f) in += std::norm(v);
  for (double a : {0.5, 1.3, kS2}) {
    for (double t : {-1.0, 1.0}) {
      auto g = wave_operator_target(a, t, f, 700);
      double out = 0;
      for (auto v : g) out += std::norm(v);
      EXPECT_NEAR(std::sqrt(out), std::sqrt(in), 1e-8) << a << " " << t;
    }
  }
}

TEST(Scattering, OscillatoryDecay) {
  auto bump = standard_bump();
  EXPECT_TRUE(std::isfinite(oscillatory_decay_check(0, 0.0, 1, bump)));
  auto sup = [&](double step, int p) {
    std::vector<double> ts;
    for (double t = -200; t <= 200; t += step) ts.push_back(t);
    for (int t = -10; t <= 10; ++t) ts.push_back(t);
    double m = 0;
    for (double n = 0; n <= 200; n += step)
      for (double t : ts) m = std::max(m, oscillatory_decay_check(std::size_t(n), t, p, bump));
    return m;
  };
  double coarse = sup(20.0, 1), fine = sup(10.0, 1);
  EXPECT_LT(coarse, 10.0);
  EXPECT_LT(fine, 1.1 * coarse);
  EXPECT_LT(sup(20.0, 2), 100.0);
  EXPECT_THROW(oscillatory_decay_check(0, 0.0, 3, bump), DomainError);
}
