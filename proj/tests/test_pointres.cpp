#include <gtest/gtest.h>

#include <numbers>

#include "gcheb/oracle.hpp"
#include "gcheb/pointres.hpp"
#include "test_util.hpp"

using namespace gcheb;
using testutil::cplx;

namespace {
const double kS2 = std::numbers::sqrt2;
auto P(cplx z) { return EnergyPoint::at(z); }

// (H_a - z) g at row n, with H_a from the defining matrix
cplx apply_row(double a, const std::vector<cplx>& g, int n, cplx z) {
  auto off = [a](int k) { return k == 0 ? a / 2.0 : 0.5; };
  cplx v = -z * g[n] + off(n) * g[n + 1];
  if (n > 0) v += off(n - 1) * g[n - 1];
  return v;
}
}  // namespace

TEST(PointRes, FreeResolventExamples) {
  EXPECT_NEAR(std::abs(free_resolvent_entry(0, 0, P(1.25)) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(free_resolvent_entry(1, 0, P(1.25)) + 0.5), 0.0, 1e-15);
  EXPECT_EQ(free_resolvent_entry(4, 2, P(cplx(0.2, 0.5))), free_resolvent_entry(2, 4, P(cplx(0.2, 0.5))));
  EXPECT_THROW(free_resolvent_entry(0, 0, P(1.0)), PoleError);
  EXPECT_THROW(free_resolvent_entry(-1, 0, P(2.0)), DomainError);
}

TEST(PointRes, FreeResolventMatchesDenseOracle) {
  auto T = oracle::truncate(CouplingParams(1.0), 4096);
  cplx z(2.0, 1.0);
  EXPECT_NEAR(std::abs(free_resolvent_entry(5, 3, P(z)) - oracle::dense_resolvent_entry(T, 5, 3, z)), 0.0, 1e-8);
}

TEST(PointRes, WholeLine) {
  EXPECT_NEAR(std::abs(whole_line_resolvent_entry(0, 0, P(1.25)) + 4.0 / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(whole_line_resolvent_entry(3, 1, P(1.25)) + 1.0 / 3.0), 0.0, 1e-15);
  EXPECT_EQ(whole_line_resolvent_entry(-2, 5, P(cplx(0.1, 0.3))), whole_line_resolvent_entry(5, -2, P(cplx(0.1, 0.3))));
  EXPECT_THROW(whole_line_resolvent_entry(0, 0, P(-1.0)), PoleError);
}

TEST(PointRes, PertDetExamples) {
  testutil::Rng rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(pert_det(1.0, P(rng.off_cut())), cplx(1.0));
  EXPECT_NEAR(std::abs(pert_det(kS2, P(1.25)) - 0.75), 0.0, 1e-15);
  for (double l : {-0.8, 0.0, 0.3}) {
    auto d = pert_det(2.0, EnergyPoint::boundary(l, Side::Plus));
    cplx want = 1.0 - 3.0 * cplx(2 * l * l - 1, -2 * l * std::sqrt(1 - l * l));
    EXPECT_NEAR(std::abs(d - want), 0.0, 1e-14);
  }
  EXPECT_THROW(pert_det(0.0, P(2.0)), DomainError);
}

TEST(PointRes, PertDetCriticalIdentity) {
  testutil::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    auto pt = P(rng.off_cut());
    EXPECT_LT(testutil::rel(pert_det(kS2, pt), 2.0 * pt.sqrt_val * pt.omega_val), 1e-12);
  }
}

TEST(PointRes, BoundaryModulus) {
  testutil::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    double a = rng.uniform(0.1, 4.0), l = rng.uniform(-0.999, 0.999);
    for (auto s : {Side::Plus, Side::Minus}) {
      double d2 = std::norm(pert_det(a, EnergyPoint::boundary(l, s)));
      double want = std::pow(a, 4) + 4 * (1 - a * a) * l * l;
      EXPECT_NEAR(d2, want, 1e-12 * std::max(1.0, want));
    }
  }
}

TEST(PointRes, TMatrix) {
  auto t = tmatrix(1.0, P(cplx(0.4, 0.3)));
  EXPECT_EQ(t.t00, cplx(0.0));
  EXPECT_EQ(t.t01, cplx(0.0));
  EXPECT_EQ(t.t11, cplx(0.0));
  auto t2 = tmatrix(2.0, P(1.25));
  EXPECT_NEAR(std::abs(t2.t11 - 0.5), 0.0, 1e-15);
  EXPECT_EQ(t2.t01, t2.t10);
  double lp = 4.0 / (2.0 * std::sqrt(3.0));
  EXPECT_THROW(tmatrix(2.0, P(lp)), PoleError);
}

TEST(PointRes, WeylExamples) {
  EXPECT_NEAR(std::abs(weyl_m(1.0, P(1.25)) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(weyl_m(2.0, P(1.25)) + 4.0), 0.0, 1e-13);
  auto T = oracle::truncate(CouplingParams(2.0), 4096);
  EXPECT_NEAR(oracle::dense_resolvent_entry(T, 0, 0, 1.25).real(), -4.0, 1e-8);
  for (double a : {0.5, 1.3, 2.0})
    for (double y : {0.1, 1.0, 5.0}) {
      auto m = weyl_m(a, P(cplx(0.0, y)));
      EXPECT_NEAR(m.real(), 0.0, 1e-14);
      EXPECT_GT(m.imag(), 0.0);
    }
  EXPECT_THROW(weyl_m(2.0, P(-4.0 / (2.0 * std::sqrt(3.0)))), PoleError);
}

TEST(PointRes, WeylClosedFormAgreement) {
  testutil::Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    double a = rng.uniform(0.1, 4.0);
    auto pt = P(rng.off_cut());
    cplx alt = 2.0 / ((a * a - 2.0) * pt.z - a * a * pt.sqrt_val);
    EXPECT_LT(testutil::rel(weyl_m(a, pt), alt), 1e-11);
  }
}

TEST(PointRes, ResolventExamples) {
  testutil::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto pt = P(rng.off_cut());
    int n = rng.integer(0, 8), m = rng.integer(0, 8);
    EXPECT_LT(testutil::rel(resolvent_entry(1.0, n, m, pt), free_resolvent_entry(n, m, pt)), 1e-14);
  }
  auto pt = P(1.25);
  cplx w = pt.omega_val;
  cplx want = free_resolvent_entry(2, 1, pt) - 2.0 * 1.25 * std::pow(w, 4) / pt.sqrt_val;
  EXPECT_LT(testutil::rel(resolvent_entry(kS2, 2, 1, pt), want), 1e-13);

  auto T = oracle::truncate(CouplingParams(1.7), 4096);
  cplx z(0.5, 0.8);
  EXPECT_NEAR(std::abs(resolvent_entry(1.7, 4, 2, P(z)) - oracle::dense_resolvent_entry(T, 4, 2, z)), 0.0, 1e-8);
  EXPECT_EQ(resolvent_entry(1.7, 4, 2, P(z)), resolvent_entry(1.7, 2, 4, P(z)));
}

TEST(PointRes, ResolventColumnIdentity) {
  testutil::Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    double a = rng.uniform(0.2, 3.0);
    cplx z = rng.off_cut();
    int m = rng.integer(0, 5);
    auto pt = P(z);
    std::vector<cplx> g(52);
    for (int n = 0; n < 52; ++n) g[n] = resolvent_entry(a, n, m, pt);
    for (int n = 0; n <= 50; ++n) {
      cplx want = n == m ? 1.0 : 0.0;
      EXPECT_NEAR(std::abs(apply_row(a, g, n, z) - want), 0.0, 1e-10) << a << " " << z << " " << n;
    }
  }
}

TEST(PointRes, FirstResolventIdentity) {
  double a = 1.6;
  cplx z1(0.3, 0.9), z2(-1.4, 0.4);
  auto p1 = P(z1), p2 = P(z2);
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m) {
      cplx sum = 0.0;
      for (int k = 0; k < 400; ++k) sum += resolvent_entry(a, n, k, p1) * resolvent_entry(a, k, m, p2);
      cplx lhs = resolvent_entry(a, n, m, p1) - resolvent_entry(a, n, m, p2);
      EXPECT_NEAR(std::abs(lhs - (z1 - z2) * sum), 0.0, 1e-6);
    }
}

TEST(PointRes, TraceFormula) {
  for (double a : {0.6, 1.3, 2.5}) {
    for (cplx z : {cplx(1.8, 0.0), cplx(0.2, 0.7), cplx(-2.5, -0.3)}) {
      auto pt = P(z);
      cplx sum = 0.0;
      for (int n = 0; n < 100000; ++n) {
        cplx term = resolvent_entry(a, n, n, pt) - free_resolvent_entry(n, n, pt);
        sum += term;
        if (std::abs(term) < 1e-14) break;
      }
      cplx d = pert_det(a, pt);
      EXPECT_NEAR(std::abs(sum + pert_det_derivative(a, pt) / d), 0.0, 1e-6);
      EXPECT_LT(testutil::rel(trace_resolvent_difference(a, pt), sum), 1e-9);
    }
    double x = 1.8;
    EXPECT_NEAR(pert_det_derivative_complex_step(a, x), pert_det_derivative(a, P(x)).real(), 1e-12);
  }
}
