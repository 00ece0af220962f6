#include <gtest/gtest.h>

#include <numbers>

#include "gcheb/jost.hpp"
#include "gcheb/oracle.hpp"
#include "gcheb/pointres.hpp"
#include "gcheb/spectral.hpp"
#include "test_util.hpp"

using namespace gcheb;
using testutil::cplx;

namespace {
auto P(cplx z) { return EnergyPoint::at(z); }

JacobiCoeffs random_coeffs(testutil::Rng& rng, std::size_t N) {
  std::vector<double> a(N), b(N);
  for (auto& v : a) v = rng.uniform(0.1, 1.5);
  for (auto& v : b) v = rng.uniform(-0.8, 0.8);
  return JacobiCoeffs(a, b);
}
}  // namespace

TEST(Jost, CoeffValidation) {
  EXPECT_THROW(JacobiCoeffs({0.5, -0.1}, {0.0, 0.0}), DomainError);
  EXPECT_THROW(JacobiCoeffs({0.5}, {0.0, 0.0}), DomainError);
  JacobiCoeffs c({0.3}, {0.2});
  EXPECT_EQ(c.a(-1), 1.0);
  EXPECT_EQ(c.a(5), 0.5);
  EXPECT_EQ(c.b(5), 0.0);
}

TEST(Jost, FreeSolutionIsPowers) {
  JacobiCoeffs free;
  auto pt = P(cplx(1.3, 0.4));
  auto u = jost_solution(free, pt, 0);
  for (long n = u.first; n <= u.last(); ++n) EXPECT_LT(testutil::rel(u.at(n), std::pow(pt.omega_val, n)), 1e-14);
  auto far = jost_solution(JacobiCoeffs({0.7, 0.2}, {0.1, -0.3}), pt, 6);
  EXPECT_LT(testutil::rel(far.at(6), std::pow(pt.omega_val, 6)), 1e-14);
  EXPECT_NEAR(std::abs(pert_det_general(free, pt) - 1.0), 0.0, 1e-14);
}

TEST(Jost, RankOneValues) {
  for (double a : {0.5, 2.0, 3.3}) {
    auto c = JacobiCoeffs::from_coupling(CouplingParams(a));
    auto pt = P(cplx(0.4, 0.9));
    auto u = jost_solution(c, pt);
    EXPECT_LT(testutil::rel(u.at(0), 1.0 / a), 1e-13);
    EXPECT_LT(testutil::rel(u.at(-1), ((2.0 * pt.z / a) - a * pt.omega_val) / 2.0), 1e-13);
    EXPECT_LT(testutil::rel(4.0 * pt.omega_val * (a / 2) * jost_function(c, pt), pert_det(a, pt)), 1e-13);
  }
}

TEST(Jost, SolvesEigenEquation) {
  testutil::Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    auto c = random_coeffs(rng, 3);
    auto u = jost_solution(c, P(2.0), -1);
    std::vector<cplx> v;
    for (long n = -1; n <= 8; ++n) v.push_back(n <= u.last() ? u.at(n) : std::pow(omega(2.0), n));
    auto at = [&](long n) { return v[static_cast<std::size_t>(n + 1)]; };
    for (long n = 0; n <= 7; ++n) {
      cplx lhs = c.a(n - 1) * at(n - 1) + c.b(n) * at(n) + c.a(n) * at(n + 1);
      EXPECT_LT(std::abs(lhs - 2.0 * at(n)), 1e-12 * std::max(1.0, std::abs(at(n))));
    }
  }
}

TEST(Jost, PertDetExamples) {
  auto c = JacobiCoeffs::from_coupling(CouplingParams(2.0));
  EXPECT_NEAR(std::abs(pert_det_general(c, P(1.25)) - 0.25), 0.0, 1e-14);
  CouplingParams p(1.4, 0.6);
  auto cb = JacobiCoeffs::from_coupling(p);
  auto pt = P(cplx(-0.3, 0.5));
  cplx w = pt.omega_val;
  EXPECT_LT(testutil::rel(pert_det_general(cb, pt), 1.0 + (1.0 - 1.96) * w * w - 0.6 * w), 1e-13);
  EXPECT_LT(testutil::rel(pert_det_general(cb, pt), pert_det(p, pt)), 1e-13);
}

TEST(Jost, RankOneMatchesPointres) {
  testutil::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    double a = rng.uniform(0.1, 4.0);
    auto pt = P(rng.off_cut());
    EXPECT_LT(testutil::rel(pert_det_general(JacobiCoeffs::from_coupling(CouplingParams(a)), pt), pert_det(a, pt)), 1e-12);
  }
}

TEST(Jost, QuarticCoefficients) {
  testutil::Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    auto c = random_coeffs(rng, 2);
    double al0 = 1 - 4 * c.a(0) * c.a(0), al1 = 1 - 4 * c.a(1) * c.a(1);
    double b0 = c.b(0), b1 = c.b(1);
    std::vector<double> want = {1.0, -2 * (b0 + b1), al1 + al0 + 4 * b0 * b1, -2 * (al1 * b0 + b1), al1};
    auto L = det_polynomial(c);
    ASSERT_EQ(L.degree_bound(), 4u);
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_NEAR(std::abs(L.coeff(k) - want[k]), 0.0, 1e-13) << k;
  }
}

TEST(Jost, DegreeBound) {
  testutil::Rng rng(24);
  for (std::size_t N = 1; N <= 5; ++N)
    for (int t = 0; t < 100; ++t) {
      auto c = random_coeffs(rng, N);
      auto L = det_polynomial(c);
      EXPECT_NEAR(std::abs(L.coeff(0) - 1.0), 0.0, 1e-13);
      double lead = 1 - 4 * c.a(long(N) - 1) * c.a(long(N) - 1);
      EXPECT_NEAR(std::abs(L.coeff(2 * N) - lead), 0.0, 1e-12);
      EXPECT_LT(L.coeff(2 * N).real(), 1.0);
      for (std::size_t k = 0; k <= 2 * N; ++k) EXPECT_LT(std::abs(L.coeff(k).imag()), 1e-12);
    }
}

TEST(Jost, RegularSolution) {
  JacobiCoeffs free;
  for (double x : {-0.6, 0.2, 1.3}) {
    auto phi = regular_solution<double>(free, x, 10);
    double u0 = 1, u1 = 2 * x;
    EXPECT_NEAR(phi[1], u1, 1e-14);
    for (int n = 2; n <= 10; ++n) {
      double u2 = 2 * x * u1 - u0;
      EXPECT_NEAR(phi[n], u2, 1e-11 * std::max(1.0, std::abs(u2)));
      u0 = u1;
      u1 = u2;
    }
  }
  auto c = JacobiCoeffs::from_coupling(CouplingParams(1.7));
  cplx z(0.3, -0.6);
  auto phi = regular_solution<cplx>(c, z, 25);
  auto ch = eval_recurrence(CouplingParams(1.7), z, 25).values;
  for (int n = 0; n <= 25; ++n) EXPECT_LT(testutil::rel(phi[n], ch[n]), 1e-12);

  testutil::Rng rng(25);
  auto r = random_coeffs(rng, 4);
  auto f = regular_solution<cplx>(r, z, 12);
  for (long n = 0; n < 12; ++n) {
    cplx prev = n == 0 ? cplx(0.0) : f[n - 1];
    cplx lhs = r.a(n - 1) * prev + r.b(n) * f[n] + r.a(n) * f[n + 1];
    EXPECT_LT(std::abs(lhs - z * f[n]), 1e-12 * std::max(1.0, std::abs(f[n])));
  }
}

TEST(Jost, ResolventGeneral) {
  EXPECT_NEAR(std::abs(resolvent_entry_general(JacobiCoeffs(), 0, 0, P(1.25)) + 1.0), 0.0, 1e-14);
  testutil::Rng rng(26);
  for (int i = 0; i < 200; ++i) {
    double a = rng.uniform(0.2, 3.0);
    auto pt = P(rng.off_cut());
    int n = rng.integer(0, 10), m = rng.integer(0, 10);
    auto c = JacobiCoeffs::from_coupling(CouplingParams(a));
    EXPECT_LT(testutil::rel(resolvent_entry_general(c, n, m, pt), resolvent_entry(a, n, m, pt)), 1e-10);
    EXPECT_EQ(resolvent_entry_general(c, n, m, pt), resolvent_entry_general(c, m, n, pt));
  }
  auto c2 = random_coeffs(rng, 2);
  auto T = oracle::truncate(c2, 4096);
  cplx z(0.4, 0.7);
  for (int n = 0; n < 5; ++n)
    for (int m = 0; m < 5; ++m)
      EXPECT_NEAR(std::abs(resolvent_entry_general(c2, n, m, P(z)) - oracle::dense_resolvent_entry(T, n, m, z)), 0.0, 1e-8);
}

TEST(Jost, ZerosAreEigenvalues) {
  for (double a : {1.6, 2.0, 3.0}) {
    auto c = JacobiCoeffs::from_coupling(CouplingParams(a));
    auto ev = eigenvalues(a);
    ASSERT_EQ(ev.size(), 2u);
    for (double e : ev) {
      // bisection on the real Jost function outside [-1, 1]
      double s = e > 0 ? 1.0 : -1.0;
      double lo = 1.0 + 1e-9, hi = 50.0;
      auto f = [&](double x) { return jost_function(c, P(s * x)).real(); };
      ASSERT_LT(f(lo) * f(hi), 0.0);
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
      }
      EXPECT_NEAR(s * lo, e, 1e-12);
    }
    EXPECT_THROW(resolvent_entry_general(c, 0, 0, P(ev[1])), PoleError);
  }
}

TEST(Jost, RecoverRank1) {
  auto c = recover_rank1(DetPolynomial{{1.0, 0.0, -1.0}});
  EXPECT_NEAR(c.a(0), std::numbers::sqrt2 / 2, 1e-15);
  EXPECT_NEAR(c.b(0), 0.0, 1e-15);
  auto f = recover_rank1(DetPolynomial{{1.0}});
  EXPECT_NEAR(f.a(0), 0.5, 1e-15);
  auto g = recover_rank1(DetPolynomial{{1.0, -0.5, 0.36}});
  EXPECT_NEAR(g.a(0), 0.4, 1e-15);
  EXPECT_NEAR(g.b(0), 0.25, 1e-15);
  EXPECT_THROW(recover_rank1(DetPolynomial{{1.0, 0.0, 1.0}}), AdmissibilityError);
  EXPECT_THROW(recover_rank1(DetPolynomial{{0.9, 0.0, 0.5}}), AdmissibilityError);
  EXPECT_THROW(recover_rank1(DetPolynomial{{1.0, 0.0, 0.5, 0.1}}), AdmissibilityError);
  EXPECT_THROW(recover_rank1(DetPolynomial{{1.0, cplx(0.0, 0.2), 0.5}}), AdmissibilityError);
}

TEST(Jost, RecoverRank2) {
  auto f = recover_rank2(DetPolynomial{{1.0}});
  EXPECT_NEAR(f.a(0), 0.5, 1e-15);
  EXPECT_NEAR(f.a(1), 0.5, 1e-15);
  EXPECT_NEAR(f.b(0), 0.0, 1e-15);
  EXPECT_NEAR(f.b(1), 0.0, 1e-15);
  EXPECT_THROW(recover_rank2(DetPolynomial{{1.0, 0.0, 0.0, 0.0, 2.0}}), AdmissibilityError);
  EXPECT_THROW(recover_rank2(DetPolynomial{{1.0, 0.0, 5.0, 0.0, 0.5}}), AdmissibilityError);
}

TEST(Jost, RoundTrips) {
  testutil::Rng rng(27);
  for (int t = 0; t < 200; ++t) {
    auto c1 = random_coeffs(rng, 1);
    auto r1 = recover_rank1(det_polynomial(c1));
    EXPECT_NEAR(r1.a(0), c1.a(0), 1e-13);
    EXPECT_NEAR(r1.b(0), c1.b(0), 1e-13);
    auto c2 = random_coeffs(rng, 2);
    auto L = det_polynomial(c2);
    auto r2 = recover_rank2(L);
    for (long n = 0; n < 2; ++n) {
      EXPECT_NEAR(r2.a(n), c2.a(n), 1e-12);
      EXPECT_NEAR(r2.b(n), c2.b(n), 1e-12);
    }
    auto L2 = det_polynomial(r2);
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_NEAR(std::abs(L2.coeff(k) - L.coeff(k)), 0.0, 1e-12);
  }
}
