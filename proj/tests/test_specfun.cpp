// Unit tests for the special-function layer: complex log-gamma, Bessel J,
// Airy Ai, and Wright's generalized Bessel function.
//
// Reference values in reference_values.hpp are frozen from an independent
// multiple-precision oracle (tests/oracle/gen_specfun_refs.py).
#include <cmath>
#include <random>

#include "doctest.h"
#include "hardedge/specfun.hpp"
#include "reference_values.hpp"

using namespace hardedge;
namespace ref = hardedge::testref;

namespace {

// |a - b| <= tol * (1 + |b|)
void check_close_c(Complex a, Complex b, double tol) {
  CAPTURE(a.real());
  CAPTURE(a.imag());
  CAPTURE(b.real());
  CAPTURE(b.imag());
  CHECK(std::abs(a - b) <= tol * (1.0 + std::abs(b)));
}

void check_close_d(double a, double b, double tol) {
  CAPTURE(a);
  CAPTURE(b);
  CHECK(std::abs(a - b) <= tol * (1.0 + std::abs(b)));
}

}  // namespace

TEST_CASE("log_gamma matches the multiple-precision oracle") {
  // Real parts compared directly; imaginary parts modulo 2 pi (the branch
  // convention of the oracle need not match the recurrence-exact branch
  // used here, and every consumer exponentiates differences).
  auto check = [](Complex z, Complex want) {
    Complex got = log_gamma(z);
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(std::abs(got.real() - want.real()) <= 5e-13 * (1.0 + std::abs(want.real())));
    double dphi = std::remainder(got.imag() - want.imag(), 2.0 * kPi);
    CHECK(std::abs(dphi) <= 5e-13 * (1.0 + std::abs(want.imag())));
  };
  check({3.0, 4.0}, ref::kLogGamma_3_4i);
  check({-2.5, 1.0}, ref::kLogGamma_m2p5_1i);
  check({0.25, -0.75}, ref::kLogGamma_0p25_m0p75i);
  check({-0.5, 40.0}, ref::kLogGamma_m0p5_40i);
  check({12.0, 0.0}, ref::kLogGamma_12_0i);
}

TEST_CASE("log_gamma recurrence Gamma(z+1) = z Gamma(z) on the strip") {
  std::mt19937 gen(20240517u);
  std::uniform_real_distribution<double> ure(-10.0, 10.0);
  std::uniform_real_distribution<double> uim(-40.0, 40.0);
  int tested = 0;
  while (tested < 100) {
    Complex z(ure(gen), uim(gen));
    // Stay away from the poles at 0, -1, -2, ... and from the positive
    // integers where z itself is fine but z -> 0 cancellation in the check
    // denominator could manufacture fake error.
    if (std::abs(z.imag()) < 0.5 &&
        std::abs(z.real() - std::round(z.real())) < 0.05)
      continue;
    ++tested;
    Complex ratio = std::exp(log_gamma(z + 1.0) - log_gamma(z));
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(std::abs(ratio - z) <= 1e-10 * std::abs(z));
  }
}

TEST_CASE("log_gamma reflection formula on the strip") {
  std::mt19937 gen(77u);
  std::uniform_real_distribution<double> ure(-10.0, 10.0);
  std::uniform_real_distribution<double> uim(-40.0, 40.0);
  int tested = 0;
  while (tested < 100) {
    Complex z(ure(gen), uim(gen));
    if (std::abs(z.imag()) < 0.5 &&
        std::abs(z.real() - std::round(z.real())) < 0.05)
      continue;
    ++tested;
    // Gamma(z) Gamma(1-z) sin(pi z) / pi = 1, assembled in log space.
    Complex lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z) + log_sin_pi(z) -
                           std::log(kPi));
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(std::abs(lhs - 1.0) <= 1e-9);
  }
}

TEST_CASE("log_gamma agrees with std::lgamma on positive reals") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 3.7, 10.2, 25.0, 96.3, 171.0}) {
    double got = log_gamma(Complex(x, 0.0)).real();
    double want = std::lgamma(x);
    CAPTURE(x);
    CHECK(std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("|Gamma(1/2 + 30i)| decays like sqrt(2 pi) e^{-15 pi}") {
  double got = std::exp(log_gamma(Complex(0.5, 30.0)).real());
  double want = std::sqrt(2.0 * kPi) * std::exp(-15.0 * kPi);
  CHECK(std::abs(got - want) <= 0.01 * want);
}

TEST_CASE("bessel_j matches the oracle across both branches") {
  struct Row {
    double order, x, j, jp;
  };
  const Row rows[] = {
      {0.0, 0.5, ref::kJ_0_0p5, ref::kJp_0_0p5},
      {0.0, 4.0, ref::kJ_0_4, ref::kJp_0_4},
      {0.0, 11.0, ref::kJ_0_11, ref::kJp_0_11},
      {0.0, 13.0, ref::kJ_0_13, ref::kJp_0_13},
      {0.0, 40.0, ref::kJ_0_40, ref::kJp_0_40},
      {0.0, 95.0, ref::kJ_0_95, ref::kJp_0_95},
      {1.0, 0.5, ref::kJ_1_0p5, ref::kJp_1_0p5},
      {1.0, 4.0, ref::kJ_1_4, ref::kJp_1_4},
      {1.0, 11.0, ref::kJ_1_11, ref::kJp_1_11},
      {1.0, 13.0, ref::kJ_1_13, ref::kJp_1_13},
      {1.0, 40.0, ref::kJ_1_40, ref::kJp_1_40},
      {1.0, 95.0, ref::kJ_1_95, ref::kJp_1_95},
      {0.5, 0.5, ref::kJ_half_0p5, ref::kJp_half_0p5},
      {0.5, 4.0, ref::kJ_half_4, ref::kJp_half_4},
      {0.5, 11.0, ref::kJ_half_11, ref::kJp_half_11},
      {0.5, 13.0, ref::kJ_half_13, ref::kJp_half_13},
      {0.5, 40.0, ref::kJ_half_40, ref::kJp_half_40},
      {0.5, 95.0, ref::kJ_half_95, ref::kJp_half_95},
      {2.5, 0.5, ref::kJ_2p5_0p5, ref::kJp_2p5_0p5},
      {2.5, 4.0, ref::kJ_2p5_4, ref::kJp_2p5_4},
      {2.5, 11.0, ref::kJ_2p5_11, ref::kJp_2p5_11},
      {2.5, 13.0, ref::kJ_2p5_13, ref::kJp_2p5_13},
      {2.5, 40.0, ref::kJ_2p5_40, ref::kJp_2p5_40},
      {2.5, 95.0, ref::kJ_2p5_95, ref::kJp_2p5_95},
  };
  for (const Row& r : rows) {
    CAPTURE(r.order);
    CAPTURE(r.x);
    JPair jp = bessel_j(r.order, Complex(r.x, 0.0));
    CHECK(std::abs(jp.value.imag()) <= 1e-14);
    check_close_d(jp.value.real(), r.j, 2e-10);
    check_close_d(jp.deriv.real(), r.jp, 2e-10);
  }
}

TEST_CASE("bessel_j at complex arguments") {
  JPair a = bessel_j(0.0, Complex(2.0, 3.0));
  check_close_c(a.value, ref::kJ_0_2_3i, 1e-10);
  check_close_c(a.deriv, ref::kJp_0_2_3i, 1e-10);
  JPair b = bessel_j(1.0, Complex(-1.0, 5.0));
  check_close_c(b.value, ref::kJ_1_m1_5i, 1e-10);
}

TEST_CASE("bessel_j first zero of J0") {
  // Newton refinement starting at 2.4 must land on the tabulated zero.
  double x = 2.4;
  for (int i = 0; i < 60; ++i) {
    JPair jp = bessel_j(0.0, Complex(x, 0.0));
    double step = jp.value.real() / jp.deriv.real();
    x -= step;
    if (std::abs(step) < 1e-15) break;
  }
  CHECK(std::abs(x - 2.404825557695773) < 1e-9);
}

TEST_CASE("bessel_j satisfies the Bessel differential equation") {
  // x^2 J'' + x J' + (x^2 - nu^2) J = 0 with J'' assembled from the
  // recurrence J''_nu = -(nu/x^2) J + (nu/x) J' - J'_{nu+1},
  // J'_{nu+1} = J_nu - ((nu+1)/x) J_{nu+1},  J_{nu+1} = (nu/x) J_nu - J'_nu.
  for (double nu : {0.0, 1.0, 0.5, -0.5, 2.5}) {
    for (double x : {0.3, 1.0, 2.5, 5.0, 9.0, 11.7, 14.0, 30.0, 60.0}) {
      JPair jn = bessel_j(nu, Complex(x, 0.0));
      double J = jn.value.real(), Jp = jn.deriv.real();
      double Jnp1 = (nu / x) * J - Jp;
      double Jpnp1 = J - ((nu + 1.0) / x) * Jnp1;
      double Jpp = -(nu / (x * x)) * J + (nu / x) * Jp - Jpnp1;
      double residual = x * x * Jpp + x * Jp + (x * x - nu * nu) * J;
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(std::abs(residual) <= 1e-8 * (1.0 + x * x));
    }
  }
}

TEST_CASE("bessel_j continuity across the series/asymptotic switch") {
  // The branch switch for order 0 sits at |x| = 12.
  for (double nu : {0.0, 0.5}) {
    double s = 12.0 + 2.0 * std::max(nu, 0.0);
    JPair lo = bessel_j(nu, Complex(s - 1e-9, 0.0));
    JPair hi = bessel_j(nu, Complex(s + 1e-9, 0.0));
    CHECK(std::abs(lo.value - hi.value) <= 1e-9);
    CHECK(std::abs(lo.deriv - hi.deriv) <= 1e-9);
  }
}

TEST_CASE("airy matches the oracle on the real line") {
  struct Row {
    double x, ai, aip;
  };
  const Row rows[] = {
      {-12.0, ref::kAi_m12, ref::kAip_m12}, {-7.2, ref::kAi_m7p2, ref::kAip_m7p2},
      {-3.0, ref::kAi_m3, ref::kAip_m3},    {-1.0, ref::kAi_m1, ref::kAip_m1},
      {0.0, ref::kAi_0, ref::kAip_0},       {1.0, ref::kAi_1, ref::kAip_1},
      {2.1, ref::kAi_2p1, ref::kAip_2p1},   {3.0, ref::kAi_3, ref::kAip_3},
      {6.0, ref::kAi_6, ref::kAip_6},       {9.0, ref::kAi_9, ref::kAip_9},
      {12.0, ref::kAi_12, ref::kAip_12},
  };
  for (const Row& r : rows) {
    CAPTURE(r.x);
    AiryPair ap = airy(r.x);
    // Relative comparison: the decaying tail spans 13 orders of magnitude.
    CHECK(std::abs(ap.value - r.ai) <= 1e-10 * std::abs(r.ai) + 1e-300);
    CHECK(std::abs(ap.deriv - r.aip) <= 1e-10 * std::abs(r.aip) + 1e-300);
  }
}

TEST_CASE("airy at complex arguments (all dispatch sectors)") {
  auto chk = [](Complex z, Complex ai, double tol) {
    CAPTURE(z.real());
    CAPTURE(z.imag());
    AiryPairC ap = airy(z);
    CHECK(std::abs(ap.value - ai) <= tol * std::abs(ai));
  };
  chk({2.0, 2.0}, ref::kAi_2_2i, 1e-10);          // Maclaurin sector
  chk({0.0, 6.0}, ref::kAi_0_6i, 1e-9);           // saddle sector
  chk({-2.0, 8.0}, ref::kAi_m2_8i, 1e-9);         // saddle, growing side
  chk({-5.0, 1.0}, ref::kAi_m5_1i, 1e-9);         // connection formula
  AiryPairC ap = airy(Complex(-5.0, 1.0));
  CHECK(std::abs(ap.deriv - ref::kAip_m5_1i) <= 1e-9 * std::abs(ref::kAip_m5_1i));
}

TEST_CASE("airy satisfies Ai'' = x Ai (finite-difference residual)") {
  const double h = 1e-5;
  for (double x : {-6.9, -3.3, -1.0, 0.0, 0.7, 2.0, 2.7, 4.0, 8.0, 9.2, 10.5}) {
    double aipp = (airy(x + h).deriv - airy(x - h).deriv) / (2.0 * h);
    double residual = aipp - x * airy(x).value;
    CAPTURE(x);
    CHECK(std::abs(residual) <= 1e-8 * (1.0 + std::abs(x * airy(x).value)));
  }
}

TEST_CASE("airy positive and decreasing on [0, 10]") {
  double prev = airy(0.0).value;
  CHECK(prev > 0.0);
  for (int i = 1; i <= 100; ++i) {
    double v = airy(0.1 * i).value;
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("airy continuity across branch switches") {
  for (double s : {-7.4, 2.3, 9.5}) {
    AiryPair lo = airy(s - 1e-9);
    AiryPair hi = airy(s + 1e-9);
    CHECK(std::abs(lo.value - hi.value) <= 1e-6 * std::abs(hi.value) + 1e-15);
    CHECK(std::abs(lo.deriv - hi.deriv) <= 1e-6 * std::abs(hi.deriv) + 1e-15);
  }
}

TEST_CASE("wright_bessel oracle values") {
  check_close_d(wright_bessel(2.0, 1.0, 3.0), ref::kWright_2_1_3, 1e-12);
  check_close_d(wright_bessel(1.5, 0.5, 2.0), ref::kWright_1p5_0p5_2, 1e-12);
  check_close_d(wright_bessel(2.0, 3.0, 10.0), ref::kWright_2_3_10, 1e-12);
  check_close_d(wright_bessel(0.75, 0.25, 1.0), ref::kWright_0p75_0p25_1, 1e-12);
}

TEST_CASE("wright_bessel series identities") {
  // J_{1,1}(0) = 1/Gamma(1) = 1.
  CHECK(wright_bessel(1.0, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  // (x/2)^alpha J_{alpha+1,1}(x^2/4) = J_alpha(x), alpha = 0, x = 1.7.
  {
    double x = 1.7;
    double lhs = wright_bessel(1.0, 1.0, x * x / 4.0);
    double rhs = bessel_j(0.0, Complex(x, 0.0)).value.real();
    check_close_d(lhs, rhs, 1e-12);
  }
  // Same identity at alpha = 1, x = 2: J_{2,1}(1) = J_1(2).
  {
    double lhs = wright_bessel(2.0, 1.0, 1.0);
    double rhs = bessel_j(1.0, Complex(2.0, 0.0)).value.real();
    check_close_d(lhs, rhs, 1e-12);
  }
}

TEST_CASE("wright_bessel domain handling") {
  // b <= 0 diverges and must be rejected.
  CHECK_THROWS_AS(wright_bessel(1.0, 0.0, 1.0), UnsupportedConfiguration);
  CHECK_THROWS_AS(wright_bessel(1.0, -0.5, 1.0), UnsupportedConfiguration);
  // Negative first parameter is fine: terms whose Gamma argument is a
  // nonpositive integer are skipped. Check against a direct mini-series.
  double a = -0.5, b = 1.0, x = 0.3;
  long double want = 0.0L;
  long double xp = 1.0L;
  long double fact = 1.0L;
  for (int j = 0; j <= 25; ++j) {
    double garg = a + j * b;
    if (!(garg <= 0.0 && garg == std::floor(garg)))
      want += (j % 2 ? -1.0L : 1.0L) * xp / (fact * (long double)std::tgamma(garg));
    xp *= x;
    fact *= (j + 1);
  }
  check_close_d(wright_bessel(a, b, x), (double)want, 1e-12);
  // a on a pole at j = 0: the j = 0 term vanishes, series still converges.
  double v = wright_bessel(0.0, 1.0, 0.5);
  long double want2 = 0.0L;
  xp = 0.5L;
  fact = 1.0L;
  for (int j = 1; j <= 25; ++j) {
    want2 += (j % 2 ? -1.0L : 1.0L) * xp / (fact * (long double)std::tgamma((double)j));
    xp *= 0.5L;
    fact *= (j + 1);
  }
  check_close_d(v, (double)want2, 1e-12);
}
