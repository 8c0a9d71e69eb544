// Unit tests for the Gaussian perturbation transforms: the limiting-kernel
// transform perturb_kernel (contour-shifted double Gaussian integral) and
// the finite-n PerturbedFiniteKernel (heat-flowed Laguerre basis against
// Gaussian-smoothed dual functions), plus the LaguerreEnsembleBasis.
//
// The deepest pins are independent of the implementation route:
//  - kPerturbBessel_s1_1_1 and kPerturbAiry_s0p5_0p5_0p5 were computed by
//    the multiple-precision oracle from the literal imaginary-axis form of
//    the transform, with no contour shift — agreement validates the shift.
//  - A brute-force separable oracle rebuilds the finite kernel at n = 3
//    from its definition (closed-form heat flow of degree <= 2 polynomials,
//    dense wide-window quadrature for the smoothed duals).
//  - sigma -> 0 and eps -> 0 recover the unperturbed kernels, and the
//    critical / super-critical rescalings recover the sigma = 1 Bessel
//    transform and the Airy density.
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "hardedge/freeconv.hpp"
#include "hardedge/kernels.hpp"
#include "hardedge/quadrature.hpp"
#include "hardedge/types.hpp"
#include "reference_values.hpp"

using namespace hardedge;
namespace ref = hardedge::testref;

namespace {

void check_rel(double got, double want, double tol) {
  CAPTURE(got);
  CAPTURE(want);
  CHECK(std::abs(got - want) <= tol * (1.0 + std::abs(want)));
}

double perturb_re(const PerturbedKernelSpec& spec, double x, double y) {
  const Complex v = perturb_kernel(spec, Complex(x), Complex(y));
  CHECK(std::abs(v.imag()) <= 1e-8 * (1.0 + std::abs(v.real())));
  return v.real();
}

}  // namespace

// ---------------------------------------------------------------------------
// Limiting-kernel Gaussian transform
// ---------------------------------------------------------------------------

TEST_CASE("perturb_kernel matches the imaginary-axis oracle (Bessel base)") {
  // The oracle evaluates the defining double integral along the imaginary
  // x-contour with no deformation, so this also certifies the legitimacy
  // of the implementation's shifted contour.
  const PerturbedKernelSpec spec{LimitingKernel::bessel(0.0), 1.0};
  check_rel(perturb_re(spec, 1.0, 1.0), ref::kPerturbBessel_s1_1_1, 1e-9);
}

TEST_CASE("perturb_kernel matches the imaginary-axis oracle (Airy base)") {
  const PerturbedKernelSpec spec{LimitingKernel::airy(), 0.5};
  check_rel(perturb_re(spec, 0.5, 0.5), ref::kPerturbAiry_s0p5_0p5_0p5, 1e-8);
}

TEST_CASE("perturb_kernel recovers the Bessel kernel as sigma -> 0") {
  // Sub-critical direction of the transition: the smoothed kernel at
  // (1, 2) approaches the hard-edge Bessel value, monotonically in sigma.
  double prev = 1e300;
  for (double sigma : {0.2, 0.1, 0.05}) {
    const PerturbedKernelSpec spec{LimitingKernel::bessel(0.0), sigma};
    const double got = perturb_re(spec, 1.0, 2.0);
    const double rel = std::abs(got - ref::kBesselK_a0_1_2) /
                       std::abs(ref::kBesselK_a0_1_2);
    CAPTURE(sigma);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 5e-6);  // observed 1.96e-6 at sigma = 0.05, O(sigma^2)
}

TEST_CASE("perturb_kernel recovers the Airy kernel as sigma -> 0") {
  const PerturbedKernelSpec spec{LimitingKernel::airy(), 0.1};
  check_rel(perturb_re(spec, 0.5, 0.5), ref::kAiryK_0p5_0p5diag, 2e-4);
}

TEST_CASE("perturb_kernel rejects bases and parameters it cannot handle") {
  SUBCASE("sigma must be positive") {
    const PerturbedKernelSpec spec{LimitingKernel::bessel(0.0), 0.0};
    CHECK_THROWS_AS((void)perturb_kernel(spec, Complex(1.0), Complex(1.0)),
                    std::invalid_argument);
  }
  SUBCASE("Muttalib-Borodin bases need Re x > 0 on the whole x-contour") {
    const PerturbedKernelSpec spec{LimitingKernel::muttalib_borodin(1.0, 2.0),
                                   0.1};
    CHECK_THROWS_AS((void)perturb_kernel(spec, Complex(-1.0), Complex(1.0)),
                    UnsupportedConfiguration);
  }
}

// ---------------------------------------------------------------------------
// LaguerreEnsembleBasis
// ---------------------------------------------------------------------------

TEST_CASE("LaguerreEnsembleBasis polynomials are orthonormal") {
  // weight t^alpha e^{-n t} on [0, inf); e^{-5 t} is below e^{-60} past
  // t = 12, far under the 1e-9 assertion.
  const int n = 5;
  const double alpha = 1.0;
  const LaguerreEnsembleBasis basis(n, alpha);
  const std::vector<QuadNode>& rule = gauss_legendre(16);
  const int panels = 48;
  const double hi = 12.0;
  for (int j = 0; j < n; ++j) {
    for (int l = j; l < n; ++l) {
      double acc = 0.0;
      for (int p = 0; p < panels; ++p) {
        const double a = hi * p / panels, b = hi * (p + 1) / panels;
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (const QuadNode& nd : rule) {
          const double t = c + h * nd.x;
          acc += h * nd.w * basis.p(j)(t) * basis.p(l)(t) *
                 std::pow(t, alpha) * std::exp(-n * t);
        }
      }
      CAPTURE(j);
      CAPTURE(l);
      CHECK(std::abs(acc - (j == l ? 1.0 : 0.0)) <= 1e-9);
    }
  }
}

TEST_CASE("LaguerreEnsembleBasis q is the weighted polynomial") {
  const LaguerreEnsembleBasis basis(6, 0.5);
  std::vector<double> all;
  for (double t : {0.3, 1.1, 2.7}) {
    basis.q_all(t, all);
    REQUIRE(all.size() == 6);
    for (int j = 0; j < 6; ++j) {
      const double direct =
          basis.p(j)(t) * std::pow(t, 0.5) * std::exp(-6.0 * t);
      CHECK(std::abs(all[static_cast<size_t>(j)] - direct) <=
            1e-12 * (1.0 + std::abs(direct)));
      CHECK(basis.q(j, t) == all[static_cast<size_t>(j)]);
    }
  }
}

TEST_CASE("LaguerreEnsembleBasis validates its domain") {
  const LaguerreEnsembleBasis basis(4, -0.5);
  std::vector<double> buf;
  CHECK_THROWS_AS(basis.q_all(-0.1, buf), std::domain_error);
  CHECK_THROWS_AS(basis.q_all(0.0, buf), std::domain_error);  // t^alpha blows up
  CHECK_THROWS_AS((void)basis.q(4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)basis.q(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LaguerreEnsembleBasis(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(LaguerreEnsembleBasis(5, -1.0), std::domain_error);
}

// ---------------------------------------------------------------------------
// PerturbedFiniteKernel
// ---------------------------------------------------------------------------

TEST_CASE("PerturbedFiniteKernel matches a brute-force separable oracle") {
  // n = 3 is small enough to rebuild the definition literally:
  //   K(x, y) = sum_j (H p_j)(x) B_j(y),
  //   (H p)(x) = exp(-(w^2/2) d^2/dx^2) p(x)  (so x^2 -> x^2 - w^2),
  //   B_j(y)   = (1/(sqrt(2 pi) w)) int_0^inf p_j(t) e^{-n t}
  //              e^{-(y-t)^2/(2 w^2)} dt,      w = eps / sqrt(n),
  // with the heat flow applied to the degree <= 2 coefficient lists in
  // closed form and B_j by dense wide-window quadrature that shares none
  // of the production windowing or panel logic.
  const int n = 3;
  const double eps = 0.5;
  const LaguerreEnsembleBasis basis(n, 0.0);
  const PerturbedFiniteKernel kern(basis, eps);
  CHECK(kern.eps() == eps);
  const double w = eps / std::sqrt(3.0);

  const auto flowed = [&](int j, double x) {
    std::vector<double> c = basis.p(j).coeffs();
    if (c.size() >= 3) c[0] -= w * w * c[2];
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  };
  const auto b_dense = [&](int j, double y) {
    const double hi = y + 14.0 * w + 2.0;
    const std::vector<QuadNode>& rule = gauss_legendre(16);
    const int panels = 400;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double a = hi * p / panels, b = hi * (p + 1) / panels;
      const double c = 0.5 * (a + b), h = 0.5 * (b - a);
      for (const QuadNode& nd : rule) {
        const double t = c + h * nd.x;
        acc += h * nd.w * basis.p(j)(t) * std::exp(-3.0 * t) *
               std::exp(-(y - t) * (y - t) / (2.0 * w * w));
      }
    }
    return acc / (std::sqrt(2.0 * kPi) * w);
  };

  for (auto [x, y] : {std::pair<double, double>{0.8, 0.4},
                      std::pair<double, double>{2.0, 1.0}}) {
    double want = 0.0;
    for (int j = 0; j < n; ++j) want += flowed(j, x) * b_dense(j, y);
    CAPTURE(x);
    CAPTURE(y);
    check_rel(kern(x, y), want, 1e-8);
  }
}

TEST_CASE("perturb_finite_kernel is the one-shot form of the class") {
  const LaguerreEnsembleBasis basis(6, 0.5);
  const PerturbedFiniteKernel kern(basis, 0.3);
  CHECK(perturb_finite_kernel(basis, 0.3, 1.2, 0.9) == kern(1.2, 0.9));
}

TEST_CASE("PerturbedFiniteKernel recovers the unperturbed kernel as eps->0") {
  const LaguerreEnsembleBasis basis(8, 0.5);
  const PerturbedFiniteKernel kern(basis, 1e-3);
  check_rel(kern(1.0, 1.5), ref::kLueK_n8_a0p5_1_1p5, 1e-3);
}

TEST_CASE("critical rescaling approaches the sigma = 1 Bessel transform") {
  // On the critical curve 4 eps n^{3/2} = 1 the hard-edge rescaled finite
  // kernel converges to the Gaussian-perturbed Bessel kernel with
  // effective width 1: s = 4 n^2 maps eps/sqrt(n) to 1/s.
  double prev = 1e300;
  for (int n : {50, 100}) {
    const double eps = 1.0 / (4.0 * std::pow(n, 1.5));
    const double s = 4.0 * static_cast<double>(n) * n;
    const LaguerreEnsembleBasis basis(n, 0.0);
    const double got = perturb_finite_kernel(basis, eps, 1.0 / s, 1.0 / s) / s;
    const double rel =
        std::abs(got - ref::kPerturbBessel_s1_1_1) / ref::kPerturbBessel_s1_1_1;
    CAPTURE(n);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 2.5e-4);  // observed 1.10e-4 at n = 100, O(1/n)
}

TEST_CASE("super-critical diagonal approaches the Airy density") {
  // For eps = n^{-1/4} the left spectral edge detaches from the origin and
  // the kernel there is governed by the Airy density
  // Ai'(x)^2 - x Ai(x)^2; the free-convolution edge solver supplies the
  // centering a and the Airy scale c (both eps-dependent).
  const int n = 30;
  const double eps = std::pow(static_cast<double>(n), -0.25);
  const FreeConvEdges edges = solve_edges(mp_physical(1), eps);
  const double scale = edges.c_eps * std::pow(static_cast<double>(n), 2.0 / 3.0);
  const LaguerreEnsembleBasis basis(n, 0.0);
  const PerturbedFiniteKernel kern(basis, eps);
  const double x = 1.0;
  const double pt = edges.a_left - x / scale;
  const double got = kern(pt, pt) / scale;
  check_rel(got, ref::kAiryK_1_1diag, 0.09);  // observed 6.8e-2, O(n^{-1/3})
}

TEST_CASE("PerturbedFiniteKernel reports cancellation instead of noise") {
  // Deeper super-critical points need more cancellation than extended
  // precision holds at n = 120; the kernel must refuse rather than return
  // digits-exhausted values.
  const int n = 120;
  const double eps = std::pow(static_cast<double>(n), -0.25);
  const FreeConvEdges edges = solve_edges(mp_physical(1), eps);
  const double scale = edges.c_eps * std::pow(static_cast<double>(n), 2.0 / 3.0);
  const LaguerreEnsembleBasis basis(n, 0.0);
  const PerturbedFiniteKernel kern(basis, eps);
  const double pt = edges.a_left - 0.5 / scale;
  CHECK_THROWS_AS((void)kern(pt, pt), ConditioningError);
}

TEST_CASE("PerturbedFiniteKernel validates its parameters") {
  const LaguerreEnsembleBasis basis(4, 0.0);
  CHECK_THROWS_AS(PerturbedFiniteKernel(basis, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PerturbedFiniteKernel(basis, -0.1), std::invalid_argument);
}
