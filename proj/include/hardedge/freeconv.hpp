#pragma once

/// Free additive convolution of hard-edge Marchenko-Pastur-type laws with a
/// semicircle of variance eps^2, via subordination.
///
/// The base laws have density
///   d mu(x) = (1/(2 pi)) h(x) sqrt((b - x)/x) dx   on [0, b],
/// with h a polynomial that is positive on [0, b].  Their Stieltjes
/// transforms G(z) = int d mu(x)/(z - x) are available in closed form
/// (principal branch of sqrt(1 - b/z)) and by Gauss-Jacobi quadrature; the
/// two must agree, which the test suite checks to 1e-9.
///
/// The convolved law mu ⊞ sc(eps) is accessed through the subordination
/// equation s + eps^2 G_mu(s) = z: its Stieltjes transform is G_mu(s_c(z)),
/// its support edges are critical values of s -> s + eps^2 G_mu(s), and its
/// density follows from boundary values just above the real axis.

#include <functional>
#include <vector>

#include "hardedge/polynomial.hpp"
#include "hardedge/types.hpp"

namespace hardedge {

/// Hard-edge law d mu = (1/(2 pi)) h(x) sqrt((b - x)/x) dx on [0, b].
struct MPLaw {
  RealPolynomial h;
  double b = 4.0;
};

/// A unit-mass law supported on [0, 1] plus the dilation factor carrying it
/// to the physical normalization (physical support [0, scale]).
struct ScaledMPLaw {
  MPLaw unit;
  double scale = 1.0;
};

/// The squared-singular-value limit law of a product of k independent
/// square Ginibre factors, in unit normalization on [0, 1].  k = 1 is the
/// Marchenko-Pastur law itself (scale 4, constant h).
ScaledMPLaw mp_from_k(int k);

/// The same law in physical normalization (mean fixed by the product
/// scaling), supported on [0, b] with b = mp_from_k(k).scale.
MPLaw mp_physical(int k);

/// Total mass int d mu (1 for the laws produced above).
double mp_mass(const MPLaw& law);

/// Distribution function of mu, smooth-substitution quadrature.
double mp_cdf(const MPLaw& law, double x);

struct StieltjesDerivs {
  Complex G;
  Complex G1;  // dG/dz
  Complex G2;  // d^2 G/dz^2
};

/// Closed-form Stieltjes transform.  Throws UnsupportedConfiguration when z
/// lies on the support [0, b] (boundary values are not defined there; use
/// z + i delta and let the caller take limits).
Complex mp_stieltjes(const MPLaw& law, const Complex& z);
StieltjesDerivs mp_stieltjes_derivs(const MPLaw& law, const Complex& z);

/// Quadrature route (Gauss-Jacobi with the endpoint exponents of the
/// weight), for cross-validation of the closed form.
Complex mp_stieltjes_quad(const MPLaw& law, const Complex& z, int nodes);
StieltjesDerivs mp_stieltjes_derivs_quad(const MPLaw& law, const Complex& z,
                                         int nodes);

/// Support data for mu ⊞ sc(eps).
struct FreeConvEdges {
  double u_left;   // subordination preimage of the left edge, u < 0
  double u_right;  // preimage of the right edge, u > b
  double a_left;   // left edge of the convolved support
  double b_right;  // right edge
  double c_eps;    // Airy scale at the left edge, eps^{-2} (|G''(u_left)|/2)^{-1/3}
};

/// Locate both support edges of mu ⊞ sc(eps): the critical points of
/// s -> s + eps^2 G(s) on the real axis outside [0, b], found by bracketed
/// bisection plus Newton polish on eps^2 (-G'(u)) = 1.
FreeConvEdges solve_edges(const MPLaw& law, double eps);

struct Subordination {
  Complex s;  // subordination point s_c(z), Im s > 0
  Complex G;  // G_{mu ⊞ sc(eps)}(z) = G_mu(s_c(z))
};

/// Solve s + eps^2 G_mu(s) = z for the branch with Im s > 0, by Newton
/// continuation from large |z| (where s ~ z).  Requires Im z > 0.  Throws
/// EvaluationError("continuation-step-too-large") if step halving cannot
/// rescue a failed Newton solve.
Subordination subordinate(const MPLaw& law, double eps, const Complex& z);

/// Density of mu ⊞ sc(eps) at x, by Richardson extrapolation of
/// (-1/pi) Im G(x + i delta) over delta in {1e-4, 1e-5}.
double freeconv_density(const MPLaw& law, double eps, double x);

/// Piecewise-linear distribution function of mu ⊞ sc(eps), built from the
/// density on a uniform grid over [a_left, b_right] (trapezoid cumulative,
/// negative clip, renormalized).
class FreeConvCdf {
 public:
  FreeConvCdf(const MPLaw& law, double eps, int grid_points = 801);
  double operator()(double x) const;
  double a_left() const { return xs_.front(); }
  double b_right() const { return xs_.back(); }

 private:
  std::vector<double> xs_, cum_;
};

/// Kolmogorov-Smirnov distance between the empirical law of `points` and
/// the distribution function `cdf`, accounting for both one-sided jumps at
/// every sample point.
double ks_distance(std::vector<double> points,
                   const std::function<double(double)>& cdf);

/// Distribution function of the semicircle law of the given radius
/// (radius 2 <=> unit variance), for sampler validation.
double semicircle_cdf(double x, double radius = 2.0);

}  // namespace hardedge
