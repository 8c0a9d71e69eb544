// Special functions: complex log-gamma, Bessel J with derivative, Airy
// Ai/Ai' (real and complex), and the Wright generalized Bessel function.
//
// Everything here is series/asymptotic/contour-free scalar code; the only
// dependencies are <cmath> and the shared quadrature rules.
//
// This file is part of hardedge.  MIT License; see LICENSE.
#pragma once

#include "hardedge/types.hpp"

namespace hardedge {

/// Principal-branch log-gamma, analytically continued so that
/// log_gamma(z+1) = log_gamma(z) + log(z) holds exactly (not mod 2 pi i).
///
/// Method: Lanczos rational approximation (N = 13, g = 6.0246800407767296,
/// max error ~1.2e-17 on the real axis; see Pugh's thesis / Godfrey's
/// coefficients) for Re z >= 1/2, reflection through log_sin_pi otherwise.
/// Real negative non-integer arguments are treated as the limit from the
/// upper half-plane.  Throws EvaluationError at nonpositive integers.
Complex log_gamma(Complex z);

/// Continuous branch of log(sin(pi z)) on each closed half-plane, chosen to
/// be compatible with the reflection formula used by log_gamma:
/// log_sin_pi(z+1) = log_sin_pi(z) - i pi for Im z > 0 (conjugate below).
Complex log_sin_pi(Complex z);

/// Sign of Gamma(x) for real non-pole x (alternates on the negative axis).
double gamma_sign(double x);

/// The entire series g_alpha(v) = sum_{j>=0} (-v)^j / (j! Gamma(j+alpha+1)),
/// i.e. the Wright function J_{alpha+1,1}(v).  Satisfies
/// J_alpha(w) = (w/2)^alpha g_alpha(w^2/4); the kernel module builds the
/// Bessel kernel out of g and its derivative combination G (below) because
/// these are entire where J itself carries the w^alpha branch factor.
/// Accumulated in extended precision; accurate to ~1e-13 relative for
/// |v| <= 45 (cancellation grows like exp(2 sqrt(|v|))).
Complex bessel_g(double alpha, Complex v);

/// g and G = alpha*g_alpha(v) - 2 v g_{alpha+1}(v) in one pass, together
/// with their derivatives g' = -g_{alpha+1} and
/// G' = -(alpha+2) g_{alpha+1} + 2 v g_{alpha+2}.
/// With w = 2 sqrt(v): J_alpha(w) = (w/2)^alpha g(v) and
/// w J_alpha'(w) = (w/2)^alpha G(v).
struct BesselGG {
  Complex g, G, gp, Gp;
};
BesselGG bessel_gG(double alpha, Complex v);

/// Bessel function of the first kind and its x-derivative, order > -1.
///
/// Power series (extended-precision accumulation) for
/// |x| <= 12 + 2*max(order,0); Hankel asymptotic expansion beyond
/// (NIST DLMF 10.17.3).  Works for complex x (principal branch of the
/// x^order prefactor); combined accuracy ~1e-11 absolute on [0, 100].
struct JPair {
  Complex value, deriv;
};
JPair bessel_j(double order, Complex x);

/// Airy function Ai and derivative on the real line.
///
/// Branches:
///  - Maclaurin series on [-7.4, 2.3] (no cancellation worse than ~4 digits);
///  - saddle-point quadrature on (2.3, 9.5]: with a = sqrt(x),
///      Ai(x) = e^{-2/3 x^{3/2}}/(2 pi) * Int e^{-a u^2} cos(u^3/3) du,
///    a positive-definite integrand that a fixed Gauss-Legendre rule nails
///    (the plain series loses ~8 digits by x = 6, which is why the textbook
///    series/asymptotic split cannot reach 1e-10 here);
///  - asymptotic expansions for x > 9.5 and x < -7.4 (NIST DLMF 9.7).
struct AiryPair {
  double value, deriv;
};
AiryPair airy(double x);

/// Airy Ai and Ai' for complex argument.
///
/// Same three branches as the real case, rotated: Maclaurin for |z| <= 4.5,
/// saddle quadrature for |arg z| <= 3 pi/4, asymptotics for large |z|.
/// The sector 3 pi/4 < |arg z| <= pi is reached through the connection
/// formula Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z), w = e^{2 pi i/3}.
struct AiryPairC {
  Complex value, deriv;
};
AiryPairC airy(Complex z);

/// Wright's generalized Bessel function
///   J_{a,b}(x) = sum_{j>=0} (-x)^j / (j! Gamma(a + j b)).
/// Terms whose Gamma argument lands on a nonpositive integer vanish.
/// Throws ConditioningError when the alternating series cancels more than
/// extended precision can absorb.
Complex wright_bessel(double a, double b, Complex x);
double wright_bessel(double a, double b, double x);

}  // namespace hardedge
