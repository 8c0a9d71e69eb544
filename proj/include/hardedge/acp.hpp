#pragma once

/// Average characteristic polynomials (ACPs) and their Gaussian heat flow.
///
/// The expected characteristic polynomial of a Wishart-type matrix is a
/// rescaled Laguerre polynomial; adding an independent Gaussian (GUE)
/// perturbation of strength eps multiplies its coefficient sequence by the
/// backward heat semigroup, which preserves real-rootedness
/// (Hermite-Poulain) and spreads the roots apart.

#include <vector>

#include "hardedge/polynomial.hpp"

namespace hardedge {

/// Monic expected characteristic polynomial of the n x n Laguerre/Wishart
/// ensemble with parameter alpha, in the macroscopic variable x (matrix
/// scaled so the spectrum fills [0, ~4]).  Three-term recurrence
///   p_{j+1}(x) = (x - (2j + alpha + 1)/n) p_j(x) - j (j + alpha)/n^2 p_{j-1}(x),
/// accumulated in extended precision.
RealPolynomial laguerre_acp(int n, double alpha);

/// Backward heat flow of an ACP under a Gaussian perturbation of strength
/// eps at matrix size n:
///   P(x) = sum_m (-eps^2/(2n))^m p^{(2m)}(x) / m!
/// computed coefficient-wise in extended precision.  eps = 0 returns p.
RealPolynomial acp_heat_flow(const RealPolynomial& p, int n, double eps);

/// All n roots of acp_heat_flow(laguerre_acp(n, alpha), n, eps), ascending.
///
/// Roots are obtained without ever forming monomial coefficients of high
/// degree: the unflowed roots are eigenvalues of the Jacobi matrix of the
/// recurrence, then Newton continuation in the flow time tracks each root,
/// evaluating the flowed polynomial through the derivative recurrence
///   p_{j+1}^{(r)} = (x - a_j) p_j^{(r)} + r p_j^{(r-1)} - b_j p_{j-1}^{(r)}.
/// The step count doubles (up to a cap) whenever Newton fails to converge
/// or the root ordering degenerates; past the cap EvaluationError is
/// raised.
std::vector<double> heat_flowed_laguerre_roots(int n, double alpha,
                                               double eps);

}  // namespace hardedge
