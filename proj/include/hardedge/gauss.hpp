// Gaussian quadrature rules: Gauss-Legendre by Newton iteration on the
// three-term recurrence, Gauss-Jacobi by Golub-Welsch.
//
// This file is part of hardedge.  MIT License; see LICENSE.
#pragma once

#include <vector>

namespace hardedge {

struct QuadNode {
  double x;  ///< abscissa
  double w;  ///< weight
};

/// Gauss-Legendre rule on [-1, 1].
///
/// Nodes are the zeros of P_n found by Newton iteration from the Chebyshev
/// initial guess cos(pi (i - 1/4)/(n + 1/2)); weights w = 2 / ((1-x^2) P_n'^2).
/// Accurate to ~1e-15 for n up to several hundred.  Results are cached per n.
const std::vector<QuadNode>& gauss_legendre(int n);

/// Gauss-Jacobi rule on [-1, 1] for weight (1-x)^a (1+x)^b, a, b > -1.
///
/// Built by Golub-Welsch: eigen-decomposition of the symmetrized Jacobi
/// matrix of the monic recurrence; weights are mu0 * (first eigenvector
/// component)^2.
std::vector<QuadNode> gauss_jacobi(int n, double a, double b);

/// Map a rule on [-1,1] to [lo, hi] (affine; weights scaled by (hi-lo)/2).
std::vector<QuadNode> mapped_rule(const std::vector<QuadNode>& rule, double lo,
                                  double hi);

/// Generalized Gauss-Laguerre rule on [0, inf) for weight x^a e^{-x}, a > -1.
///
/// Golub-Welsch on the Laguerre Jacobi matrix (diagonal 2i+a+1, off-diagonal
/// sqrt(i(i+a))); mu0 = Gamma(a+1).
std::vector<QuadNode> gauss_laguerre(int n, double a);

}  // namespace hardedge
