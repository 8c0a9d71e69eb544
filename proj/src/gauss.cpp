// This file is part of hardedge.  MIT License; see LICENSE.
#include "hardedge/gauss.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hardedge/types.hpp"

namespace hardedge {

namespace {

std::vector<QuadNode> build_gauss_legendre(int n) {
  std::vector<QuadNode> rule(n);
  // Symmetric rule: compute the upper half, mirror the rest.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th zero (descending order).
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
      double p0 = 1.0, p1 = x;
      for (int j = 1; j < n; ++j) {
        double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1).
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // One clean-up iteration after convergence, then stop.
        p0 = 1.0;
        p1 = x;
        for (int j = 1; j < n; ++j) {
          double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    rule[i].x = -x;  // ascending order
    rule[i].w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule[n - 1 - i].x = x;
    rule[n - 1 - i].w = rule[i].w;
  }
  return rule;
}

}  // namespace

const std::vector<QuadNode>& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<QuadNode>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre(n)).first;
  return it->second;
}

std::vector<QuadNode> gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (a <= -1.0 || b <= -1.0)
    throw std::invalid_argument("gauss_jacobi: weight exponents must be > -1");

  // Monic Jacobi recurrence coefficients (Gautschi, "Orthogonal Polynomials:
  // Computation and Approximation", r_jacobi).
  const double ab = a + b;
  Eigen::VectorXd alpha(n), beta(n);
  alpha(0) = (b - a) / (ab + 2.0);
  // mu0 = integral of the weight = 2^(a+b+1) B(a+1, b+1).
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  beta(0) = mu0;
  for (int k = 1; k < n; ++k) {
    double t = 2.0 * k + ab;
    alpha(k) = (b * b - a * a) / (t * (t + 2.0));
    if (k == 1)
      beta(k) = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    else
      beta(k) = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                (t * t * (t + 1.0) * (t - 1.0));
  }

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    J(k, k) = alpha(k);
    if (k + 1 < n) {
      double s = std::sqrt(beta(k + 1));
      J(k, k + 1) = s;
      J(k + 1, k) = s;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<QuadNode> rule(n);
  for (int k = 0; k < n; ++k) {
    rule[k].x = es.eigenvalues()(k);
    double v = es.eigenvectors()(0, k);
    rule[k].w = mu0 * v * v;
  }
  return rule;
}

std::vector<QuadNode> mapped_rule(const std::vector<QuadNode>& rule, double lo,
                                  double hi) {
  std::vector<QuadNode> out(rule.size());
  const double mid = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
  for (size_t i = 0; i < rule.size(); ++i) {
    out[i].x = mid + rad * rule[i].x;
    out[i].w = rad * rule[i].w;
  }
  return out;
}

std::vector<QuadNode> gauss_laguerre(int n, double a) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  if (a <= -1.0)
    throw std::invalid_argument("gauss_laguerre: weight exponent must be > -1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    J(k, k) = 2.0 * k + a + 1.0;
    if (k + 1 < n) {
      double s = std::sqrt((k + 1.0) * (k + 1.0 + a));
      J(k, k + 1) = s;
      J(k + 1, k) = s;
    }
  }
  const double mu0 = std::tgamma(a + 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<QuadNode> rule(n);
  for (int k = 0; k < n; ++k) {
    rule[k].x = es.eigenvalues()(k);
    double v = es.eigenvectors()(0, k);
    rule[k].w = mu0 * v * v;
  }
  return rule;
}

}  // namespace hardedge
