#include "hardedge/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardedge {

namespace {

/// Trailing coefficients below this relative threshold (against the largest
/// coefficient magnitude) are treated as zero when fixing the degree.
constexpr double kTrimRel = 1e-300;

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  double big = 0.0;
  for (double c : coeffs_) big = std::max(big, std::abs(c));
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= kTrimRel * big)
    coeffs_.pop_back();
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Complex RealPolynomial::operator()(const Complex& x) const {
  Complex acc(0.0, 0.0);
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RealPolynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return RealPolynomial(std::move(d));
}

std::vector<Complex> complex_roots(const RealPolynomial& p) {
  const auto& c = p.coeffs();
  const int d = p.degree();
  if (d == 0) return {};
  // Companion matrix of the monic normalization, in upper-Hessenberg form.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  const double lead = c[d];
  for (int k = 0; k < d; ++k) comp(k, d - 1) = -c[k] / lead;
  for (int k = 1; k < d; ++k) comp(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw EvaluationError("complex_roots: companion eigensolver failed");

  // Newton polish against the original coefficients: the companion
  // eigenvalues carry O(cond) error, a couple of Newton steps recovers
  // limiting accuracy for simple roots.
  RealPolynomial dp = p.derivative();
  std::vector<Complex> roots(d);
  for (int k = 0; k < d; ++k) {
    Complex z(es.eigenvalues()(k).real(), es.eigenvalues()(k).imag());
    for (int it = 0; it < 4; ++it) {
      Complex f = p(z), fp = dp(z);
      if (std::abs(fp) == 0.0) break;
      Complex step = f / fp;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      // Reject wild steps (near-multiple roots): polish must not move a
      // root far from its companion estimate.
      if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;
      z -= step;
    }
    roots[k] = z;
  }
  return roots;
}

std::vector<double> real_roots(const RealPolynomial& p, bool known_real) {
  std::vector<Complex> rz = complex_roots(p);
  std::vector<double> out;
  out.reserve(rz.size());
  for (const Complex& z : rz) {
    if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real()))) {
      if (known_real)
        throw RealRootsViolation(
            "real_roots: root with non-negligible imaginary part in a "
            "polynomial asserted to have real roots");
      continue;  // genuinely complex root of a general polynomial
    }
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hardedge
