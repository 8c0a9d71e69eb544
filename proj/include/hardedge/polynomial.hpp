#pragma once

/// Dense real polynomials and root finding.
///
/// Polynomials are stored densely in the monomial basis with ascending
/// coefficients: p(x) = c[0] + c[1] x + ... + c[d] x^d.  This is adequate for
/// the moderate degrees used here (characteristic polynomials up to degree
/// ~60); callers needing orthogonal expansions should work with recurrences
/// directly.

#include <vector>

#include "hardedge/types.hpp"

namespace hardedge {

class RealPolynomial {
 public:
  RealPolynomial() : coeffs_{0.0} {}
  /// Ascending coefficients: coeffs[k] multiplies x^k.
  explicit RealPolynomial(std::vector<double> coeffs);

  /// Degree after trimming trailing (near-)zero coefficients.  The zero
  /// polynomial reports degree 0.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.back(); }

  double operator()(double x) const;
  Complex operator()(const Complex& x) const;

  RealPolynomial derivative() const;

 private:
  std::vector<double> coeffs_;
};

/// All roots of p via the companion-matrix eigenproblem, each polished by a
/// few Newton steps on the original coefficients.
///
/// When known_real is set the caller asserts every root is real (e.g. the
/// polynomial is a characteristic polynomial of a symmetric matrix, or a
/// heat-flowed orthogonal polynomial).  Any polished root with
/// |Im| > 1e-8 * (1 + |Re|) then raises RealRootsViolation; otherwise
/// imaginary parts are dropped and the sorted real roots are returned.
std::vector<double> real_roots(const RealPolynomial& p, bool known_real);

/// Roots without a reality assertion, unsorted, as complex numbers.
std::vector<Complex> complex_roots(const RealPolynomial& p);

}  // namespace hardedge
