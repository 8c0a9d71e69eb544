// Core scalar types and error taxonomy shared across the library.
//
// This file is part of hardedge, a library for hard-edge random matrix
// kernels and their Gaussian perturbations.  MIT License; see LICENSE.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace hardedge {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// A complex number represented as mantissa * exp(log_scale).
///
/// Used wherever products of Gamma functions, powers, and exponentials
/// overflow or underflow double precision long before the assembled result
/// does.  The mantissa is kept within a few orders of magnitude of 1 by
/// normalize(); log_scale absorbs the rest.
struct ScaledComplex {
  Complex mantissa{0.0, 0.0};
  double log_scale{0.0};

  ScaledComplex() = default;
  ScaledComplex(Complex m, double ls = 0.0) : mantissa(m), log_scale(ls) {}

  static ScaledComplex zero() { return ScaledComplex(Complex(0, 0), 0.0); }

  /// Build from a log-representation: value = exp(log_value).
  static ScaledComplex from_log(Complex log_value) {
    return ScaledComplex(std::polar(1.0, log_value.imag()), log_value.real());
  }

  bool is_zero() const { return mantissa == Complex(0, 0); }

  /// Pull the mantissa magnitude back toward 1, moving the excess into
  /// log_scale.  Cheap and idempotent.
  void normalize() {
    double a = std::abs(mantissa);
    if (a == 0.0) {
      log_scale = 0.0;
      return;
    }
    if (a > 1e-8 && a < 1e8) return;
    mantissa /= a;
    log_scale += std::log(a);
  }

  /// log(|value|); -inf for zero.
  double log_abs() const {
    double a = std::abs(mantissa);
    if (a == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(a) + log_scale;
  }

  /// Collapse to a plain complex.  Overflows to inf if log_scale is huge;
  /// callers that care should test log_abs() first.
  Complex to_complex() const { return mantissa * std::exp(log_scale); }

  ScaledComplex operator*(const ScaledComplex& o) const {
    ScaledComplex r(mantissa * o.mantissa, log_scale + o.log_scale);
    r.normalize();
    return r;
  }
  ScaledComplex operator*(double s) const {
    return ScaledComplex(mantissa * s, log_scale);
  }
  ScaledComplex operator*(Complex s) const {
    return ScaledComplex(mantissa * s, log_scale);
  }
  ScaledComplex operator/(const ScaledComplex& o) const {
    ScaledComplex r(mantissa / o.mantissa, log_scale - o.log_scale);
    r.normalize();
    return r;
  }

  /// Addition re-expresses both terms on the larger scale.
  ScaledComplex operator+(const ScaledComplex& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    double L = std::max(log_scale, o.log_scale);
    Complex m = mantissa * std::exp(log_scale - L) +
                o.mantissa * std::exp(o.log_scale - L);
    ScaledComplex r(m, L);
    r.normalize();
    return r;
  }
  ScaledComplex& operator+=(const ScaledComplex& o) {
    *this = *this + o;
    return *this;
  }
};

/// A quadrature sample or series term evaluated to a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested value exists but cancellation exceeds what double precision
/// can deliver; message reports the offending log-magnitude spread.
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(const std::string& what, double log_spread)
      : std::runtime_error(what), log_spread_(log_spread) {}
  double log_spread() const { return log_spread_; }

 private:
  double log_spread_;
};

/// Parameter combination outside the implemented (and tested) domain.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  explicit UnsupportedConfiguration(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Two independent representations of the same object disagree beyond
/// tolerance — a build-time self-check failed, not a user error.
class RepresentationMismatch : public std::runtime_error {
 public:
  explicit RepresentationMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

/// A root set asserted to be real came back with a non-negligible
/// imaginary part (violates e.g. the real-simple-zeros property of
/// average characteristic polynomials under heat flow).
class RealRootsViolation : public std::runtime_error {
 public:
  explicit RealRootsViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hardedge
