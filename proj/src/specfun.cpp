// Log-gamma, Bessel J, Wright's generalized Bessel.
// This file is part of hardedge.  MIT License; see LICENSE.
#include "hardedge/specfun.hpp"

#include <cmath>
#include <complex>

namespace hardedge {

namespace {

using CLD = std::complex<long double>;

// ---------------------------------------------------------------------------
// Lanczos rational approximation, N = 13, g = 6.0246800407767296 (the
// double-precision coefficient set computed by Godfrey's method; max
// experimental error ~1.2e-17 on the real axis).  The denominator is
// z (z+1) ... (z+11), evaluated as a product.
// ---------------------------------------------------------------------------
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604569928220,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};

Complex lanczos_sum(Complex z) {
  // Numerator by Horner (ascending coefficients), denominator as the exact
  // product z(z+1)...(z+11).  Safe for Re z >= 1/2 where every factor has
  // positive real part.
  Complex num = kLanczosNum[12];
  for (int k = 11; k >= 0; --k) num = num * z + kLanczosNum[k];
  Complex den = z;
  for (int k = 1; k <= 11; ++k) den *= z + double(k);
  return num / den;
}

Complex log_gamma_upper(Complex z) {
  // Re z >= 1/2.  Gamma(z) = S(z) * t^(z-1/2) * e^{-t}, t = z + g - 1/2.
  Complex t = z + Complex(kLanczosG - 0.5, 0.0);
  return (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

}  // namespace

Complex log_sin_pi(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  if (z.imag() == 0.0) {
    // Accurate argument reduction on the real axis.
    double m = std::floor(z.real());
    double r = z.real() - m;
    double s = std::sin(kPi * r);
    // sin(pi x) = (-1)^m sin(pi r)
    bool neg = std::fmod(m, 2.0) != 0.0;
    return std::log(Complex(neg ? -s : s, 0.0));
  }
  // Im z > 0: sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), so
  // log sin(pi z) = -i pi z + log1p(-e^{2 pi i z}) + log(i/2).
  // This branch satisfies log_sin_pi(z+1) = log_sin_pi(z) - i pi, which is
  // what makes the reflected log_gamma obey the additive recurrence.
  const Complex i(0.0, 1.0);
  Complex w = std::exp(2.0 * kPi * i * z);  // |w| = e^{-2 pi Im z} < 1
  return -i * kPi * z + std::log(1.0 - w) + Complex(-std::log(2.0), kPi / 2);
}

double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  // Gamma alternates sign between consecutive negative integers:
  // negative on (-1,0), positive on (-2,-1), ...
  double f = std::floor(x);
  return (std::fmod(f, 2.0) == 0.0) ? 1.0 : -1.0;
}

Complex log_gamma(Complex z) {
  if (z.real() == std::floor(z.real()) && z.imag() == 0.0 && z.real() <= 0.0)
    throw EvaluationError("log_gamma: pole at nonpositive integer " +
                          std::to_string(z.real()));
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return log_gamma_upper(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  return std::log(kPi) - log_sin_pi(z) - log_gamma_upper(1.0 - z);
}

// ---------------------------------------------------------------------------
// Entire Bessel series g_alpha(v) = sum (-v)^j / (j! Gamma(j+alpha+1)).
// Extended-precision accumulation; the term recurrence is
// t_{j+1} = t_j * (-v) / ((j+1)(j+1+alpha)).
// ---------------------------------------------------------------------------
namespace {

CLD g_series(long double alpha, CLD v) {
  CLD term = std::exp(CLD(-lgammal((long double)(alpha + 1.0L)), 0.0L));
  CLD sum = term;
  for (int j = 0; j < 500; ++j) {
    term *= -v / CLD((long double)(j + 1) * ((long double)(j + 1) + alpha), 0.0L);
    sum += term;
    if (std::abs(term) < 1e-22L * (std::abs(sum) + 1e-300L) && j > 3) break;
  }
  return sum;
}

}  // namespace

Complex bessel_g(double alpha, Complex v) {
  CLD s = g_series((long double)alpha, CLD(v.real(), v.imag()));
  return Complex((double)s.real(), (double)s.imag());
}

BesselGG bessel_gG(double alpha, Complex v) {
  Complex ga = bessel_g(alpha, v);
  Complex ga1 = bessel_g(alpha + 1.0, v);
  Complex ga2 = bessel_g(alpha + 2.0, v);
  BesselGG r;
  r.g = ga;
  r.gp = -ga1;
  r.G = alpha * ga - 2.0 * v * ga1;
  r.Gp = -(alpha + 2.0) * ga1 + 2.0 * v * ga2;
  return r;
}

// ---------------------------------------------------------------------------
// Bessel J via series / Hankel asymptotics.
// ---------------------------------------------------------------------------
namespace {

// Hankel expansion (DLMF 10.17.3): with w = x - nu pi/2 - pi/4,
// J_nu(x) ~ sqrt(2/(pi x)) [cos(w) P - sin(w) Q],
// P = sum (-1)^m a_{2m} x^{-2m}, Q = sum (-1)^m a_{2m+1} x^{-2m-1},
// a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
Complex bessel_j_asymptotic(double nu, Complex x) {
  const double nu2 = 4.0 * nu * nu;
  Complex P(1.0, 0.0), Q(0.0, 0.0);
  double ak = 1.0;
  Complex xpow(1.0, 0.0);
  double prev = std::numeric_limits<double>::max();
  for (int k = 0; k < 40; ++k) {
    ak *= (nu2 - (2.0 * k + 1.0) * (2.0 * k + 1.0)) / (8.0 * (k + 1.0));
    xpow /= x;
    double mag = std::abs(ak * xpow);
    if (mag > prev) break;  // asymptotic tail started growing: stop
    prev = mag;
    Complex term = ak * xpow;
    if (k % 2 == 0)
      Q += ((k / 2) % 2 == 0) ? term : -term;  // odd a-index -> Q
    else
      P += (((k + 1) / 2) % 2 == 0) ? term : -term;  // even a-index -> P
    if (mag < 1e-18) break;
  }
  Complex w = x - Complex(nu * kPi / 2 + kPi / 4, 0.0);
  Complex pref = std::sqrt(2.0 / (kPi * x));
  return pref * (std::cos(w) * P - std::sin(w) * Q);
}

}  // namespace

JPair bessel_j(double order, Complex x) {
  if (order <= -1.0)
    throw UnsupportedConfiguration("bessel_j: order must be > -1, got " +
                                   std::to_string(order));
  const double r_switch = 12.0 + 2.0 * std::max(order, 0.0);
  JPair out;
  if (std::abs(x) == 0.0) {
    out.value = (order == 0.0) ? Complex(1, 0) : Complex(0, 0);
    if (order == 0.0)
      out.deriv = Complex(0, 0);  // J0' = -J1
    else if (order == 1.0)
      out.deriv = Complex(0.5, 0);
    else if (order > 1.0)
      out.deriv = Complex(0, 0);
    else
      out.deriv = Complex(std::numeric_limits<double>::infinity(), 0);
    return out;
  }
  if (std::abs(x) <= r_switch) {
    Complex v = x * x / 4.0;
    Complex g0 = bessel_g(order, v);
    Complex g1 = bessel_g(order + 1.0, v);
    Complex pref = std::exp(order * std::log(x / 2.0));
    out.value = pref * g0;
    // J' = (x/2)^nu [ (nu/x) g_nu - (x/2) g_{nu+1} ]
    out.deriv = pref * (order / x * g0 - x / 2.0 * g1);
  } else {
    out.value = bessel_j_asymptotic(order, x);
    // J_nu' = (nu/x) J_nu - J_{nu+1}
    out.deriv = order / x * out.value - bessel_j_asymptotic(order + 1.0, x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wright's generalized Bessel function.
// ---------------------------------------------------------------------------
Complex wright_bessel(double a, double b, Complex x) {
  if (!(b > 0.0))
    throw UnsupportedConfiguration(
        "wright_bessel: second parameter must be > 0 (series diverges otherwise)");
  if (x == Complex(0, 0)) {
    // 1/Gamma(a): zero at the poles of Gamma, signed elsewhere.
    if (a <= 0.0 && a == std::floor(a)) return Complex(0.0, 0.0);
    return Complex(gamma_sign(a) * std::exp(-std::lgamma(a)), 0.0);
  }
  const long double lx = std::log(std::abs(Complex(x)));
  const long double ph = std::arg(-x);  // phase of (-x)
  CLD sum(0.0L, 0.0L);
  long double log_peak = -1e400L;
  int below = 0;
  for (int j = 0; j < 600; ++j) {
    double garg = a + j * b;
    long double lt;
    long double sign = 1.0L;
    if (garg <= 0.0 && garg == std::floor(garg)) {
      continue;  // 1/Gamma vanishes at nonpositive integers
    }
    lt = j * lx - lgammal((long double)j + 1.0L) - lgammal((long double)garg);
    sign = (long double)gamma_sign(garg);
    log_peak = std::max(log_peak, lt);
    CLD term = sign * std::exp(CLD(lt, (long double)j * ph));
    sum += term;
    long double smag = std::abs(sum);
    if (std::exp(lt) < 1e-20L * (smag + 1e-300L) && (long double)j > std::abs(x) / 10.0L) {
      if (++below >= 3) break;
    } else {
      below = 0;
    }
  }
  long double smag = std::abs(sum);
  if (smag > 0.0L && log_peak - std::log(smag) > 42.0L)
    throw ConditioningError(
        "wright_bessel: alternating series cancels beyond extended precision",
        (double)(log_peak - std::log(smag)));
  return Complex((double)sum.real(), (double)sum.imag());
}

double wright_bessel(double a, double b, double x) {
  return wright_bessel(a, b, Complex(x, 0.0)).real();
}

}  // namespace hardedge
