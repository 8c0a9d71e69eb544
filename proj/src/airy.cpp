// Airy Ai and Ai' on the real line and in the complex plane.
// This file is part of hardedge.  MIT License; see LICENSE.
#include <cmath>
#include <complex>
#include <vector>

#include "hardedge/gauss.hpp"
#include "hardedge/specfun.hpp"
#include "hardedge/types.hpp"

namespace hardedge {

namespace {

using CLD = std::complex<long double>;

// ---------------------------------------------------------------------------
// Maclaurin branch.  Ai(z) = c1 f(z) - c2 g(z) with
//   f = sum 3^k (1/3)_k z^{3k}/(3k)!,   g = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!,
//   c1 = Ai(0) = 3^{-2/3}/Gamma(2/3),   c2 = -Ai'(0) = 3^{-1/3}/Gamma(1/3).
// Term recurrences: f_{k+1} = f_k z^3/((3k+2)(3k+3)),
//                   g_{k+1} = g_k z^3/((3k+3)(3k+4)).
// ---------------------------------------------------------------------------
struct AirySeriesResult {
  CLD ai, aip;
};

AirySeriesResult airy_series(CLD z) {
  static const long double c1 = 0.3550280538878172392600631860041831763980L;
  static const long double c2 = 0.2588194037928067984051835601892039634793L;
  const CLD z3 = z * z * z;
  CLD f(1.0L, 0.0L), fp(0.0L, 0.0L);  // f and f'
  CLD g = z, gp(1.0L, 0.0L);          // g and g'
  CLD tf(1.0L, 0.0L), tg = z;
  for (int k = 0; k < 300; ++k) {
    // advance the f-term to index k+1 and the g-term likewise
    tf *= z3 / CLD((3.0L * k + 2.0L) * (3.0L * k + 3.0L), 0.0L);
    tg *= z3 / CLD((3.0L * k + 3.0L) * (3.0L * k + 4.0L), 0.0L);
    f += tf;
    g += tg;
    fp += tf * CLD(3.0L * (k + 1.0L), 0.0L) / z;        // d/dz z^{3k} term
    gp += tg * CLD(3.0L * (k + 1.0L) + 1.0L, 0.0L) / z;  // d/dz z^{3k+1}
    if (std::abs(tf) + std::abs(tg) <
            1e-24L * (std::abs(f) + std::abs(g) + 1e-300L) &&
        k > 2)
      break;
  }
  AirySeriesResult r;
  r.ai = c1 * f - c2 * g;
  r.aip = c1 * fp - c2 * gp;
  return r;
}

// z = 0 needs the derivative terms handled without dividing by z.
AirySeriesResult airy_series_origin() {
  AirySeriesResult r;
  r.ai = CLD(0.3550280538878172392600631860041831763980L, 0.0L);
  r.aip = CLD(-0.2588194037928067984051835601892039634793L, 0.0L);
  return r;
}

// ---------------------------------------------------------------------------
// Saddle-point quadrature branch.  Writing t = a + i u, a = sqrt(z), turns
// the Airy contour integral into
//   Ai(z)  =  e^{-zeta}/(2 pi) Int_{-inf}^{inf} e^{-a u^2 - i u^3/3} du,
//   Ai'(z) = -e^{-zeta}/(2 pi) Int (a + i u) e^{-a u^2 - i u^3/3} du,
// zeta = (2/3) z^{3/2}.  The Gaussian factor kills the tail at
// u^2 Re(a) ~ 40; panels are graded so each holds a bounded amount of the
// cubic phase, after which Gauss-Legendre converges spectrally.  Valid for
// Re a > 0, i.e. |arg z| < pi; used for |arg z| <= 3 pi/4 where the decay
// constant Re a >= |a| cos(3 pi/8) stays healthy.
// ---------------------------------------------------------------------------
struct AiryCResult {
  Complex ai, aip;
};

AiryCResult airy_saddle(Complex z) {
  const Complex a = std::sqrt(z);
  const Complex zeta = 2.0 / 3.0 * z * a;
  const double ra = a.real();
  const double U = std::sqrt(40.0 / ra);
  // graded panel edges: short panels where the phase u^3/3 moves fast
  std::vector<double> edges{0.0};
  while (edges.back() < U) {
    double u = edges.back();
    double du = std::min(1.2, 10.0 / (1.0 + u * u));
    edges.push_back(std::min(U, u + du));
  }
  const auto& rule = gauss_legendre(24);
  Complex I0(0, 0), I1(0, 0);
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    for (int sign = -1; sign <= 1; sign += 2) {
      double lo = sign > 0 ? edges[p] : -edges[p + 1];
      double hi = sign > 0 ? edges[p + 1] : -edges[p];
      double mid = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
      for (const auto& nd : rule) {
        double u = mid + rad * nd.x;
        Complex e = std::exp(-a * (u * u) - Complex(0, u * u * u / 3.0));
        I0 += rad * nd.w * e;
        I1 += rad * nd.w * (a + Complex(0, u)) * e;
      }
    }
  }
  Complex pref = std::exp(-zeta) / (2.0 * kPi);
  return {pref * I0, -pref * I1};
}

// ---------------------------------------------------------------------------
// Asymptotic branch (DLMF 9.7): u_0 = 1, u_{k+1} = u_k (6k+1)(6k+5)/(72(k+1)),
// v_k = (6k+1)/(1-6k) u_k, zeta = (2/3) z^{3/2}.
// ---------------------------------------------------------------------------
void airy_uv(int kmax, std::vector<double>& u, std::vector<double>& v) {
  u.assign(kmax + 1, 0.0);
  v.assign(kmax + 1, 0.0);
  u[0] = v[0] = 1.0;
  for (int k = 0; k < kmax; ++k) {
    u[k + 1] = u[k] * (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1.0));
    v[k + 1] = (6.0 * (k + 1.0) + 1.0) / (1.0 - 6.0 * (k + 1.0)) * u[k + 1];
  }
}

AiryCResult airy_asymptotic_pos(Complex z) {
  static const auto uv_tables = [] {
    std::pair<std::vector<double>, std::vector<double>> t;
    airy_uv(16, t.first, t.second);
    return t;
  }();
  const std::vector<double>& u = uv_tables.first;
  const std::vector<double>& v = uv_tables.second;
  Complex sz = std::sqrt(z);
  Complex zeta = 2.0 / 3.0 * z * sz;
  Complex su(0, 0), sv(0, 0), zp(1, 0);
  double prev = std::numeric_limits<double>::max();
  for (size_t k = 0; k < u.size(); ++k) {
    double mag = std::abs(u[k] * zp);
    if (mag > prev) break;
    prev = mag;
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    su += sgn * u[k] * zp;
    sv += sgn * v[k] * zp;
    zp /= zeta;
    if (mag < 1e-18) break;
  }
  Complex pref = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
  Complex z14 = std::sqrt(sz);  // z^{1/4}
  return {pref / z14 * su, -pref * z14 * sv};
}

// Oscillatory expansion on the negative axis (DLMF 9.7.9/9.7.10), x > 0:
//  Ai(-x)  = pi^{-1/2} x^{-1/4} [ cos(w) P_u + sin(w) Q_u ]
//  Ai'(-x) = -pi^{-1/2} x^{1/4} [ sin(w) P_v - cos(w) Q_v ]
// with w = zeta - pi/4, P_u = sum (-1)^k u_{2k} zeta^{-2k},
// Q_u = sum (-1)^k u_{2k+1} zeta^{-2k-1}, and P_v, Q_v likewise with v.
AiryPair airy_asymptotic_neg(double x) {
  static const auto uv_tables = [] {
    std::pair<std::vector<double>, std::vector<double>> t;
    airy_uv(20, t.first, t.second);
    return t;
  }();
  const std::vector<double>& u = uv_tables.first;
  const std::vector<double>& v = uv_tables.second;
  double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
  double pu = 0, qu = 0, pv = 0, qv = 0, zp = 1.0;
  for (size_t k = 0; k + 1 < u.size(); k += 2) {
    double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    pu += sgn * u[k] * zp;
    pv += sgn * v[k] * zp;
    qu += sgn * u[k + 1] * zp / zeta;
    qv += sgn * v[k + 1] * zp / zeta;
    zp /= zeta * zeta;
    if (u[k] * zp < 1e-18) break;
  }
  double w = zeta - kPi / 4;
  double cw = std::cos(w), sw = std::sin(w);
  double x14 = std::pow(x, 0.25);
  AiryPair r;
  r.value = (cw * pu + sw * qu) / (std::sqrt(kPi) * x14);
  r.deriv = (sw * pv - cw * qv) * x14 / std::sqrt(kPi);
  return r;
}

AiryCResult airy_complex_main(Complex z);

// Connection formula for the sector 3 pi/4 < |arg z| <= pi:
// Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z),  Ai'(z) = -w^2 Ai'(w z) - w Ai'(w^2 z),
// w = e^{2 pi i/3}; both rotated arguments land in |arg| <= 7 pi/12.
AiryCResult airy_connect(Complex z) {
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  const Complex w2 = std::polar(1.0, -2.0 * kPi / 3.0);  // w^2 = conj(w)
  AiryCResult r1 = airy_complex_main(w * z);
  AiryCResult r2 = airy_complex_main(w2 * z);
  AiryCResult r;
  r.ai = -w * r1.ai - w2 * r2.ai;
  r.aip = -w2 * r1.aip - w * r2.aip;
  return r;
}

AiryCResult airy_complex_main(Complex z) {
  double az = std::abs(z);
  if (std::abs(std::arg(z)) > 0.75 * kPi + 1e-14 && az > 4.5)
    return airy_connect(z);
  if (az <= 4.5) {
    AirySeriesResult s = (az == 0.0) ? airy_series_origin()
                                     : airy_series(CLD(z.real(), z.imag()));
    return {Complex((double)s.ai.real(), (double)s.ai.imag()),
            Complex((double)s.aip.real(), (double)s.aip.imag())};
  }
  if (az <= 9.5) return airy_saddle(z);
  return airy_asymptotic_pos(z);
}

}  // namespace

AiryPair airy(double x) {
  if (x >= -7.4 && x <= 2.3) {
    AirySeriesResult s =
        (x == 0.0) ? airy_series_origin() : airy_series(CLD(x, 0.0L));
    return {(double)s.ai.real(), (double)s.aip.real()};
  }
  if (x > 2.3 && x <= 9.5) {
    AiryCResult r = airy_saddle(Complex(x, 0.0));
    return {r.ai.real(), r.aip.real()};
  }
  if (x > 9.5) {
    AiryCResult r = airy_asymptotic_pos(Complex(x, 0.0));
    return {r.ai.real(), r.aip.real()};
  }
  return airy_asymptotic_neg(-x);
}

AiryPairC airy(Complex z) {
  if (z.imag() == 0.0) {
    AiryPair r = airy(z.real());
    return {Complex(r.value, 0.0), Complex(r.deriv, 0.0)};
  }
  AiryCResult r = airy_complex_main(z);
  return {r.ai, r.aip};
}

}  // namespace hardedge
