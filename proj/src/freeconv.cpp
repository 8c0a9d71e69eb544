#include "hardedge/freeconv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardedge/gauss.hpp"

namespace hardedge {

namespace {

using std::abs;

/// Moments of the base law (h == 1) on [0, b]:
///   M_0 = b/4,  M_{i+1} = M_i * b (i + 1/2)/(i + 2).
std::vector<double> base_moments(double b, int count) {
  std::vector<double> m(std::max(count, 1));
  m[0] = b / 4.0;
  for (int i = 0; i + 1 < count; ++i)
    m[i + 1] = m[i] * b * (i + 0.5) / (i + 2.0);
  return m;
}

/// The polynomial part D of G = h(z) g_b(z) - D(z), from
///   h(x) = h(z) - (z - x) sum_j h_j sum_{i<j} x^i z^{j-1-i}.
RealPolynomial d_polynomial(const MPLaw& law) {
  const auto& h = law.h.coeffs();
  const int deg = law.h.degree();
  if (deg == 0) return RealPolynomial({0.0});
  std::vector<double> mom = base_moments(law.b, deg);
  std::vector<double> d(deg, 0.0);
  for (int j = 1; j <= deg; ++j)
    for (int m = 0; m <= j - 1; ++m) d[m] += h[j] * mom[j - 1 - m];
  return RealPolynomial(std::move(d));
}

void support_check(const MPLaw& law, const Complex& z) {
  if (abs(z.imag()) < 1e-12 && z.real() > -1e-12 &&
      z.real() < law.b + 1e-12)
    throw UnsupportedConfiguration(
        "mp_stieltjes: z lies on the support [0, b]; evaluate off the real "
        "axis and take boundary values instead");
}

/// Core assembly given a precomputed branch value R = sqrt(1 - b/z).  The
/// separate R lets edge solvers evaluate at z = b + delta with R formed
/// from the exact offset delta, avoiding the cancellation in 1 - b/z.
StieltjesDerivs assemble(const MPLaw& law, const Complex& z,
                         const Complex& R) {
  const double b = law.b;
  const Complex one_m_R = (b / z) / (1.0 + R);  // 1 - R, cancellation-free
  const Complex gb = 0.5 * one_m_R;
  const Complex z2 = z * z;
  const Complex Rp = b / (2.0 * z2 * R);
  const Complex R3 = R * R * R;
  const Complex Rpp = -b / (z2 * z * R) - b * b / (4.0 * z2 * z2 * R3);

  const RealPolynomial D = d_polynomial(law);
  const RealPolynomial D1 = D.derivative(), D2 = D1.derivative();
  const RealPolynomial h1 = law.h.derivative(), h2 = h1.derivative();
  const Complex h = law.h(z), hp = h1(z), hpp = h2(z);

  StieltjesDerivs out;
  out.G = h * gb - D(z);
  out.G1 = hp * gb - 0.5 * h * Rp - D1(z);
  out.G2 = hpp * gb - hp * Rp - 0.5 * h * Rpp - D2(z);
  return out;
}

/// Derivatives at z = b + delta for real delta > 0, branch value from the
/// exact offset.
StieltjesDerivs assemble_right_edge(const MPLaw& law, double delta) {
  const Complex z(law.b + delta, 0.0);
  const Complex R(std::sqrt(delta / (law.b + delta)), 0.0);
  return assemble(law, z, R);
}

}  // namespace

ScaledMPLaw mp_from_k(int k) {
  if (k < 1)
    throw UnsupportedConfiguration("mp_from_k: k must be a positive integer");
  std::vector<double> A(k + 1);
  A[0] = 1.0;
  for (int j = 1; j <= k; ++j) A[j] = A[j - 1] * (2.0 * j - 1.0) / (2.0 * j);
  std::vector<double> hc(k);
  for (int j = 0; j < k; ++j) hc[j] = 2.0 * A[k - 1 - j] / A[k];
  ScaledMPLaw out;
  out.unit.h = RealPolynomial(std::move(hc));
  out.unit.b = 1.0;
  out.scale = std::pow(2.0 / (k * A[k]), 1.0 / k);
  return out;
}

MPLaw mp_physical(int k) {
  ScaledMPLaw s = mp_from_k(k);
  const auto& c0 = s.unit.h.coeffs();
  std::vector<double> hc(c0.size());
  for (size_t j = 0; j < c0.size(); ++j)
    hc[j] = c0[j] / std::pow(s.scale, (double)j + 1.0);
  MPLaw out;
  out.h = RealPolynomial(std::move(hc));
  out.b = s.scale;
  return out;
}

double mp_mass(const MPLaw& law) {
  const int nodes = std::max(8, law.h.degree() / 2 + 4);
  auto rule = gauss_jacobi(nodes, 0.5, -0.5);
  double acc = 0.0;
  for (const auto& q : rule) acc += q.w * law.h(law.b * (q.x + 1.0) / 2.0);
  return law.b / (4.0 * kPi) * acc;
}

double mp_cdf(const MPLaw& law, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= law.b) return 1.0;
  // Substituting u = b s^2 removes both endpoint singularities:
  //   F(x) = (b/pi) int_0^{sqrt(x/b)} h(b s^2) sqrt(1 - s^2) ds.
  const double smax = std::sqrt(x / law.b);
  double acc = 0.0;
  for (const auto& q : mapped_rule(gauss_legendre(96), 0.0, smax)) {
    acc += q.w * law.h(law.b * q.x * q.x) * std::sqrt(1.0 - q.x * q.x);
  }
  return std::min(1.0, law.b / kPi * acc);
}

StieltjesDerivs mp_stieltjes_derivs(const MPLaw& law, const Complex& z) {
  support_check(law, z);
  const Complex R = std::sqrt(1.0 - law.b / z);
  return assemble(law, z, R);
}

Complex mp_stieltjes(const MPLaw& law, const Complex& z) {
  return mp_stieltjes_derivs(law, z).G;
}

StieltjesDerivs mp_stieltjes_derivs_quad(const MPLaw& law, const Complex& z,
                                         int nodes) {
  support_check(law, z);
  auto rule = gauss_jacobi(nodes, 0.5, -0.5);
  const double pref = law.b / (4.0 * kPi);
  StieltjesDerivs out{Complex(0, 0), Complex(0, 0), Complex(0, 0)};
  for (const auto& q : rule) {
    const double x = law.b * (q.x + 1.0) / 2.0;
    const double wh = q.w * law.h(x);
    const Complex r = 1.0 / (z - x);
    out.G += wh * r;
    out.G1 -= wh * r * r;
    out.G2 += 2.0 * wh * r * r * r;
  }
  out.G *= pref;
  out.G1 *= pref;
  out.G2 *= pref;
  return out;
}

Complex mp_stieltjes_quad(const MPLaw& law, const Complex& z, int nodes) {
  return mp_stieltjes_derivs_quad(law, z, nodes).G;
}

FreeConvEdges solve_edges(const MPLaw& law, double eps) {
  if (!(eps > 0.0))
    throw UnsupportedConfiguration("solve_edges: eps must be positive");
  const double e2 = eps * eps;

  // Left edge: phi(u) = eps^2 (-G'(u)) - 1 is increasing on (-inf, 0),
  // +inf at 0-, -1 at -inf.
  auto phi_left = [&](double u) {
    return e2 * (-mp_stieltjes_derivs(law, Complex(u, 0.0)).G1.real()) - 1.0;
  };
  double dhi = 1.0;
  for (int g = 0; phi_left(-dhi) <= 0.0; ++g) {
    dhi *= 0.5;
    if (g > 400)
      throw ConditioningError("solve_edges: left bracket search failed", 0.0);
  }
  double dlo = std::max(2.0 * dhi, 1.0);
  for (int g = 0; phi_left(-dlo) >= 0.0; ++g) {
    dlo *= 2.0;
    if (g > 200)
      throw ConditioningError("solve_edges: left bracket search failed", 0.0);
  }
  double lo = -dlo, hi = -dhi;  // phi(lo) < 0 < phi(hi)
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (phi_left(mid) > 0.0 ? hi : lo) = mid;
  }
  const double u_left = 0.5 * (lo + hi);

  // Right edge: same equation on (b, inf), phi decreasing, +inf at b+.
  // Work in the offset delta = u - b with the branch value formed from the
  // exact offset, so the hard cancellation in 1 - b/z never occurs.
  auto phi_right = [&](double delta) {
    return e2 * (-assemble_right_edge(law, delta).G1.real()) - 1.0;
  };
  double rhi = 1.0;
  for (int g = 0; phi_right(rhi) <= 0.0; ++g) {
    rhi *= 0.5;
    if (g > 900)
      throw ConditioningError("solve_edges: right bracket search failed", 0.0);
  }
  double rlo = std::max(2.0 * rhi, 1.0);
  for (int g = 0; phi_right(rlo) >= 0.0; ++g) {
    rlo *= 2.0;
    if (g > 200)
      throw ConditioningError("solve_edges: right bracket search failed", 0.0);
  }
  // Geometric bisection spans the many decades between the brackets.
  for (int it = 0; it < 400; ++it) {
    const double mid = std::sqrt(rhi * rlo);
    if (mid == rhi || mid == rlo) break;
    (phi_right(mid) > 0.0 ? rhi : rlo) = mid;
  }
  const double delta_right = std::sqrt(rhi * rlo);

  FreeConvEdges out;
  out.u_left = u_left;
  out.u_right = law.b + delta_right;
  const StieltjesDerivs dl = mp_stieltjes_derivs(law, Complex(u_left, 0.0));
  const StieltjesDerivs dr = assemble_right_edge(law, delta_right);
  out.a_left = u_left + e2 * dl.G.real();
  out.b_right = out.u_right + e2 * dr.G.real();
  // Airy scale at the emergent soft edge.  Two independent routes pin the
  // constant: (i) the saddle expansion of the kernel phase
  // Psi(s) = (a-s)^2/(2 eps^2) + g_mu(s) has Psi''' = G'' at the double
  // critical point, so n G'' (s-u)^3/6 = tau^3/3 and matching the linear
  // coupling x n^{1/3}(s-u)/(eps^2 c) = x tau gives
  // c = eps^{-2} (|G''|/2)^{-1/3}; (ii) the subordination density
  // rho(t) ~ (c^{3/2}/pi) sqrt(t - a) near the edge yields the same c.
  out.c_eps = std::pow(std::abs(dl.G2.real()) / 2.0, -1.0 / 3.0) / e2;
  return out;
}

Subordination subordinate(const MPLaw& law, double eps, const Complex& z) {
  if (!(z.imag() > 0.0))
    throw UnsupportedConfiguration(
        "subordinate: z must lie in the open upper half-plane");
  if (eps == 0.0) return {z, mp_stieltjes(law, z)};
  const double e2 = eps * eps;

  // Newton solve of s + eps^2 G(s) = w from the given start, staying in the
  // upper half-plane (the subordination branch).
  auto newton = [&](Complex s0, const Complex& w, Complex* out) {
    Complex s = s0;
    for (int it = 0; it < 100; ++it) {
      if (!(s.imag() > 0.0)) return false;
      // An iterate grazing the support band cannot be evaluated; let the
      // caller shorten the continuation step instead.
      if (s.imag() < 1e-12 && s.real() > -1e-12 && s.real() < law.b + 1e-12)
        return false;
      const StieltjesDerivs d = mp_stieltjes_derivs(law, s);
      const Complex F = s + e2 * d.G - w;
      if (abs(F) <= 1e-13 * (1.0 + abs(s))) {
        *out = s;
        return true;
      }
      const Complex Fp = 1.0 + e2 * d.G1;
      if (Fp == Complex(0.0, 0.0)) return false;
      s -= F / Fp;
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
    }
    return false;
  };

  // Continuation along the ray from |w| = R0 down to z, halving steps on
  // Newton failure.
  const double R0 = 1e4;
  std::function<void(Complex&, const Complex&, const Complex&, int)> advance =
      [&](Complex& s, const Complex& w_from, const Complex& w_to, int depth) {
        Complex snew;
        if (newton(s, w_to, &snew)) {
          s = snew;
          return;
        }
        if (depth >= 8)
          throw EvaluationError("subordinate: continuation-step-too-large");
        const Complex wm = 0.5 * (w_from + w_to);
        advance(s, w_from, wm, depth + 1);
        advance(s, wm, w_to, depth + 1);
      };

  Complex s;
  if (abs(z) >= R0) {
    if (!newton(z, z, &s))
      throw EvaluationError("subordinate: continuation-step-too-large");
  } else {
    const Complex w0 = z * (R0 / abs(z));
    if (!newton(w0, w0, &s))
      throw EvaluationError("subordinate: continuation-step-too-large");
    Complex w_prev = w0;
    for (int k = 1; k <= 31; ++k) {
      const Complex wk = z * std::pow(R0 / abs(z), (31.0 - k) / 31.0);
      advance(s, w_prev, wk, 0);
      w_prev = wk;
    }
  }
  return {s, mp_stieltjes(law, s)};
}

double freeconv_density(const MPLaw& law, double eps, double x) {
  const double r5 =
      -subordinate(law, eps, Complex(x, 1e-5)).G.imag() / kPi;
  const double r4 =
      -subordinate(law, eps, Complex(x, 1e-4)).G.imag() / kPi;
  return (10.0 * r5 - r4) / 9.0;
}

FreeConvCdf::FreeConvCdf(const MPLaw& law, double eps, int grid_points) {
  if (grid_points < 3)
    throw std::invalid_argument("FreeConvCdf: grid must have >= 3 points");
  const FreeConvEdges e = solve_edges(law, eps);
  xs_.resize(grid_points);
  cum_.resize(grid_points);
  std::vector<double> rho(grid_points);
  const double h = (e.b_right - e.a_left) / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    xs_[i] = e.a_left + h * i;
    rho[i] = std::max(0.0, freeconv_density(law, eps, xs_[i]));
  }
  cum_[0] = 0.0;
  for (int i = 1; i < grid_points; ++i)
    cum_[i] = cum_[i - 1] + 0.5 * h * (rho[i - 1] + rho[i]);
  const double total = cum_.back();
  if (!(total > 0.0))
    throw EvaluationError("FreeConvCdf: vanishing total mass on the grid");
  for (double& c : cum_) c /= total;
}

double FreeConvCdf::operator()(double x) const {
  if (x <= xs_.front()) return 0.0;
  if (x >= xs_.back()) return 1.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const size_t i = (size_t)(it - xs_.begin());  // xs_[i-1] <= x < xs_[i]
  const double frac = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return cum_[i - 1] + frac * (cum_[i] - cum_[i - 1]);
}

double ks_distance(std::vector<double> points,
                   const std::function<double(double)>& cdf) {
  if (points.empty())
    throw std::invalid_argument("ks_distance: empty sample");
  std::sort(points.begin(), points.end());
  const double n = (double)points.size();
  double dist = 0.0;
  for (size_t i = 0; i < points.size(); ++i) {
    const double F = cdf(points[i]);
    dist = std::max(dist, std::max(F - (double)i / n, ((double)i + 1.0) / n - F));
  }
  return dist;
}

double semicircle_cdf(double x, double radius) {
  if (x <= -radius) return 0.0;
  if (x >= radius) return 1.0;
  return 0.5 + x * std::sqrt(radius * radius - x * x) / (kPi * radius * radius) +
         std::asin(x / radius) / kPi;
}

}  // namespace hardedge
