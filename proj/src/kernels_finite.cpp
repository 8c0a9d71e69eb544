/// \file kernels_finite.cpp
/// \brief Finite-n Laguerre (Wishart) correlation kernel, the biorthogonal
///        basis of that ensemble, and the exact separable form of its
///        Gaussian perturbation.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardedge/acp.hpp"
#include "hardedge/gauss.hpp"
#include "hardedge/kernels.hpp"
#include "hardedge/types.hpp"

namespace hardedge {

namespace {

/// Extended-precision budget: flag sums whose largest term exceeds the
/// result by more than this factor (long double retains ~18-19 digits, so
/// 1e13 leaves ~6 digits of headroom).
constexpr long double kCancellationCap = 1e13L;

void check_laguerre_params(int n, double alpha, const char* who) {
  if (n < 1) {
    throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  }
  if (!(alpha > -1.0)) {
    throw std::domain_error(std::string(who) + ": alpha must exceed -1");
  }
}

}  // namespace

double lue_finite_kernel(int n, double alpha, double x, double y) {
  check_laguerre_params(n, alpha, "lue_finite_kernel");
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw std::domain_error("lue_finite_kernel: arguments must be >= 0");
  }
  if (y == 0.0 && alpha < 0.0) {
    throw std::domain_error(
        "lue_finite_kernel: weight singular at y = 0 for alpha < 0");
  }
  if (y == 0.0 && alpha > 0.0) return 0.0;  // weight y^alpha vanishes

  // K_n(x, y) = y^a e^{-n y} sum_{j<n} c_j^2 L_j^{(a)}(n x) L_j^{(a)}(n y),
  // c_j^2 = n^{a+1} j! / Gamma(j+a+1), by the upward three-term recurrence
  // (j+1) L_{j+1} = (2j+1+a-u) L_j - (j+a) L_{j-1}.  The weight and the
  // leading constant fold into one exponential so macroscopic arguments
  // (u ~ 4n, |L_j| ~ e^{u/2}) stay inside long double range.
  const long double u = static_cast<long double>(n) * x;
  const long double v = static_cast<long double>(n) * y;
  const long double la = static_cast<long double>(alpha);
  long double log_w0 =
      (la + 1.0L) * std::log(static_cast<long double>(n)) -
      std::lgamma(alpha + 1.0) - v;
  if (y > 0.0) log_w0 += la * std::log(static_cast<long double>(y));
  long double wj = std::exp(log_w0);  // c_j^2 y^a e^{-n y}

  long double lx0 = 1.0L, ly0 = 1.0L;
  long double lx1 = 1.0L + la - u, ly1 = 1.0L + la - v;
  long double sum = 0.0L, max_term = 0.0L;
  for (int j = 0; j < n; ++j) {
    if (j > 0) {
      wj *= static_cast<long double>(j) / (static_cast<long double>(j) + la);
      const long double b = 2.0L * j - 1.0L + la;
      const long double c = static_cast<long double>(j) - 1.0L + la;
      if (j > 1) {
        const long double lx2 = ((b - u) * lx1 - c * lx0) / j;
        const long double ly2 = ((b - v) * ly1 - c * ly0) / j;
        lx0 = lx1;
        lx1 = lx2;
        ly0 = ly1;
        ly1 = ly2;
      }
    }
    const long double px = (j == 0) ? lx0 : lx1;
    const long double py = (j == 0) ? ly0 : ly1;
    const long double term = wj * px * py;
    sum += term;
    max_term = std::max(max_term, std::abs(term));
  }
  if (max_term > kCancellationCap * std::max(std::abs(sum), 1e-300L)) {
    throw ConditioningError(
        "lue_finite_kernel: term cancellation exhausts extended precision",
        static_cast<double>(std::log(max_term / std::abs(sum))));
  }
  return static_cast<double>(sum);
}

// ---------------------------------------------------------------------------
// LaguerreEnsembleBasis
// ---------------------------------------------------------------------------

LaguerreEnsembleBasis::LaguerreEnsembleBasis(int n, double alpha)
    : n_(n), alpha_(alpha) {
  check_laguerre_params(n, alpha, "LaguerreEnsembleBasis");
  const long double la = static_cast<long double>(alpha);
  const long double log_n = std::log(static_cast<long double>(n));

  log_c_.resize(static_cast<size_t>(n));
  p_.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    // c_j = n^{(a+1)/2} sqrt(j! / Gamma(j+a+1))
    const long double lgj1 = lgammal(static_cast<long double>(j) + 1.0L);
    const long double lgja = lgammal(static_cast<long double>(j) + la + 1.0L);
    const long double log_c =
        0.5L * ((la + 1.0L) * log_n + lgj1 - lgja);
    log_c_[static_cast<size_t>(j)] = static_cast<double>(log_c);

    // coefficient of x^i in c_j L_j^{(a)}(n x):
    //   (-1)^i c_j Gamma(j+a+1) n^i / (Gamma(a+i+1) (j-i)! i!)
    std::vector<double> coeffs(static_cast<size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) {
      const long double lc =
          log_c + lgja - lgammal(la + i + 1.0L) -
          lgammal(static_cast<long double>(j - i) + 1.0L) + i * log_n -
          lgammal(static_cast<long double>(i) + 1.0L);
      if (lc > 700.0L) {
        throw ConditioningError(
            "LaguerreEnsembleBasis: coefficient magnitude exceeds double "
            "range; reduce n",
            static_cast<double>(lc));
      }
      const long double mag = std::exp(lc);
      coeffs[static_cast<size_t>(i)] =
          static_cast<double>((i % 2 == 0) ? mag : -mag);
    }
    p_.emplace_back(std::move(coeffs));
  }
}

void LaguerreEnsembleBasis::q_all(double t, std::vector<double>& out) const {
  if (!(t >= 0.0)) {
    throw std::domain_error("LaguerreEnsembleBasis::q_all: t must be >= 0");
  }
  if (t == 0.0 && alpha_ < 0.0) {
    throw std::domain_error(
        "LaguerreEnsembleBasis::q_all: weight singular at t = 0 for "
        "alpha < 0");
  }
  out.resize(static_cast<size_t>(n_));
  const long double la = static_cast<long double>(alpha_);
  const long double u = static_cast<long double>(n_) * t;
  // w(t) = t^a e^{-n t}
  long double log_w = -u;
  if (t > 0.0) log_w += la * std::log(static_cast<long double>(t));
  const long double w = std::exp(log_w);

  long double l0 = 1.0L;
  long double l1 = 1.0L + la - u;
  for (int j = 0; j < n_; ++j) {
    long double lj;
    if (j == 0) {
      lj = l0;
    } else if (j == 1) {
      lj = l1;
    } else {
      const long double b = 2.0L * j - 1.0L + la;
      const long double c = static_cast<long double>(j) - 1.0L + la;
      const long double l2 = ((b - u) * l1 - c * l0) / j;
      l0 = l1;
      l1 = l2;
      lj = l2;
    }
    out[static_cast<size_t>(j)] = static_cast<double>(
        w * std::exp(static_cast<long double>(log_c_[static_cast<size_t>(j)])) *
        lj);
  }
}

double LaguerreEnsembleBasis::q(int j, double t) const {
  if (j < 0 || j >= n_) {
    throw std::invalid_argument("LaguerreEnsembleBasis::q: index out of range");
  }
  std::vector<double> buf;
  q_all(t, buf);
  return buf[static_cast<size_t>(j)];
}

// ---------------------------------------------------------------------------
// PerturbedFiniteKernel
// ---------------------------------------------------------------------------

PerturbedFiniteKernel::PerturbedFiniteKernel(const LaguerreEnsembleBasis& basis,
                                             double eps)
    : n_(basis.size()),
      alpha_(basis.alpha()),
      eps_(eps),
      w_(eps / std::sqrt(static_cast<double>(basis.size()))),
      basis_(basis) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("PerturbedFiniteKernel: eps must be positive");
  }
  flowed_.reserve(static_cast<size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    flowed_.push_back(acp_heat_flow(basis_.p(j), n_, eps));
  }
}

double PerturbedFiniteKernel::operator()(double x, double y) const {
  // K_n^S(x, y) = sum_j (Hp_j)(x) B_j(y) with
  // B_j(y) = (1/(sqrt(2 pi) w)) int q_j(t) e^{-(y-t)^2/(2 w^2)} dt.
  //
  // For y below the support, B_j is an oscillatory cancellation: the
  // integrand at the window edge can exceed the integral by many orders,
  // so the cut must sit where the Gaussian is e^{-50} below its maximum
  // over t > 0 (at k0 = -y/w sigmas), i.e. at sqrt(k0^2 + 100) sigmas.
  const double k0 = std::max(0.0, -y) / w_;
  const double lo = std::max(0.0, y - 10.0 * w_);
  const double hi = y + w_ * std::sqrt(100.0 + k0 * k0);
  if (!(hi > lo)) return 0.0;  // degenerate window (y very negative)

  // sqrt-spaced panel edges: the Laguerre functions oscillate with local
  // wavelength ~ pi sqrt(t)/n, so equal steps in sqrt(t) hold the phase
  // advance per panel constant; the Gaussian fixes the widest panel.
  const double s_lo = std::sqrt(lo);
  const double s_hi = std::sqrt(hi);
  const int p_phase = static_cast<int>(
      std::ceil(2.0 * n_ * (s_hi - s_lo) / kPi));
  const int p_gauss = static_cast<int>(
      std::ceil(4.0 * s_hi * (s_hi - s_lo) / w_));
  const int panels = std::max({24, p_phase, p_gauss});

  const std::vector<QuadNode>& rule = gauss_legendre(16);
  const double inv2w2 = 1.0 / (2.0 * w_ * w_);

  std::vector<long double> b(static_cast<size_t>(n_), 0.0L);
  std::vector<long double> b_abs(static_cast<size_t>(n_), 0.0L);
  std::vector<double> q_buf;
  double min_log = std::numeric_limits<double>::infinity();
  double max_log = -std::numeric_limits<double>::infinity();

  for (int p = 0; p < panels; ++p) {
    const double a = s_lo + (s_hi - s_lo) * p / panels;
    const double bdry = s_lo + (s_hi - s_lo) * (p + 1) / panels;
    const double t_lo = a * a;
    const double t_hi = bdry * bdry;
    const bool jacobi_panel = (p == 0 && t_lo == 0.0 && alpha_ < 0.0 &&
                               alpha_ != std::floor(alpha_));
    if (jacobi_panel) {
      // t^alpha is integrable but singular: Gauss-Jacobi nodes carry it.
      const std::vector<QuadNode> jrule = gauss_jacobi(16, 0.0, alpha_);
      const double half = 0.5 * t_hi;
      const double scale = std::pow(half, alpha_ + 1.0);
      for (const QuadNode& nd : jrule) {
        const double t = half * (1.0 + nd.x);
        const double g = std::exp(-(y - t) * (y - t) * inv2w2);
        basis_.q_all(t, q_buf);
        // q already contains t^alpha; the node weight provides it, so
        // divide it back out (t > 0 at every node).
        const double de_weight = std::pow(t, -alpha_);
        const long double wq =
            static_cast<long double>(nd.w * g * scale * de_weight);
        for (int j = 0; j < n_; ++j) {
          const long double c = wq * q_buf[static_cast<size_t>(j)];
          b[static_cast<size_t>(j)] += c;
          b_abs[static_cast<size_t>(j)] += std::abs(c);
        }
      }
      continue;
    }
    const double c = 0.5 * (t_lo + t_hi);
    const double h = 0.5 * (t_hi - t_lo);
    for (const QuadNode& nd : rule) {
      const double t = c + h * nd.x;
      const double log_g = -(y - t) * (y - t) * inv2w2;
      const double g = std::exp(log_g);
      basis_.q_all(t, q_buf);
      double max_q = 0.0;
      for (double qv : q_buf) max_q = std::max(max_q, std::abs(qv));
      if (max_q > 0.0) {
        const double node_log = log_g + std::log(max_q);
        min_log = std::min(min_log, node_log);
        max_log = std::max(max_log, node_log);
      }
      const long double wq = static_cast<long double>(h * nd.w * g);
      for (int j = 0; j < n_; ++j) {
        const long double cj = wq * q_buf[static_cast<size_t>(j)];
        b[static_cast<size_t>(j)] += cj;
        b_abs[static_cast<size_t>(j)] += std::abs(cj);
      }
    }
  }
  if (max_log - min_log > 600.0) {
    throw ConditioningError(
        "PerturbedFiniteKernel: quadrature node magnitudes span more than "
        "exp(600)",
        max_log - min_log);
  }

  const long double pref =
      1.0L / (std::sqrt(2.0L * static_cast<long double>(kPi)) *
              static_cast<long double>(w_));
  // Horner evaluation of the flowed polynomial together with the sum of
  // monomial magnitudes: the ratio of the two bounds the digits lost to
  // cancellation, both inside each polynomial (alternating coefficients
  // at points near its roots) and across the j sum.
  const auto horner_with_mag = [](const RealPolynomial& p, double x) {
    const std::vector<double>& c = p.coeffs();
    const long double lx = x;
    const long double ax = std::abs(lx);
    long double v = 0.0L, m = 0.0L;
    for (size_t i = c.size(); i-- > 0;) {
      v = v * lx + static_cast<long double>(c[i]);
      m = m * ax + std::abs(static_cast<long double>(c[i]));
    }
    return std::pair<long double, long double>(v, m);
  };
  // b_abs bounds the roundoff floor of each B_j (oscillatory quadrature
  // cancellation), so the magnitude account uses it rather than |B_j|.
  long double sum = 0.0L, mag_sum = 0.0L;
  for (int j = 0; j < n_; ++j) {
    const auto [pv, pm] = horner_with_mag(flowed_[static_cast<size_t>(j)], x);
    sum += pv * b[static_cast<size_t>(j)];
    mag_sum += pm * b_abs[static_cast<size_t>(j)];
  }
  if (mag_sum > kCancellationCap * std::max(std::abs(sum), 1e-300L)) {
    throw ConditioningError(
        "PerturbedFiniteKernel: cancellation in the basis sum exhausts "
        "extended precision",
        static_cast<double>(std::log(mag_sum / std::abs(sum))));
  }
  return static_cast<double>(pref * sum);
}

double perturb_finite_kernel(const LaguerreEnsembleBasis& basis, double eps,
                             double x, double y) {
  return PerturbedFiniteKernel(basis, eps)(x, y);
}

}  // namespace hardedge
