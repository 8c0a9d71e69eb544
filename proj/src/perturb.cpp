/// \file perturb.cpp
/// \brief The unified limiting-kernel handle and the Gaussian perturbation
///        transform acting on it.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardedge/gauss.hpp"
#include "hardedge/kernels.hpp"
#include "hardedge/specfun.hpp"
#include "hardedge/types.hpp"

namespace hardedge {

namespace {

/// Christoffel-Darboux Airy kernel for complex arguments (the block path
/// of the perturbation transform needs K on a shifted line, where the
/// double-contour form would cost a full quadrature per point; Ai(z) is a
/// few series/asymptotic terms instead).
Complex airy_cd_complex(Complex x, double y) {
  const Complex diff = x - Complex(y);
  if (std::abs(diff) < 1e-5) {
    const Complex m = 0.5 * (x + Complex(y));
    const AiryPairC a = airy(m);
    return a.deriv * a.deriv - m * a.value * a.value;
  }
  const AiryPairC ax = airy(x);
  const AiryPairC ay = airy(Complex(y));
  return (ax.value * ay.deriv - ay.value * ax.deriv) / diff;
}

void check_product_nu(const std::vector<int>& nu, const char* who) {
  if (nu.empty() || nu.front() != 0) {
    throw std::invalid_argument(std::string(who) +
                                ": nu must start with nu_0 = 0");
  }
  for (int v : nu) {
    if (v < 0) {
      throw std::invalid_argument(std::string(who) +
                                  ": nu entries must be nonnegative");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// LimitingKernel
// ---------------------------------------------------------------------------

LimitingKernel LimitingKernel::bessel(double alpha) {
  if (!(alpha > -1.0)) {
    throw std::domain_error("LimitingKernel::bessel: alpha must exceed -1");
  }
  LimitingKernel k;
  k.family_ = Family::kBessel;
  k.alpha_ = alpha;
  k.beta_ = alpha < 0.0 ? -alpha : 0.0;
  return k;
}

LimitingKernel LimitingKernel::airy() {
  LimitingKernel k;
  k.family_ = Family::kAiry;
  k.beta_ = 0.0;
  return k;
}

LimitingKernel LimitingKernel::ginibre_product(std::vector<int> nu) {
  check_product_nu(nu, "LimitingKernel::ginibre_product");
  if (static_cast<int>(nu.size()) - 1 < 2) {
    throw UnsupportedConfiguration(
        "LimitingKernel::ginibre_product: the m = 1 line integrand does "
        "not converge absolutely; that case reduces to the rescaled Bessel "
        "kernel 4 * bessel_kernel(nu_1, 4x, 4y)");
  }
  LimitingKernel k;
  k.family_ = Family::kGinibreProduct;
  k.nu_ = std::move(nu);
  k.beta_ = 0.5;
  return k;
}

LimitingKernel LimitingKernel::truncated_unitary(std::vector<int> nu,
                                                 std::vector<int> mu) {
  check_product_nu(nu, "LimitingKernel::truncated_unitary");
  const int m = static_cast<int>(nu.size()) - 1;
  const int j = static_cast<int>(mu.size());
  for (int u : mu) {
    if (u < 0) {
      throw std::invalid_argument(
          "LimitingKernel::truncated_unitary: mu entries must be "
          "nonnegative");
    }
  }
  if (j > m) {
    throw std::invalid_argument(
        "LimitingKernel::truncated_unitary: |J| cannot exceed the factor "
        "count m");
  }
  const int margin = m - 1 - j;
  if (margin < 0) {
    throw UnsupportedConfiguration(
        "LimitingKernel::truncated_unitary: more finite-truncation factors "
        "than the representation supports");
  }
  if (margin == 0) {
    long sum_nu = std::accumulate(nu.begin(), nu.end(), 0L);
    long sum_mu = std::accumulate(mu.begin(), mu.end(), 0L);
    if (sum_mu < sum_nu + 2) {
      throw UnsupportedConfiguration(
          "LimitingKernel::truncated_unitary: borderline line decay "
          "(m - 1 - |J| = 0 needs sum(mu) >= sum(nu) + 2)");
    }
  }
  LimitingKernel k;
  k.family_ = Family::kTruncatedUnitary;
  k.nu_ = std::move(nu);
  k.mu_ = std::move(mu);
  k.beta_ = 0.5;
  return k;
}

LimitingKernel LimitingKernel::muttalib_borodin(double alpha, double theta) {
  if (!(alpha > -1.0)) {
    throw std::domain_error(
        "LimitingKernel::muttalib_borodin: alpha must exceed -1");
  }
  if (!(theta > 0.0)) {
    throw std::domain_error(
        "LimitingKernel::muttalib_borodin: theta must be positive");
  }
  LimitingKernel k;
  k.family_ = Family::kMuttalibBorodin;
  k.alpha_ = alpha;
  k.theta_ = theta;
  k.beta_ = alpha < 0.0 ? -alpha : 0.0;
  return k;
}

Complex LimitingKernel::operator()(Complex u, double v) const {
  switch (family_) {
    case Family::kBessel:
      return bessel_kernel(alpha_, u, v);
    case Family::kAiry:
      return airy_cd_complex(u, v);
    case Family::kGinibreProduct:
      return ginibre_limit_kernel(nu_, u, v);
    case Family::kTruncatedUnitary:
      return trunc_limit_kernel(nu_, mu_, u, v);
    case Family::kMuttalibBorodin:
      return mb_limit_kernel_contour(alpha_, theta_, u, v, mb_delta_);
  }
  throw std::logic_error("LimitingKernel: unknown family");
}

Complex LimitingKernel::regularized(Complex u, double v) const {
  switch (family_) {
    case Family::kBessel:
      return bessel_kernel_regularized(alpha_, u, v);
    case Family::kAiry:
      return airy_cd_complex(u, v);
    case Family::kGinibreProduct:
    case Family::kTruncatedUnitary:
      // sqrt(v) K(u, v) -> 0 as v -> 0+ (the kernel grows only like a
      // power of log v there), so the continuous extension at v = 0 is
      // zero.
      if (v == 0.0) return Complex(0.0, 0.0);
      return std::sqrt(v) * (*this)(u, v);
    case Family::kMuttalibBorodin: {
      if (!(v > 0.0)) {
        throw std::domain_error(
            "LimitingKernel::regularized: the Muttalib-Borodin evaluator "
            "needs v > 0");
      }
      Complex val = (*this)(u, v);
      if (beta_ > 0.0) val *= std::pow(v, beta_);
      return val;
    }
  }
  throw std::logic_error("LimitingKernel: unknown family");
}

std::vector<Complex> LimitingKernel::regularized_block(
    const std::vector<Complex>& us, const std::vector<double>& vs) const {
  const size_t nu_pts = us.size();
  const size_t nv_pts = vs.size();
  std::vector<Complex> block(nu_pts * nv_pts);
  switch (family_) {
    case Family::kBessel:
    case Family::kAiry:
      for (size_t i = 0; i < nu_pts; ++i) {
        for (size_t j = 0; j < nv_pts; ++j) {
          block[i * nv_pts + j] = regularized(us[i], vs[j]);
        }
      }
      return block;
    case Family::kGinibreProduct:
    case Family::kTruncatedUnitary:
      // One line table per v serves every u.
      for (size_t j = 0; j < nv_pts; ++j) {
        const std::vector<Complex> col =
            detail::product_limit_row(nu_, mu_, us, vs[j]);
        const double reg = std::sqrt(vs[j]);
        for (size_t i = 0; i < nu_pts; ++i) {
          block[i * nv_pts + j] = reg * col[i];
        }
      }
      return block;
    case Family::kMuttalibBorodin:
      // One ray table (and one set of contour integrals) per u serves
      // every v.
      for (size_t i = 0; i < nu_pts; ++i) {
        const std::vector<Complex> row =
            detail::mb_limit_row(alpha_, theta_, us[i], vs, mb_delta_);
        for (size_t j = 0; j < nv_pts; ++j) {
          Complex val = row[j];
          if (beta_ > 0.0) val *= std::pow(vs[j], beta_);
          block[i * nv_pts + j] = val;
        }
      }
      return block;
  }
  throw std::logic_error("LimitingKernel: unknown family");
}

// ---------------------------------------------------------------------------
// perturb_kernel
// ---------------------------------------------------------------------------

namespace {

struct WeightedNodes {
  std::vector<double> t;    ///< node locations
  std::vector<Complex> w;   ///< quadrature weight x Gaussian factor
};

/// Nodes and Gaussian-folded weights for the tau integral over
/// [-A, A] (A = tail_sigmas * sigma), panel width sigma/2.
WeightedNodes tau_nodes(double sigma, double tail_sigmas, int order) {
  const std::vector<QuadNode>& rule = gauss_legendre(order);
  const double a_lim = tail_sigmas * sigma;
  const int panels = std::max(2, 2 * static_cast<int>(std::ceil(
                                      2.0 * tail_sigmas)));  // width ~s/2
  const double width = 2.0 * a_lim / panels;
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  WeightedNodes out;
  out.t.reserve(static_cast<size_t>(panels) * rule.size());
  out.w.reserve(out.t.capacity());
  for (int p = 0; p < panels; ++p) {
    const double lo = -a_lim + p * width;
    const double c = lo + 0.5 * width;
    const double h = 0.5 * width;
    for (const QuadNode& nd : rule) {
      const double tau = c + h * nd.x;
      out.t.push_back(tau);
      out.w.push_back(Complex(h * nd.w * std::exp(-tau * tau * inv2s2)));
    }
  }
  return out;
}

/// Nodes and weights for the t integral.
///
/// Hard-edge bases live on t > 0, so the domain is [0, T]: the first
/// panel absorbs the t^{-beta} endpoint factor through the substitution
/// t = w^{1/(1-beta)}; later panels carry t^{-beta} explicitly and are
/// skipped when the Gaussian bound makes them irrelevant.  A two-sided
/// (soft-edge) base has no wall at t = 0, so the domain is simply the
/// Gaussian window around Re y.
WeightedNodes t_nodes(double sigma, Complex y, double beta, int order,
                      bool two_sided) {
  const std::vector<QuadNode>& rule = gauss_legendre(order);
  const double T = std::max(y.real(), 0.0) + 10.0 * sigma;
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const double im_boost = y.imag() * y.imag() * inv2s2;
  const auto gauss = [&](double t) {
    const Complex d = Complex(t) - y;
    return std::exp(-d * d * inv2s2);
  };
  // Log-magnitude bound of the Gaussian on [lo, hi], for panel skipping.
  const auto log_bound = [&](double lo, double hi) {
    double dist = 0.0;
    if (y.real() < lo) dist = lo - y.real();
    if (y.real() > hi) dist = y.real() - hi;
    return -dist * dist * inv2s2 + im_boost;
  };
  constexpr double kSkipLog = -46.0;  // e^{-46} ~ 1e-20 relative weight

  WeightedNodes out;
  if (two_sided) {
    const double lo0 = y.real() - 10.0 * sigma;
    const double hi0 = y.real() + 10.0 * sigma;
    const int panels = 40;  // width sigma/2 across the 20-sigma window
    const double width = (hi0 - lo0) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = lo0 + p * width;
      if (log_bound(lo, lo + width) <= kSkipLog) continue;
      const double c = lo + 0.5 * width;
      const double h = 0.5 * width;
      for (const QuadNode& nd : rule) {
        const double t = c + h * nd.x;
        out.t.push_back(t);
        out.w.push_back(h * nd.w * gauss(t));
      }
    }
    return out;
  }
  const double t1 = std::min(sigma, T);
  // --- first panel [0, t1]
  if (log_bound(0.0, t1) > kSkipLog) {
    if (beta > 0.0) {
      const double q = 1.0 / (1.0 - beta);   // t = w^q
      const double w1 = std::pow(t1, 1.0 - beta);
      for (const QuadNode& nd : rule) {
        const double w = 0.5 * w1 * (1.0 + nd.x);
        const double t = std::pow(w, q);
        out.t.push_back(t);
        out.w.push_back(0.5 * w1 * nd.w * q * gauss(t));
      }
    } else {
      for (const QuadNode& nd : rule) {
        const double t = 0.5 * t1 * (1.0 + nd.x);
        out.t.push_back(t);
        out.w.push_back(0.5 * t1 * nd.w * gauss(t));
      }
    }
  }
  // --- remaining panels, width ~sigma/2
  if (T > t1) {
    const int panels =
        std::max(1, static_cast<int>(std::ceil((T - t1) / (0.5 * sigma))));
    const double width = (T - t1) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = t1 + p * width;
      const double hi = lo + width;
      if (log_bound(lo, hi) <= kSkipLog) continue;
      const double c = 0.5 * (lo + hi);
      const double h = 0.5 * width;
      for (const QuadNode& nd : rule) {
        const double t = c + h * nd.x;
        Complex w = h * nd.w * gauss(t);
        if (beta > 0.0) w *= std::pow(t, -beta);
        out.t.push_back(t);
        out.w.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace

Complex perturb_kernel(const PerturbedKernelSpec& spec, Complex x, Complex y) {
  if (!(spec.sigma > 0.0)) {
    throw std::invalid_argument("perturb_kernel: sigma must be positive");
  }
  if (spec.base.family() == LimitingKernel::Family::kMuttalibBorodin &&
      !(x.real() > 0.0)) {
    throw UnsupportedConfiguration(
        "perturb_kernel: a Muttalib-Borodin base needs Re x > 0 (the "
        "shifted integration line must stay off the negative-axis branch "
        "cut)");
  }

  // P[K](x, y) = (1/(2 pi sigma^2)) int dtau e^{-tau^2/(2 s^2)}
  //              int dt t^{-beta} R(x + i tau, t) e^{-(t-y)^2/(2 s^2)},
  // the s-line of the defining double integral shifted to pass through x
  // (every base kernel is entire in its first argument) and the kernel
  // regularized so the t = 0 behavior is explicit.
  const bool two_sided =
      spec.base.family() == LimitingKernel::Family::kAiry;
  const WeightedNodes tau = tau_nodes(spec.sigma, spec.tail_sigmas,
                                      spec.rule_order);
  const WeightedNodes tt = t_nodes(spec.sigma, y, spec.base.beta(),
                                   spec.rule_order, two_sided);
  if (tt.t.empty()) return Complex(0.0, 0.0);

  std::vector<Complex> us(tau.t.size());
  for (size_t i = 0; i < tau.t.size(); ++i) {
    us[i] = x + Complex(0.0, tau.t[i]);
  }
  const std::vector<Complex> block = spec.base.regularized_block(us, tt.t);

  Complex acc(0.0, 0.0);
  const size_t nv_pts = tt.t.size();
  for (size_t i = 0; i < us.size(); ++i) {
    Complex inner(0.0, 0.0);
    for (size_t j = 0; j < nv_pts; ++j) {
      inner += tt.w[j] * block[i * nv_pts + j];
    }
    acc += tau.w[i] * inner;
  }
  return acc / (2.0 * kPi * spec.sigma * spec.sigma);
}

}  // namespace hardedge
