/// \file kernels_product.cpp
/// \brief Hard-edge kernels for products of Ginibre matrices and products
///        of truncated Haar unitaries, finite n and limiting.
///
/// All four kernels share one evaluation scheme: the loop contour around
/// the nonnegative integers is resolved into residues at the poles of
/// 1/sin(pi t) (series in k), and for each k one integral remains over the
/// vertical line Re s = -1/2.  The line integrand factorizes as
/// exp(logphi(s)) / (s - k) with logphi independent of k, so a single node
/// table (values pre-scaled by the largest log-magnitude) serves every
/// series term.  Gamma factors never materialize outside log space.

#include <algorithm>
#include <cmath>
#include <complex>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardedge/kernels.hpp"
#include "hardedge/quadrature.hpp"
#include "hardedge/specfun.hpp"
#include "hardedge/types.hpp"

namespace hardedge {

namespace {

/// Tail threshold: the line is truncated where the integrand has dropped
/// this far (in log magnitude) below its peak.
constexpr double kTailLogDrop = 48.0;
/// Contract limit on log magnitudes combined into one evaluation.
constexpr double kLogMagnitudeCap = 600.0;

struct ProductParams {
  std::vector<int> nu;  ///< includes the leading nu_0 = 0
  std::vector<int> mu;  ///< truncation offsets along J (may be empty)
  int n = 0;            ///< 0 for the limiting kernel
  double y = 1.0;
};

void check_nu(const std::vector<int>& nu, const char* who) {
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

void check_y(double y, const char* who) {
  if (!(y > 0.0)) {
    throw std::domain_error(std::string(who) +
                            ": second argument must be positive");
  }
}

/// log of the line-integrand modulus at s = -1/2 + i tau, excluding the
/// 1/(s - k) factor (monotone in k, irrelevant for truncation).
double line_logmag(const ProductParams& pp, double tau) {
  const Complex s(-0.5, tau);
  double lm = 0.0;
  for (int v : pp.nu) lm += log_gamma(s + Complex(v + 1.0)).real();
  for (int m : pp.mu) lm -= log_gamma(s + Complex(m + 1.0)).real();
  lm += log_sin_pi(s).real();
  lm += (-s.real() - 1.0) * std::log(pp.y);
  if (pp.n > 0) {
    lm += log_gamma(Complex(pp.n) - s).real();
    lm += s.real() * std::log(static_cast<double>(pp.n));
  }
  return lm;
}

/// Smallest candidate T such that the integrand stays kTailLogDrop below
/// its tau = 0 level everywhere beyond (the tail can bulge where a
/// denominator Gamma has not yet reached its asymptotic regime, so every
/// candidate past T is checked, not just T itself).
double choose_line_truncation(const ProductParams& pp) {
  static const double kCandidates[] = {12,  16,  24,  32,  48,
                                       64,  96,  128, 192, 256};
  const double threshold = line_logmag(pp, 0.0) - kTailLogDrop;
  int last_above = -1;
  const int count = static_cast<int>(std::size(kCandidates));
  for (int i = 0; i < count; ++i) {
    if (line_logmag(pp, kCandidates[i]) > threshold) last_above = i;
  }
  if (last_above == count - 1) {
    throw UnsupportedConfiguration(
        "product kernel: line integrand has not decayed by |Im s| = 256; "
        "the parameter combination converges too slowly to evaluate");
  }
  return kCandidates[last_above + 1];
}

struct LineTable {
  std::vector<Complex> z;       ///< nodes on Re s = -1/2
  std::vector<Complex> scaled;  ///< exp(logphi - shift) * weight
  double shift = 0.0;           ///< max Re logphi over the nodes
};

/// Tabulate exp(logphi(s)) * w on the truncated line at the given
/// refinement level, pre-scaled so the largest node has modulus ~1.
LineTable build_line_table(const ProductParams& pp, double truncation,
                           int level) {
  QuadratureSpec spec;
  spec.truncation_radius = truncation;
  // Oscillation is dominated by y^{-i tau} (frequency |log y|) plus the
  // slowly varying Gamma/sin phases; two panels per unit resolves the
  // latter, and |log y|/3 keeps ~5 nodes per oscillation of the former.
  spec.panels_per_unit =
      std::max(2.0, std::abs(std::log(pp.y)) / 3.0);
  spec.rule_order = 16;
  const ContourPath line{{Segment::vertical_unbounded(-0.5)}};
  const std::vector<PathNode> nodes = path_nodes(line, spec, level);

  std::vector<Complex> logphi(nodes.size());
  double shift = -std::numeric_limits<double>::infinity();
  const double log_y = std::log(pp.y);
  const double log_n = pp.n > 0 ? std::log(static_cast<double>(pp.n)) : 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const Complex s = nodes[i].z;
    Complex lp(0.0, 0.0);
    for (int v : pp.nu) lp += log_gamma(s + Complex(v + 1.0));
    for (int m : pp.mu) lp -= log_gamma(s + Complex(m + 1.0));
    lp += log_sin_pi(s);
    lp += (-s - 1.0) * log_y;
    if (pp.n > 0) lp += log_gamma(Complex(pp.n) - s) + s * log_n;
    logphi[i] = lp;
    shift = std::max(shift, lp.real());
  }
  if (shift > kLogMagnitudeCap) {
    throw ConditioningError(
        "product kernel: line integrand magnitude exceeds the exp(600) "
        "contract limit",
        shift);
  }

  LineTable tab;
  tab.shift = shift;
  tab.z.reserve(nodes.size());
  tab.scaled.reserve(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    tab.z.push_back(nodes[i].z);
    tab.scaled.push_back(std::exp(logphi[i] - shift) * nodes[i].w);
  }
  return tab;
}

/// I_k = (1/2 pi i) int exp(logphi)/(s - k) ds from the shared table.
ScaledComplex line_integral_at(const LineTable& tab, int k) {
  Complex acc(0.0, 0.0);
  const Complex kk(static_cast<double>(k), 0.0);
  for (size_t i = 0; i < tab.z.size(); ++i) {
    acc += tab.scaled[i] / (tab.z[i] - kk);
  }
  // 1/(2 pi i) = -i/(2 pi)
  return ScaledComplex{acc * Complex(0.0, -1.0 / (2.0 * kPi)), tab.shift};
}

/// log of the k-th residue prefactor, excluding x^k (handled by the
/// caller so x = 0 and complex x stay uniform).
double series_logpref(const ProductParams& pp, int k) {
  double lp = 0.0;
  for (int v : pp.nu) lp -= std::lgamma(static_cast<double>(k + v + 1));
  for (int m : pp.mu) lp += std::lgamma(static_cast<double>(k + m + 1));
  if (pp.n > 0) {
    lp -= k * std::log(static_cast<double>(pp.n));
    lp -= std::lgamma(static_cast<double>(pp.n - k));
  }
  return lp;
}

Complex series_with_table(const ProductParams& pp, Complex x,
                          const LineTable& tab) {
  ResidueOptions opt;
  if (pp.n > 0) opt.max_terms = pp.n + 3;

  if (x == Complex(0.0, 0.0)) {
    // Only the k = 0 residue survives.
    const ScaledComplex t0 =
        ScaledComplex::from_log(Complex(series_logpref(pp, 0))) *
        line_integral_at(tab, 0);
    return (t0.to_complex() / kPi);
  }

  const Complex log_x = std::log(x);
  const auto term = [&](int k) -> ScaledComplex {
    if (pp.n > 0 && k >= pp.n) return ScaledComplex{};
    const Complex lp = static_cast<double>(k) * log_x +
                       Complex(series_logpref(pp, k));
    return ScaledComplex::from_log(lp) * line_integral_at(tab, k);
  };
  return residue_series_scaled(term, opt).to_complex();
}

Complex product_kernel_eval(const ProductParams& pp, Complex x) {
  const double truncation = choose_line_truncation(pp);
  const LineTable coarse = build_line_table(pp, truncation, 1);
  const Complex s1 = series_with_table(pp, x, coarse);
  const LineTable fine = build_line_table(pp, truncation, 2);
  const Complex s2 = series_with_table(pp, x, fine);
  if (std::abs(s2 - s1) <= std::max(1e-13, 1e-9 * std::abs(s2))) return s2;
  const LineTable finest = build_line_table(pp, truncation, 3);
  return series_with_table(pp, x, finest);
}

}  // namespace

Complex ginibre_limit_kernel(const std::vector<int>& nu, Complex x,
                             double y) {
  check_nu(nu, "ginibre_limit_kernel");
  check_y(y, "ginibre_limit_kernel");
  const int m = static_cast<int>(nu.size()) - 1;
  if (m < 2) {
    throw UnsupportedConfiguration(
        "ginibre_limit_kernel: the m = 1 line integrand does not converge "
        "absolutely; that case reduces to the rescaled Bessel kernel "
        "4 * bessel_kernel(nu_1, 4x, 4y)");
  }
  ProductParams pp;
  pp.nu = nu;
  pp.y = y;
  return product_kernel_eval(pp, x);
}

Complex ginibre_finite_kernel(int n, const std::vector<int>& nu, Complex x,
                              double y) {
  check_nu(nu, "ginibre_finite_kernel");
  check_y(y, "ginibre_finite_kernel");
  if (n < 1) {
    throw std::invalid_argument("ginibre_finite_kernel: n must be >= 1");
  }
  // Gamma(n - s) supplies the line decay here, so any m >= 1 converges.
  if (nu.size() < 2) {
    throw std::invalid_argument(
        "ginibre_finite_kernel: need at least one factor (len(nu) >= 2)");
  }
  ProductParams pp;
  pp.nu = nu;
  pp.n = n;
  pp.y = y;
  return product_kernel_eval(pp, x);
}

double ginibre_finite_kernel(int n, const std::vector<int>& nu, double x,
                             double y) {
  // Real arguments give a real kernel (the line integrand pairs conjugate
  // nodes); the imaginary residue is quadrature noise.
  return ginibre_finite_kernel(n, nu, Complex(x), y).real();
}

Complex trunc_limit_kernel(const std::vector<int>& nu,
                           const std::vector<int>& mu, Complex x, double y) {
  check_nu(nu, "trunc_limit_kernel");
  check_y(y, "trunc_limit_kernel");
  for (int m : mu) {
    if (m < 0) {
      throw std::invalid_argument(
          "trunc_limit_kernel: mu entries must be nonnegative");
    }
  }
  const int m = static_cast<int>(nu.size()) - 1;
  const int j = static_cast<int>(mu.size());
  if (j > m) {
    throw std::invalid_argument(
        "trunc_limit_kernel: |J| cannot exceed the factor count m");
  }
  // Exponential line decay e^{-(m-1-|J|) pi |Im s| / 2}; at margin zero
  // only the algebraic factor |Im s|^{sum nu - sum mu - 1} remains, which
  // needs sum mu >= sum nu + 2 for a comfortably convergent tail.
  const int margin = m - 1 - j;
  if (margin < 0) {
    throw UnsupportedConfiguration(
        "trunc_limit_kernel: more finite-truncation factors than the "
        "representation supports (|J| must leave m - 1 - |J| >= 0)");
  }
  if (margin == 0) {
    long sum_nu = 0, sum_mu = 0;
    for (int v : nu) sum_nu += v;
    for (int u : mu) sum_mu += u;
    if (sum_mu < sum_nu + 2) {
      throw UnsupportedConfiguration(
          "trunc_limit_kernel: borderline line decay (m - 1 - |J| = 0 "
          "needs sum(mu) >= sum(nu) + 2), like the m = 1 Ginibre case");
    }
  }
  ProductParams pp;
  pp.nu = nu;
  pp.mu = mu;
  pp.y = y;
  return product_kernel_eval(pp, x);
}

namespace detail {

std::vector<Complex> product_limit_row(const std::vector<int>& nu,
                                       const std::vector<int>& mu,
                                       const std::vector<Complex>& xs,
                                       double y) {
  check_y(y, "product_limit_row");
  ProductParams pp;
  pp.nu = nu;
  pp.mu = mu;
  pp.y = y;
  const double truncation = choose_line_truncation(pp);
  std::vector<Complex> out;
  out.reserve(xs.size());
  if (xs.empty()) return out;

  // Pick the refinement level on the first point, then reuse its table
  // for the whole row (the table depends on y only).
  const LineTable coarse = build_line_table(pp, truncation, 1);
  LineTable table = build_line_table(pp, truncation, 2);
  const Complex s1 = series_with_table(pp, xs.front(), coarse);
  const Complex s2 = series_with_table(pp, xs.front(), table);
  if (std::abs(s2 - s1) > std::max(1e-13, 1e-9 * std::abs(s2))) {
    table = build_line_table(pp, truncation, 3);
  }
  for (const Complex& x : xs) {
    out.push_back(series_with_table(pp, x, table));
  }
  return out;
}

}  // namespace detail

}  // namespace hardedge
