#pragma once

/// \file kernels.hpp
/// \brief Finite-n and limiting eigenvalue correlation kernels at the hard
///        edge, and the Gaussian perturbation transform acting on them.
///
/// Conventions
/// -----------
/// All kernels here follow the polynomial-ensemble (weight-on-y) convention:
/// K(x, y) carries the full weight in its second argument, so K is not
/// symmetric, but every correlation determinant det[K(x_i, x_j)] agrees with
/// the symmetric gauge.  Limiting kernels may be singular at y = 0 like
/// y^{-beta}; the *regularized* value y^beta K(x, y) is the canonical
/// quantity (it is what the perturbation transform integrates), and the raw
/// kernel is the derived view.
///
/// Product-type kernels (Ginibre products, truncated unitary products,
/// Muttalib-Borodin) are double contour integrals.  The loop contour around
/// the nonnegative integers is never discretized: it is resolved exactly
/// into a residue series over the poles of 1/sin(pi t) (each residue
/// contributes (-1)^k/pi), leaving one line or bent-ray integral per series
/// term, evaluated by shared-node Gauss-Legendre quadrature with all Gamma
/// factors assembled from log_gamma sums.
///
/// Error taxonomy: std::domain_error for arguments outside a function's
/// mathematical domain (e.g. y < 0); UnsupportedConfiguration for parameter
/// combinations whose representation does not converge (with the message
/// naming the alternative, e.g. the m = 1 product reduces to a rescaled
/// Bessel kernel); ConditioningError when magnitudes exceed what the
/// floating types can combine; RepresentationMismatch when the build-time
/// series-vs-contour calibration fails.

#include <memory>
#include <vector>

#include "hardedge/polynomial.hpp"
#include "hardedge/quadrature.hpp"
#include "hardedge/types.hpp"

namespace hardedge {

// ---------------------------------------------------------------------------
// Bessel kernel (hard-edge limit of Laguerre-type ensembles)
// ---------------------------------------------------------------------------

/// Hard-edge Bessel kernel, weight-on-y convention:
///   K_alpha(x, y) = x^{-a/2} y^{a/2}
///       [J_a(sqrt x) sqrt(y) J_a'(sqrt y) - J_a(sqrt y) sqrt(x) J_a'(sqrt x)]
///       / (2 (x - y)).
///
/// Evaluated through the entire series g_a(v) = sum (-v)^j/(j! Gamma(j+a+1))
/// and G_a = a g_a - 2 v g_{a+1} (so J_a(sqrt x) = (x/4)^{a/2} g_a(x/4) and
/// sqrt(y) J_a'(sqrt y) = (y/4)^{a/2} G_a(y/4) / sqrt(y) * ... ), giving
///   K = (y/4)^a [g(x/4) G(y/4) - g(y/4) G(x/4)] / (2 (x - y)),
/// which is entire in x; the only branch factor is (y/4)^a.  When
/// |x - y| < 1e-4 (1 + |x|) the confluent (midpoint-derivative) form
///   K(m, m) = (m/4)^a (1/8) [g' G - g G'](m/4)
/// replaces the cancelling quotient.
///
/// alpha > -1 required; y < 0 throws std::domain_error.
Complex bessel_kernel(double alpha, Complex x, double y);

/// y^beta K_alpha(x, y) with beta = max(0, -alpha): for alpha < 0 this is
/// entire in y and extends continuously to y = 0; for alpha >= 0 it equals
/// the raw kernel.
Complex bessel_kernel_regularized(double alpha, Complex x, double y);

// ---------------------------------------------------------------------------
// Airy kernel (soft-edge limit; target of the super-critical regime)
// ---------------------------------------------------------------------------

/// Christoffel-Darboux form (Ai(x) Ai'(y) - Ai(y) Ai'(x)) / (x - y); the
/// diagonal form Ai'(m)^2 - m Ai(m)^2 is used when |x - y| < 1e-5.
double airy_kernel_cd(double x, double y);

/// Double contour representation
///   K(u, v) = (1/4 pi^2) int_{C2} ds int_{C1} dt e^{t^3 - v t}
///             / (e^{s^3 - u s} (s - t)),
/// with C1 running from e^{-i pi/3} inf to e^{+i pi/3} inf (rays anchored at
/// e^{+-i pi/3}, joined by the vertical segment through Re t = 1/2) and C2
/// its mirror image through the imaginary axis, both oriented upward.  The
/// contours are disjoint, so 1/(s - t) never blows up.  Agrees with
/// airy_kernel_cd on real arguments; quadrature truncation adapts to |u|,|v|.
Complex airy_kernel_contour(Complex x, Complex y);

// ---------------------------------------------------------------------------
// Products of Ginibre matrices (hard-edge kernels, finite n and limit)
// ---------------------------------------------------------------------------
//
// Parameter convention: nu lists nu_0, nu_1, ..., nu_m *including* the
// leading nu_0 = 0 (so a product of m factors passes a list of length
// m + 1).  This matches the Gamma-product structure of the kernels; the
// sampler module's EnsembleSpec.nu lists only the factor offsets
// nu_1..nu_m, and callers bridging the two prepend the zero.

/// Limiting hard-edge kernel for squared singular values of a product of
/// m >= 2 Ginibre factors:
///   K(x, y) = (1/pi) sum_{k>=0} (-1)^k x^k [prod_j 1/Gamma(k+nu_j+1)] I_k(y),
///   I_k(y)  = (1/2 pi i) int_{-1/2+iR} [prod_j Gamma(s+nu_j+1)]
///             sin(pi s) y^{-s-1} / (s - k) ds,
/// the residue resolution of the double contour integral.  The s-integrand
/// decays like e^{-(m-1) pi |Im s| / 2}, absolutely convergent only for
/// m >= 2: a direct m = 1 request throws UnsupportedConfiguration naming
/// the reduction K = 4 K^Bessel_{nu_1}(4x, 4y).
///
/// x may be complex (the series is entire in x); y > 0.
Complex ginibre_limit_kernel(const std::vector<int>& nu, Complex x, double y);

/// Finite-n hard-edge kernel of the same product ensemble, in hard-edge
/// coordinates (the n^{m+1}-rescaled kernel evaluated at x/n^{m+1}, ...):
///   K_n(x, y) = (1/pi) sum_{k=0}^{n-1} (-1)^k x^k n^{-k}
///               / [Gamma(n-k) prod_j Gamma(k+nu_j+1)] * L_k(y),
///   L_k(y)   = (1/2 pi i) int_{-1/2+iR} [prod_j Gamma(s+nu_j+1)] Gamma(n-s)
///              sin(pi s) y^{-s-1} n^s / (s - k) ds.
/// All Gamma factors combine in log space; magnitudes beyond exp(600) raise
/// ConditioningError reporting the offending log-magnitude.  Converges to
/// ginibre_limit_kernel as n grows and obeys the growth bound
/// |K_n(iu, y)| <= c1 y^{-1/2} e^{|u|} on the imaginary axis.  m = 1 is
/// fine here (Gamma(n-s) supplies the decay the limit lacks).
Complex ginibre_finite_kernel(int n, const std::vector<int>& nu, Complex x,
                              double y);
double ginibre_finite_kernel(int n, const std::vector<int>& nu, double x,
                             double y);

/// Limiting hard-edge kernel for products of truncated Haar unitaries where
/// the truncation gaps ell_j - n stay finite along indices in J (values
/// mu), and grow along the rest:
///   same residue-series/line scheme as ginibre_limit_kernel with the extra
///   factor prod_{l in J} Gamma(k+1+mu_l) in the series term and
///   1/Gamma(s+1+mu_l) in the line integrand.
/// J = {} reduces exactly to ginibre_limit_kernel (shared evaluator).
///
/// Convergence guard: the line integrand decays like
/// e^{-(m-1-|J|) pi |Im s|/2} * |Im s|^{sum nu - sum mu}.  Supported when
/// m - 1 - |J| >= 1, or when m - 1 - |J| = 0 with sum(mu) >= sum(nu) + 2
/// (algebraic decay); otherwise UnsupportedConfiguration.
Complex trunc_limit_kernel(const std::vector<int>& nu,
                           const std::vector<int>& mu, Complex x, double y);

// ---------------------------------------------------------------------------
// Muttalib-Borodin hard-edge kernel
// ---------------------------------------------------------------------------

/// Contour form: with the prefactor (y/x)^alpha,
///   K(x, y) = theta (y/x)^a (1/pi) sum_{k>=0} (-1)^k y^{theta k}
///             / (Gamma(theta k + a + 1) k!) * J_k(x),
///   J_k(x)  = (1/2 pi i) int_{C^delta} x^{-theta s - 1}
///             Gamma(theta s + a + 1) (-pi / Gamma(-s)) / (s - k) ds,
/// where Gamma(s+1) sin(pi s) = -pi/Gamma(-s) collapsed two factors.  The
/// bent contour C^delta consists of two rays leaving the real apex at angle
/// delta on either side of the vertical direction, oriented upward; the
/// apex sits at -min(1/2, (alpha+1)/(2 theta)), which keeps the poles of
/// Gamma(theta s + alpha + 1) strictly to its left for every alpha > -1
/// (the midpoint rule reduces to the customary -1/2 whenever that is
/// admissible).  Ray truncation adapts to theta, delta, and |x|.
///
/// x must satisfy Re x > 0 (the factor x^{-theta s - 1} needs a branch cut
/// on the negative axis); y > 0; 0 < delta < pi/2 or std::domain_error.
/// The value is independent of delta (contour deformation); the test suite
/// pins delta = 0.3 vs 0.6 to 1e-7.
Complex mb_limit_kernel_contour(double alpha, double theta, Complex x,
                                double y, double delta = 0.45);

/// Which reading of the Wright-series form matched the contour form during
/// calibration (the printed form is ambiguous about where the theta power
/// sits).
enum class MBSeriesReading {
  kArgumentPower,  ///< J_{a+1,theta}((y u)^theta)
  kValuePower,     ///< [J_{a+1,theta}(y u)]^theta
};

/// Wright-series form
///   K(x, y) = theta y^a int_0^1 J_{(a+1)/theta, 1/theta}(x u) *
///             {second Wright factor per the calibrated reading} * u^a du,
/// with J_{a,b}(z) = sum_j (-z)^j / (j! Gamma(a + j b)) and the u-integral
/// done by Gauss-Jacobi respecting the u^alpha endpoint weight.
///
/// The theta-power placement in the second factor is resolved once per
/// process by calibrating both readings against mb_limit_kernel_contour on
/// a 3x3 grid at theta = 2, alpha = 1 (tolerance 1e-4); if neither matches,
/// RepresentationMismatch is thrown.  mb_series_reading() forces the
/// calibration and reports the winner.
double mb_limit_kernel_series(double alpha, double theta, double x, double y);
MBSeriesReading mb_series_reading();

// ---------------------------------------------------------------------------
// Finite-n Laguerre (Wishart) kernel
// ---------------------------------------------------------------------------

/// Eigenvalue correlation kernel of the n x n Laguerre unitary ensemble
/// with weight w(t) = t^alpha e^{-n t} (macroscopic spectrum on [0, ~4]):
///   K_n(x, y) = y^alpha e^{-n y} sum_{j<n} c_j^2 L_j^{(a)}(n x) L_j^{(a)}(n y),
///   c_j^2 = n^{alpha+1} j! / Gamma(j + alpha + 1),
/// by the upward Laguerre three-term recurrence in extended precision.  The
/// plain sum has no cancelling denominator, so no diagonal switch is needed.
/// Hard-edge limit: (1/(4n^2)) K_n(u/(4n^2), v/(4n^2)) -> bessel_kernel.
double lue_finite_kernel(int n, double alpha, double x, double y);

// ---------------------------------------------------------------------------
// Unified limiting-kernel handle
// ---------------------------------------------------------------------------

/// Tagged union over the limiting kernels, carrying the regularization
/// exponent beta (y^beta K has a finite y -> 0+ limit) and the quadrature
/// controls used by contour-based variants.  Immutable after construction
/// and shareable across threads (all evaluations are pure).
class LimitingKernel {
 public:
  enum class Family {
    kBessel,
    kAiry,
    kGinibreProduct,
    kTruncatedUnitary,
    kMuttalibBorodin,
  };

  static LimitingKernel bessel(double alpha);
  static LimitingKernel airy();
  /// nu includes the leading nu_0 = 0; length m + 1 >= 3.
  static LimitingKernel ginibre_product(std::vector<int> nu);
  static LimitingKernel truncated_unitary(std::vector<int> nu,
                                          std::vector<int> mu);
  static LimitingKernel muttalib_borodin(double alpha, double theta);

  Family family() const { return family_; }
  /// Regularization exponent: max(0, -alpha) for Bessel and
  /// Muttalib-Borodin, 1/2 for the product families, 0 for Airy.
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }
  double theta() const { return theta_; }
  const std::vector<int>& nu() const { return nu_; }
  const std::vector<int>& mu() const { return mu_; }

  QuadratureSpec& quad() { return quad_; }
  const QuadratureSpec& quad() const { return quad_; }
  /// Bent-contour angle used by the Muttalib-Borodin variant.
  double mb_delta() const { return mb_delta_; }
  void set_mb_delta(double d) { mb_delta_ = d; }

  /// Raw kernel value K(u, v).  v < 0 throws std::domain_error; v = 0 with
  /// beta > 0 is the singular point (use regularized()).
  Complex operator()(Complex u, double v) const;
  /// v^beta K(u, v), continuous down to v = 0.
  Complex regularized(Complex u, double v) const;
  /// regularized() on the tensor grid {us} x {vs}, row-major
  /// us.size() x vs.size().  Contour-based families amortize their node
  /// tables along the axis that shares them (product kernels per v,
  /// Muttalib-Borodin per u), which is what makes the perturbation
  /// transform affordable for them; vs must be positive for those
  /// families.
  std::vector<Complex> regularized_block(const std::vector<Complex>& us,
                                         const std::vector<double>& vs) const;

 private:
  LimitingKernel() = default;

  Family family_ = Family::kBessel;
  double beta_ = 0.0;
  double alpha_ = 0.0;
  double theta_ = 1.0;
  std::vector<int> nu_;
  std::vector<int> mu_;
  double mb_delta_ = 0.45;
  QuadratureSpec quad_{};
};

// ---------------------------------------------------------------------------
// Gaussian perturbation transform (limiting kernels)
// ---------------------------------------------------------------------------

/// The critical-regime deformation of a limiting kernel:
///   P[K](x, y) = (1/(2 pi i sigma^2)) int_{iR} ds int_{R+} dt
///                K(s, t) e^{((s-x)^2 - (t-y)^2) / (2 sigma^2)}.
struct PerturbedKernelSpec {
  LimitingKernel base;
  double sigma = 1.0;
  /// Gaussian windows are truncated at tail_sigmas standard deviations
  /// (relative weight ~1e-18 at the default) and panels whose Gaussian
  /// bound is below the skip threshold are dropped.
  double tail_sigmas = 9.5;
  /// Gauss-Legendre points per panel of width ~sigma/2.
  int rule_order = 16;
};

/// Evaluate the transform.  The s-line is shifted to pass through x
/// (s = x + i tau; every base kernel here is entire in its first argument,
/// so the shift is a contour deformation, and it removes the e^{|x|^2/...}
/// magnitude swing the literal imaginary-axis form would suffer).  The
/// t-integral runs over [0, max(Re y, 0) + 10 sigma] with the t^{-beta}
/// endpoint singularity absorbed by the substitution t = w^{1/(1-beta)} on
/// the first panel, integrating the regularized kernel throughout.
///
/// A Muttalib-Borodin base requires Re x > 0 (UnsupportedConfiguration
/// otherwise: the shifted line must avoid the negative-axis branch cut).
/// An Airy base is soft-edge (no wall at t = 0), so its t-integral runs
/// over the full Gaussian window around Re y instead of [0, T].
Complex perturb_kernel(const PerturbedKernelSpec& spec, Complex x, Complex y);

// ---------------------------------------------------------------------------
// Finite-n perturbation (separable heat-flow form)
// ---------------------------------------------------------------------------

/// The biorthogonal pair (p_j, q_j) of the finite Laguerre ensemble,
///   p_j(x) = c_j L_j^{(a)}(n x),   q_j(t) = c_j t^a e^{-n t} L_j^{(a)}(n t),
/// with int p_j q_l = delta_{jl} and K_n(x, y) = sum_{j<n} p_j(x) q_j(y).
/// Coefficient vectors of the p_j are built once (log-Gamma assembly in
/// extended precision) for use by the heat-flow transform.
class LaguerreEnsembleBasis {
 public:
  /// n >= 1, alpha > -1; coefficients exceeding double range raise
  /// ConditioningError.
  LaguerreEnsembleBasis(int n, double alpha);

  int size() const { return n_; }
  double alpha() const { return alpha_; }
  const RealPolynomial& p(int j) const { return p_[static_cast<size_t>(j)]; }
  /// q_j(t) for all j < n in one recurrence pass.
  void q_all(double t, std::vector<double>& out) const;
  double q(int j, double t) const;

 private:
  int n_;
  double alpha_;
  std::vector<RealPolynomial> p_;
  std::vector<double> log_c_;  // log of the orthonormalization constants
};

/// Correlation kernel of S = M + eps H (M Laguerre, H an independent GUE of
/// matching variance) through the exact separable form of the Gaussian
/// transform: plugging K_n = sum p_j q_j into the double-integral transform
/// factorizes it as
///   K_n^S(x, y) = sum_{j<n} (Hp_j)(x) B_j(y),
/// where Hp_j is the backward heat flow of p_j (an exact polynomial
/// coefficient transform — the Gaussian average E p_j(x + i w Z) with
/// w = eps/sqrt(n)) and
///   B_j(y) = (1/(sqrt(2 pi) w)) int q_j(t) e^{-(y-t)^2/(2 w^2)} dt,
/// a Gaussian smoothing over t >= 0.  For y below the support B_j is an
/// oscillatory cancellation (the integrand near the cut can exceed the
/// integral by orders of magnitude), so the window upper end sits where the
/// Gaussian is e^{-50} below its maximum over t > 0, and panel edges are
/// spaced uniformly in sqrt(t) to hold the Laguerre phase advance per panel
/// constant.  Construction performs the n heat flows once; evaluation
/// shares one quadrature node table across all j.
///
/// Conditioning guards: node log-magnitude spreads beyond 600 and
/// cancellation in the j-sum beyond extended precision raise
/// ConditioningError with the observed spread.
class PerturbedFiniteKernel {
 public:
  PerturbedFiniteKernel(const LaguerreEnsembleBasis& basis, double eps);

  double operator()(double x, double y) const;
  double eps() const { return eps_; }

 private:
  int n_;
  double alpha_;
  double eps_;
  double w_;  // eps / sqrt(n)
  LaguerreEnsembleBasis basis_;
  std::vector<RealPolynomial> flowed_;
};

/// One-shot convenience wrapper (constructs the heat flows per call; prefer
/// the class when evaluating many points).
double perturb_finite_kernel(const LaguerreEnsembleBasis& basis, double eps,
                             double x, double y);

namespace detail {

/// Shared-node-table batch forms behind LimitingKernel::regularized_block
/// (raw kernel values, no v^beta factor).  The product-kernel table is a
/// function of y alone, so one table serves every x; the Muttalib-Borodin
/// table is a function of x alone, so one table (and one set of contour
/// integrals J_k) serves every y.
std::vector<Complex> product_limit_row(const std::vector<int>& nu,
                                       const std::vector<int>& mu,
                                       const std::vector<Complex>& xs,
                                       double y);
std::vector<Complex> mb_limit_row(double alpha, double theta, Complex x,
                                  const std::vector<double>& ys,
                                  double delta);

}  // namespace detail

}  // namespace hardedge
