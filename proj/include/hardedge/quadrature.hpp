#pragma once
/// \file quadrature.hpp
/// \brief Piecewise complex contour paths, Gauss-Legendre panel quadrature
///        along them, and residue-series summation for integrands whose
///        t-contour encircles the nonnegative integers (poles of 1/sin(pi t)).
///
/// The contour machinery serves the kernel double integrals: a path is an
/// ordered list of segments (vertical line, horizontal line, ray, circular
/// arc) that must join end-to-start within 1e-12; unbounded segments are
/// permitted only at the two ends of the path and are truncated at the
/// QuadratureSpec's truncation radius before discretization.
///
/// Integration uses fixed-order Gauss-Legendre panels with a single
/// halving refinement: the returned error estimate is the difference
/// between the coarse and refined passes, and the refined value is kept.
/// Non-finite integrand values abort with the offending node reported.

#include <functional>
#include <vector>

#include "hardedge/types.hpp"

namespace hardedge {

/// One piece of a contour. Construct through the factory functions; the
/// raw fields are public for the integrator and for tests.
struct Segment {
  enum class Kind { VerticalLine, HorizontalLine, Ray, CircularArc };

  Kind kind = Kind::Ray;

  // Line kinds (VerticalLine / HorizontalLine) and finite rays: endpoints.
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};

  // Ray: start point `a`, unit direction `dir`, arc length `length`
  // (ignored when `unbounded`; the truncation radius then supplies it).
  Complex dir{1.0, 0.0};
  double length = 0.0;

  // CircularArc: center, radius, parameter interval [phi0, phi1] traversed
  // linearly in the angle (phi1 < phi0 gives clockwise traversal).
  Complex center{0.0, 0.0};
  double radius = 0.0;
  double phi0 = 0.0;
  double phi1 = 0.0;

  /// True for rays/lines extending to infinity (truncated at integration
  /// time). Allowed only as the first or last segment of a path.
  bool unbounded = false;
  /// Unbounded segments only: traverse from the far (truncated) end toward
  /// the finite anchor instead of outward. This is how an incoming ray
  /// ("from infinity") is represented.
  bool reversed_unbounded = false;

  static Segment vertical(Complex from, Complex to);
  /// Full vertical line Re z = re, truncated to Im z in [-R, R] by the
  /// QuadratureSpec truncation radius (offset by the anchor's imaginary
  /// part, which is usually zero).
  static Segment vertical_unbounded(double re, double im_anchor = 0.0);
  static Segment horizontal(Complex from, Complex to);
  static Segment ray(Complex start, Complex direction, double arc_length);
  static Segment ray_to_infinity(Complex start, Complex direction);
  /// Incoming ray: traversal starts far out in direction `direction_out`
  /// from `end` and runs inward, finishing at `end`.
  static Segment ray_from_infinity(Complex end, Complex direction_out);
  static Segment arc(Complex c, double r, double angle_from, double angle_to);

  /// Geometric endpoints after truncation (finite segments ignore the
  /// radius); these do NOT account for reversed_unbounded.
  Complex start_point(double truncation_radius) const;
  Complex end_point(double truncation_radius) const;
  /// Endpoints in traversal order (accounting for reversed_unbounded).
  Complex traversal_start(double truncation_radius) const;
  Complex traversal_end(double truncation_radius) const;
  /// Arc length after truncation.
  double truncated_length(double truncation_radius) const;
};

/// Ordered, connected chain of segments.
struct ContourPath {
  std::vector<Segment> segments;

  ContourPath() = default;
  explicit ContourPath(std::vector<Segment> segs) : segments(std::move(segs)) {}

  /// Enforces the structural invariants: consecutive endpoints coincide
  /// within 1e-12 (checked at a reference truncation radius; connectivity
  /// is radius-independent because truncation only moves the outer ends),
  /// and unbounded segments appear only at the ends.
  /// Throws UnsupportedConfiguration on violation.
  void validate(double truncation_radius = 30.0) const;

  /// The same path traversed backwards (integral negates).
  ContourPath reversed() const;
};

/// Discretization and tolerance controls for integrate_path.
struct QuadratureSpec {
  double truncation_radius = 30.0;  ///< where unbounded segments are cut
  double panels_per_unit = 1.0;     ///< panels per unit of arc length
  int rule_order = 16;              ///< Gauss-Legendre points per panel
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
};

struct IntegralResult {
  Complex value{0.0, 0.0};   ///< refined-pass value
  double err_estimate = 0.0; ///< |refined - coarse|
  bool tolerance_met = true; ///< err <= max(abs_tol, rel_tol*|value|)
};

/// Integrate f along the path with Gauss-Legendre panels plus one halving
/// refinement. Throws EvaluationError (reporting the node) if f returns a
/// non-finite value. A missed tolerance is signalled through the flag, not
/// an exception: the refined value is still returned.
IntegralResult integrate_path(const std::function<Complex(Complex)>& f,
                              const ContourPath& path,
                              const QuadratureSpec& spec);

/// One quadrature node with its complex weight (Jacobian dz included), as
/// used by batch kernel evaluators that amortize node tables across many
/// evaluation points. refine_level 0 matches integrate_path's coarse pass;
/// each additional level doubles the panel count.
struct PathNode {
  Complex z;
  Complex w;
};
std::vector<PathNode> path_nodes(const ContourPath& path,
                                 const QuadratureSpec& spec,
                                 int refine_level = 0);

/// Stop/divergence controls for residue_series.
struct ResidueOptions {
  int max_terms = 400;
  double tail_tol = 1e-16;    ///< terms below tail_tol*|partial sum| are "small"
  int consecutive_below = 3;  ///< stop after this many consecutive small terms
};

/// Sum over the residues of a loop contour enclosing t = 0, 1, 2, ... for
/// integrands carrying a 1/sin(pi t) factor: returns sum_k (-1)^k g(k) / pi.
/// Terms with non-finite values throw EvaluationError; sustained growth of
/// the terms raises the divergence signal (also EvaluationError).
Complex residue_series(const std::function<Complex(int)>& g,
                       const ResidueOptions& opt = {});

/// Log-magnitude variant for term factors exceeding ~exp(300): g supplies
/// mantissa + log-scale pairs and the accumulation re-expresses every
/// partial sum on the largest scale seen.
ScaledComplex residue_series_scaled(const std::function<ScaledComplex(int)>& g,
                                    const ResidueOptions& opt = {});

}  // namespace hardedge
