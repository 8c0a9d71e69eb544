/// \file quadrature.cpp
/// \brief Contour-path quadrature and residue-series summation.

#include "hardedge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardedge/gauss.hpp"

namespace hardedge {

namespace {

bool close(Complex u, Complex v) { return std::abs(u - v) <= 1e-12 * (1.0 + std::abs(u) + std::abs(v)); }

std::string fmt_node(Complex z) {
  std::ostringstream os;
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

}  // namespace

Segment Segment::vertical(Complex from, Complex to) {
  Segment s;
  s.kind = Kind::VerticalLine;
  s.a = from;
  s.b = to;
  return s;
}

Segment Segment::vertical_unbounded(double re, double im_anchor) {
  Segment s;
  s.kind = Kind::VerticalLine;
  s.a = Complex(re, im_anchor);
  s.b = Complex(re, im_anchor);
  s.unbounded = true;
  return s;
}

Segment Segment::horizontal(Complex from, Complex to) {
  Segment s;
  s.kind = Kind::HorizontalLine;
  s.a = from;
  s.b = to;
  return s;
}

Segment Segment::ray(Complex start, Complex direction, double arc_length) {
  Segment s;
  s.kind = Kind::Ray;
  s.a = start;
  s.dir = direction / std::abs(direction);
  s.length = arc_length;
  s.b = s.a + s.length * s.dir;
  return s;
}

Segment Segment::ray_to_infinity(Complex start, Complex direction) {
  Segment s;
  s.kind = Kind::Ray;
  s.a = start;
  s.dir = direction / std::abs(direction);
  s.unbounded = true;
  return s;
}

Segment Segment::ray_from_infinity(Complex end, Complex direction_out) {
  Segment s = ray_to_infinity(end, direction_out);
  s.reversed_unbounded = true;
  return s;
}

Segment Segment::arc(Complex c, double r, double angle_from, double angle_to) {
  Segment s;
  s.kind = Kind::CircularArc;
  s.center = c;
  s.radius = r;
  s.phi0 = angle_from;
  s.phi1 = angle_to;
  return s;
}

Complex Segment::start_point(double R) const {
  switch (kind) {
    case Kind::VerticalLine:
      return unbounded ? a - Complex(0.0, R) : a;
    case Kind::HorizontalLine:
    case Kind::Ray:
      return a;
    case Kind::CircularArc:
      return center + radius * std::exp(Complex(0.0, phi0));
  }
  return a;
}

Complex Segment::end_point(double R) const {
  switch (kind) {
    case Kind::VerticalLine:
      return unbounded ? a + Complex(0.0, R) : b;
    case Kind::HorizontalLine:
      return b;
    case Kind::Ray:
      return a + (unbounded ? R : length) * dir;
    case Kind::CircularArc:
      return center + radius * std::exp(Complex(0.0, phi1));
  }
  return b;
}

Complex Segment::traversal_start(double R) const {
  return reversed_unbounded ? end_point(R) : start_point(R);
}

Complex Segment::traversal_end(double R) const {
  return reversed_unbounded ? start_point(R) : end_point(R);
}

double Segment::truncated_length(double R) const {
  switch (kind) {
    case Kind::VerticalLine:
      return unbounded ? 2.0 * R : std::abs(b - a);
    case Kind::HorizontalLine:
      return std::abs(b - a);
    case Kind::Ray:
      return unbounded ? R : length;
    case Kind::CircularArc:
      return radius * std::abs(phi1 - phi0);
  }
  return 0.0;
}

void ContourPath::validate(double R) const {
  if (segments.empty())
    throw UnsupportedConfiguration("contour path: no segments");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (s.unbounded && i != 0 && i + 1 != segments.size())
      throw UnsupportedConfiguration(
          "contour path: unbounded segment in the interior of the chain");
    // An unbounded vertical line reaches infinity on both sides, so it can
    // only stand alone.
    if (s.unbounded && s.kind == Segment::Kind::VerticalLine && segments.size() > 1)
      throw UnsupportedConfiguration(
          "contour path: unbounded vertical line must be the whole path");
    if (s.kind == Segment::Kind::VerticalLine && !s.unbounded &&
        std::abs(s.a.real() - s.b.real()) > 1e-12 * (1.0 + std::abs(s.a)))
      throw UnsupportedConfiguration("contour path: vertical segment endpoints differ in Re");
    if (s.kind == Segment::Kind::HorizontalLine &&
        std::abs(s.a.imag() - s.b.imag()) > 1e-12 * (1.0 + std::abs(s.a)))
      throw UnsupportedConfiguration("contour path: horizontal segment endpoints differ in Im");
    if (i > 0) {
      // Connectivity at the shared joint, in traversal order: an unbounded
      // first segment must be incoming (finite traversal end), an unbounded
      // last segment outgoing (finite traversal start).
      Complex prev_end = segments[i - 1].traversal_end(R);
      Complex cur_start = s.traversal_start(R);
      if (!close(prev_end, cur_start))
        throw UnsupportedConfiguration("contour path: segments " + std::to_string(i - 1) +
                                       " and " + std::to_string(i) +
                                       " do not join (gap at " + fmt_node(prev_end) + " vs " +
                                       fmt_node(cur_start) + ")");
    }
  }
}

ContourPath ContourPath::reversed() const {
  ContourPath r;
  r.segments.reserve(segments.size());
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    Segment s = *it;
    switch (s.kind) {
      case Segment::Kind::VerticalLine:
      case Segment::Kind::HorizontalLine:
        if (s.unbounded)
          s.reversed_unbounded = !s.reversed_unbounded;
        else
          std::swap(s.a, s.b);
        break;
      case Segment::Kind::Ray:
        if (s.unbounded) {
          s.reversed_unbounded = !s.reversed_unbounded;
        } else {
          s.a = s.b;
          s.dir = -s.dir;
          s.b = s.a + s.length * s.dir;
        }
        break;
      case Segment::Kind::CircularArc:
        std::swap(s.phi0, s.phi1);
        break;
    }
    r.segments.push_back(s);
  }
  return r;
}

namespace {

/// Linear parameterization z(u) = p + u*(q - p), u in [0,1], plus Jacobian.
struct Param {
  Complex p, q;
  bool is_arc = false;
  Complex center;
  double radius = 0, phi0 = 0, phi1 = 0;

  Complex point(double u) const {
    if (!is_arc) return p + u * (q - p);
    double phi = phi0 + u * (phi1 - phi0);
    return center + radius * std::exp(Complex(0.0, phi));
  }
  Complex jacobian(double u) const {
    if (!is_arc) return q - p;
    double phi = phi0 + u * (phi1 - phi0);
    return Complex(0.0, 1.0) * radius * (phi1 - phi0) * std::exp(Complex(0.0, phi));
  }
  double arclen() const {
    if (!is_arc) return std::abs(q - p);
    return radius * std::abs(phi1 - phi0);
  }
};

Param make_param(const Segment& s, double R) {
  Param pr;
  if (s.kind == Segment::Kind::CircularArc) {
    pr.is_arc = true;
    pr.center = s.center;
    pr.radius = s.radius;
    pr.phi0 = s.phi0;
    pr.phi1 = s.phi1;
    return pr;
  }
  pr.p = s.traversal_start(R);
  pr.q = s.traversal_end(R);
  return pr;
}

}  // namespace

std::vector<PathNode> path_nodes(const ContourPath& path, const QuadratureSpec& spec,
                                 int refine_level) {
  path.validate(spec.truncation_radius);
  const auto& rule = gauss_legendre(spec.rule_order);
  std::vector<PathNode> out;
  for (const Segment& seg : path.segments) {
    Param pr = make_param(seg, spec.truncation_radius);
    double L = pr.arclen();
    if (L <= 0.0) continue;
    long npanel = std::max<long>(1, (long)std::ceil(L * spec.panels_per_unit));
    npanel <<= refine_level;
    for (long k = 0; k < npanel; ++k) {
      double u0 = (double)k / (double)npanel;
      double u1 = (double)(k + 1) / (double)npanel;
      double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0);
      for (const QuadNode& qn : rule) {
        double u = mid + half * qn.x;
        out.push_back({pr.point(u), pr.jacobian(u) * (qn.w * half)});
      }
    }
  }
  return out;
}

namespace {

Complex sum_nodes(const std::function<Complex(Complex)>& f,
                  const std::vector<PathNode>& nodes) {
  Complex acc(0.0, 0.0);
  for (const PathNode& n : nodes) {
    Complex fv = f(n.z);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
      throw EvaluationError("integrand non-finite at node z = " + fmt_node(n.z));
    acc += fv * n.w;
  }
  return acc;
}

}  // namespace

IntegralResult integrate_path(const std::function<Complex(Complex)>& f,
                              const ContourPath& path, const QuadratureSpec& spec) {
  Complex coarse = sum_nodes(f, path_nodes(path, spec, 0));
  Complex fine = sum_nodes(f, path_nodes(path, spec, 1));
  IntegralResult r;
  r.value = fine;
  r.err_estimate = std::abs(fine - coarse);
  r.tolerance_met = r.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(fine));
  return r;
}

Complex residue_series(const std::function<Complex(int)>& g, const ResidueOptions& opt) {
  Complex sum(0.0, 0.0);
  int below = 0;
  int growth = 0;
  double prev_mag = -1.0;
  for (int k = 0; k < opt.max_terms; ++k) {
    Complex gk = g(k);
    if (!std::isfinite(gk.real()) || !std::isfinite(gk.imag()))
      throw EvaluationError("residue series: non-finite term at k = " + std::to_string(k));
    Complex term = (k % 2 == 0 ? gk : -gk);
    sum += term;
    double tmag = std::abs(term);
    if (prev_mag >= 0.0 && tmag > prev_mag)
      ++growth;
    else
      growth = 0;
    prev_mag = tmag;
    if (growth >= 24 && tmag > 1e30)
      throw EvaluationError("residue series: sustained term growth (divergent tail) at k = " +
                            std::to_string(k));
    if (tmag <= opt.tail_tol * (std::abs(sum) + 1e-300)) {
      if (++below >= opt.consecutive_below) return sum / kPi;
    } else {
      below = 0;
    }
  }
  throw EvaluationError("residue series: no convergence within max_terms");
}

ScaledComplex residue_series_scaled(const std::function<ScaledComplex(int)>& g,
                                    const ResidueOptions& opt) {
  ScaledComplex sum{Complex(0.0, 0.0), 0.0};
  int below = 0;
  int growth = 0;
  double prev_log = -1e300;
  bool have_prev = false;
  for (int k = 0; k < opt.max_terms; ++k) {
    ScaledComplex gk = g(k);
    if (!std::isfinite(gk.mantissa.real()) || !std::isfinite(gk.mantissa.imag()) ||
        !std::isfinite(gk.log_scale))
      throw EvaluationError("residue series: non-finite term at k = " + std::to_string(k));
    if (k % 2 == 1) gk.mantissa = -gk.mantissa;
    sum = sum + gk;
    sum.normalize();
    double tlog = gk.log_abs();
    if (have_prev && tlog > prev_log)
      ++growth;
    else
      growth = 0;
    prev_log = tlog;
    have_prev = true;
    if (growth >= 24 && tlog > sum.log_abs() + 69.0)
      throw EvaluationError("residue series: sustained term growth (divergent tail) at k = " +
                            std::to_string(k));
    if (gk.is_zero() || tlog <= std::log(opt.tail_tol) + sum.log_abs()) {
      if (++below >= opt.consecutive_below) {
        sum.mantissa /= kPi;
        return sum;
      }
    } else {
      below = 0;
    }
  }
  throw EvaluationError("residue series: no convergence within max_terms");
}

}  // namespace hardedge
