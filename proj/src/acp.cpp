#include "hardedge/acp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hardedge/types.hpp"

namespace hardedge {

namespace {

struct LaguerreRecurrence {
  std::vector<long double> a;  // a[j] = (2j + alpha + 1)/n
  std::vector<long double> b;  // b[j] = j (j + alpha)/n^2, b[0] unused
};

LaguerreRecurrence laguerre_recurrence(int n, double alpha) {
  if (n < 1)
    throw UnsupportedConfiguration("laguerre_acp: matrix size must be >= 1");
  if (alpha <= -1.0)
    throw UnsupportedConfiguration(
        "laguerre_acp: parameter must exceed -1 for an integrable weight");
  LaguerreRecurrence r;
  r.a.resize(n);
  r.b.resize(n);
  const long double nn = n;
  for (int j = 0; j < n; ++j) {
    r.a[j] = (2.0L * j + alpha + 1.0L) / nn;
    r.b[j] = j * (j + (long double)alpha) / (nn * nn);
  }
  return r;
}

}  // namespace

RealPolynomial laguerre_acp(int n, double alpha) {
  LaguerreRecurrence rec = laguerre_recurrence(n, alpha);
  // p_0 = 1; p_{j+1} = (x - a_j) p_j - b_j p_{j-1}, coefficients ascending.
  std::vector<long double> prev{1.0L}, cur{-rec.a[0], 1.0L};
  if (n == 1) {
    return RealPolynomial({(double)cur[0], (double)cur[1]});
  }
  for (int j = 1; j < n; ++j) {
    std::vector<long double> next(j + 2, 0.0L);
    for (size_t k = 0; k < cur.size(); ++k) {
      next[k + 1] += cur[k];           // x * p_j
      next[k] -= rec.a[j] * cur[k];    // -a_j p_j
    }
    for (size_t k = 0; k < prev.size(); ++k) next[k] -= rec.b[j] * prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<double> out(cur.size());
  for (size_t k = 0; k < cur.size(); ++k) out[k] = (double)cur[k];
  return RealPolynomial(std::move(out));
}

RealPolynomial acp_heat_flow(const RealPolynomial& p, int n, double eps) {
  if (n < 1)
    throw UnsupportedConfiguration("acp_heat_flow: matrix size must be >= 1");
  const auto& c = p.coeffs();
  const int d = p.degree();
  const long double t = -(long double)eps * eps / (2.0L * n);
  std::vector<double> out(d + 1);
  for (int j = 0; j <= d; ++j) {
    // coefficient of x^j in P: sum_m c[j+2m] (j+2m)!/(j! m!) t^m
    long double acc = 0.0L;
    long double fac = 1.0L;  // (j+2m)!/(j! m!) t^m
    for (int m = 0; j + 2 * m <= d; ++m) {
      acc += fac * (long double)c[j + 2 * m];
      fac *= t * (long double)(j + 2 * m + 1) * (long double)(j + 2 * m + 2) /
             (long double)(m + 1);
    }
    out[j] = (double)acc;
  }
  return RealPolynomial(std::move(out));
}

namespace {

/// Derivatives 0..n of the flowed polynomial's base p_n at x, via the
/// differentiated three-term recurrence, in extended precision.
void laguerre_derivs(const LaguerreRecurrence& rec, long double x,
                     std::vector<long double>& d) {
  const int n = (int)rec.a.size();
  std::vector<long double> prev(n + 1, 0.0L), cur(n + 1, 0.0L),
      next(n + 1, 0.0L);
  prev[0] = 1.0L;             // p_0
  cur[0] = x - rec.a[0];      // p_1
  if (n >= 1) cur[1] = 1.0L;  // p_1'
  for (int j = 1; j < n; ++j) {
    for (int r = 0; r <= n; ++r) {
      next[r] = (x - rec.a[j]) * cur[r] - rec.b[j] * prev[r];
      if (r > 0) next[r] += (long double)r * cur[r - 1];
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  d = cur;
}

/// Value, x-derivative, and second x-derivative of the time-tau flowed
/// polynomial at x.
void flowed_eval(const LaguerreRecurrence& rec, long double tau, long double x,
                 long double* value, long double* deriv, long double* deriv2,
                 std::vector<long double>& scratch) {
  laguerre_derivs(rec, x, scratch);
  const int n = (int)rec.a.size();
  long double v = 0.0L, dv = 0.0L, d2v = 0.0L, tm = 1.0L;  // tau^m / m!
  for (int m = 0; 2 * m <= n; ++m) {
    v += tm * scratch[2 * m];
    if (2 * m + 1 <= n) dv += tm * scratch[2 * m + 1];
    if (2 * m + 2 <= n) d2v += tm * scratch[2 * m + 2];
    tm *= tau / (long double)(m + 1);
  }
  *value = v;
  *deriv = dv;
  *deriv2 = d2v;
}

bool continuation_pass(const LaguerreRecurrence& rec, long double t_full,
                       int steps, std::vector<long double>& roots) {
  const int n = (int)rec.a.size();
  std::vector<long double> scratch;
  // Near the hard edge the extreme root moves like sqrt(tau), so a schedule
  // uniform in sqrt(tau) (tau_s ~ (s/steps)^2) bounds the per-step motion
  // uniformly; uniform tau steps would overshoot a neighbor on the very
  // first step regardless of the step count.
  long double tau_prev = 0.0L;
  for (int s = 1; s <= steps; ++s) {
    const long double frac = (long double)s / (long double)steps;
    const long double tau = t_full * frac * frac;
    const long double dtau = tau - tau_prev;
    for (int i = 0; i < n; ++i) {
      long double x = roots[i];
      // Euler predictor along the root path: the flow obeys the heat
      // equation d/dtau P = P'', so dx/dtau = -P''/P' on P(x(tau)) = 0.
      {
        long double v, dv, d2v;
        flowed_eval(rec, tau_prev, x, &v, &dv, &d2v, scratch);
        if (dv != 0.0L) {
          const long double vel = -d2v / dv;
          const long double pred = x + vel * dtau;
          if (std::isfinite((double)pred)) x = pred;
        }
      }
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        long double v, dv, d2v;
        flowed_eval(rec, tau, x, &v, &dv, &d2v, scratch);
        if (dv == 0.0L) break;
        long double step = v / dv;
        x -= step;
        if (std::abs(step) <= 1e-11L * (1.0L + std::abs(x))) {
          converged = true;
          break;
        }
      }
      if (!converged || !std::isfinite((double)x)) return false;
      roots[i] = x;
    }
    for (int i = 0; i + 1 < n; ++i)
      if (!(roots[i] < roots[i + 1])) return false;  // tracking degenerated
    tau_prev = tau;
  }
  return true;
}

}  // namespace

std::vector<double> heat_flowed_laguerre_roots(int n, double alpha,
                                               double eps) {
  LaguerreRecurrence rec = laguerre_recurrence(n, alpha);
  // Unflowed roots: eigenvalues of the symmetric Jacobi matrix.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    J(j, j) = (double)rec.a[j];
    if (j + 1 < n) {
      double off = std::sqrt((double)rec.b[j + 1]);
      J(j, j + 1) = off;
      J(j + 1, j) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J,
                                                    Eigen::EigenvaluesOnly);
  std::vector<long double> start(n);
  for (int j = 0; j < n; ++j) start[j] = es.eigenvalues()(j);

  std::vector<double> out(n);
  if (eps == 0.0) {
    for (int j = 0; j < n; ++j) out[j] = (double)start[j];
    return out;
  }

  const long double t_full = -(long double)eps * eps / (2.0L * n);
  for (int steps = 8; steps <= 256; steps *= 2) {
    std::vector<long double> roots = start;
    if (continuation_pass(rec, t_full, steps, roots)) {
      for (int j = 0; j < n; ++j) out[j] = (double)roots[j];
      return out;
    }
  }
  throw EvaluationError(
      "heat_flowed_laguerre_roots: continuation failed to keep the roots "
      "separated even at the finest step schedule");
}

}  // namespace hardedge
