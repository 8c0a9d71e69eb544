#include "hardedge/ensembles.hpp"

#include <algorithm>
#include <cmath>

#include "hardedge/rng.hpp"

namespace hardedge {

void validate(const EnsembleSpec& spec) {
  if (spec.n < 1)
    throw UnsupportedConfiguration("ensemble: matrix size n must be >= 1");
  if (!(spec.eps >= 0.0))
    throw UnsupportedConfiguration(
        "ensemble: perturbation strength eps must be >= 0");
  switch (spec.type) {
    case EnsembleType::GUE:
      break;
    case EnsembleType::Wishart:
      if (spec.alpha < 0)
        throw UnsupportedConfiguration(
            "ensemble: Wishart parameter alpha must be >= 0");
      break;
    case EnsembleType::GinibreProduct:
    case EnsembleType::TruncatedUnitaryProduct: {
      if (spec.nu.empty())
        throw UnsupportedConfiguration(
            "ensemble: product ensembles need at least one factor (nu "
            "non-empty)");
      for (int v : spec.nu)
        if (v < 0)
          throw UnsupportedConfiguration(
              "ensemble: product offsets nu_j must be >= 0");
      if (spec.type == EnsembleType::TruncatedUnitaryProduct) {
        if (spec.ell.size() != spec.nu.size())
          throw UnsupportedConfiguration(
              "ensemble: truncated products need one source size ell_j per "
              "factor");
        for (size_t j = 0; j < spec.ell.size(); ++j)
          if (spec.ell[j] < spec.n + spec.nu[j] + 1)
            throw UnsupportedConfiguration(
                "ensemble: truncation source size ell_j must be >= n + nu_j "
                "+ 1");
        for (int c : spec.critical)
          if (c < 0 || c >= (int)spec.ell.size())
            throw UnsupportedConfiguration(
                "ensemble: critical-truncation index out of range");
      }
      break;
    }
    case EnsembleType::MuttalibBorodin: {
      if (spec.theta < 1)
        throw UnsupportedConfiguration(
            "ensemble: Muttalib-Borodin theta must be a positive integer");
      if (spec.alpha < 0)
        throw UnsupportedConfiguration(
            "ensemble: Muttalib-Borodin alpha must be >= 0");
      const long long need = (long long)spec.n +
                             (long long)(spec.n - 1) * spec.theta + spec.alpha;
      if (spec.mb_rows != 0 && spec.mb_rows < need)
        throw UnsupportedConfiguration(
            "ensemble: Muttalib-Borodin X needs at least n + (n-1) theta + "
            "alpha rows");
      break;
    }
  }
}

Eigen::MatrixXcd sample_gue(int n, std::uint64_t seed, std::uint32_t draw,
                            std::uint32_t component) {
  // n diagonal normals followed by 2 per strict-upper entry, row-major.
  std::vector<double> z =
      make_normals(seed, component, draw, (std::size_t)n * n);
  Eigen::MatrixXcd h(n, n);
  const double sd = 1.0 / std::sqrt((double)n);
  const double so = 1.0 / std::sqrt(2.0 * n);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) h(i, i) = Complex(sd * z[idx++], 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex v(so * z[idx], so * z[idx + 1]);
      idx += 2;
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  return h;
}

Eigen::MatrixXcd sample_ginibre(int rows, int cols, double part_variance,
                                std::uint64_t seed, std::uint32_t draw,
                                std::uint32_t component) {
  std::vector<double> z =
      make_normals(seed, component, draw, 2 * (std::size_t)rows * cols);
  Eigen::MatrixXcd g(rows, cols);
  const double s = std::sqrt(part_variance);
  std::size_t idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      g(i, j) = Complex(s * z[idx], s * z[idx + 1]);
      idx += 2;
    }
  return g;
}

Eigen::MatrixXcd sample_haar_unitary(int ell, std::uint64_t seed,
                                     std::uint32_t draw,
                                     std::uint32_t component) {
  if (ell < 1)
    throw UnsupportedConfiguration("sample_haar_unitary: size must be >= 1");
  Eigen::MatrixXcd a =
      sample_ginibre(ell, ell, 0.5, seed, draw, component);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(ell, ell);
  // Phase fix: multiply column i by r_ii/|r_ii| so the distribution is
  // exactly Haar rather than QR-convention dependent.
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < ell; ++i) {
    const Complex rii = r(i, i);
    const double m = std::abs(rii);
    const Complex phase = (m > 0.0) ? rii / m : Complex(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

Eigen::MatrixXcd sample_mb_factor(const EnsembleSpec& spec, std::uint64_t seed,
                                  std::uint32_t draw) {
  if (spec.type != EnsembleType::MuttalibBorodin)
    throw UnsupportedConfiguration(
        "sample_mb_factor: spec is not a Muttalib-Borodin ensemble");
  validate(spec);
  const int n = spec.n;
  const long long need =
      (long long)n + (long long)(n - 1) * spec.theta + spec.alpha;
  const int rows = spec.mb_rows > 0 ? spec.mb_rows : (int)need;
  Eigen::MatrixXcd x = sample_ginibre(rows, n, 0.5, seed, draw, 1);
  // Staircase support: entry (j, k) (0-based) vanishes when
  // j - k > theta k + alpha.
  for (int k = 0; k < n; ++k) {
    const long long top =
        (long long)(k + 1) + (long long)spec.theta * k + spec.alpha;
    for (int j = (int)std::min<long long>(top, rows); j < rows; ++j)
      x(j, k) = Complex(0.0, 0.0);
  }
  return x;
}

namespace {

Eigen::MatrixXcd base_matrix(const EnsembleSpec& spec, std::uint64_t seed,
                             std::uint32_t draw) {
  const int n = spec.n;
  switch (spec.type) {
    case EnsembleType::GUE:
      return sample_gue(n, seed, draw, 1);
    case EnsembleType::Wishart: {
      Eigen::MatrixXcd g = sample_ginibre(n + spec.alpha, n, 1.0 / (2.0 * n),
                                          seed, draw, 1);
      return g.adjoint() * g;
    }
    case EnsembleType::GinibreProduct: {
      const int m = (int)spec.nu.size();
      Eigen::MatrixXcd y;
      int prev = n;
      for (int j = 1; j <= m; ++j) {
        const int rows = n + spec.nu[j - 1];
        Eigen::MatrixXcd f =
            sample_ginibre(rows, prev, 0.5, seed, draw, (std::uint32_t)j);
        y = (j == 1) ? f : Eigen::MatrixXcd(f * y);
        prev = rows;
      }
      Eigen::MatrixXcd w = y.adjoint() * y;
      w *= std::pow((double)n, -m);
      return w;
    }
    case EnsembleType::TruncatedUnitaryProduct: {
      const int m = (int)spec.nu.size();
      Eigen::MatrixXcd y;
      int prev = n;
      for (int j = 1; j <= m; ++j) {
        const int rows = n + spec.nu[j - 1];
        Eigen::MatrixXcd u = sample_haar_unitary(spec.ell[j - 1], seed, draw,
                                                 (std::uint32_t)j);
        Eigen::MatrixXcd t = u.topLeftCorner(rows, prev);
        y = (j == 1) ? t : Eigen::MatrixXcd(t * y);
        prev = rows;
      }
      return y.adjoint() * y;
    }
    case EnsembleType::MuttalibBorodin: {
      Eigen::MatrixXcd x = sample_mb_factor(spec, seed, draw);
      Eigen::MatrixXcd w = x.adjoint() * x;
      w /= (double)n;
      return w;
    }
  }
  throw UnsupportedConfiguration("ensemble: unknown type");
}

}  // namespace

Eigen::MatrixXcd sample_matrix(const EnsembleSpec& spec, std::uint64_t seed,
                               std::uint32_t draw) {
  validate(spec);
  Eigen::MatrixXcd m = base_matrix(spec, seed, draw);
  if (spec.eps != 0.0)
    m += spec.eps * sample_gue(spec.n, seed, draw, 0);
  return m;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw EvaluationError("hermitian_eigenvalues: eigensolver failed");
  std::vector<double> ev(m.rows());
  for (int i = 0; i < m.rows(); ++i) ev[i] = es.eigenvalues()(i);
  return ev;
}

std::vector<double> sample_spectrum(const EnsembleSpec& spec,
                                    std::uint64_t seed, std::uint32_t draw) {
  return hermitian_eigenvalues(sample_matrix(spec, seed, draw));
}

HardEdgeScaling hard_edge_scaling(const EnsembleSpec& spec) {
  validate(spec);
  switch (spec.type) {
    case EnsembleType::GUE:
      throw UnsupportedConfiguration(
          "hard_edge_scaling: GUE has no hard edge (its edges are soft)");
    case EnsembleType::Wishart:
      return {4.0, 2.0};
    case EnsembleType::GinibreProduct:
      return {1.0, (double)spec.nu.size() + 1.0};
    case EnsembleType::MuttalibBorodin:
      return {1.0, 1.0 + 1.0 / spec.theta};
    case EnsembleType::TruncatedUnitaryProduct: {
      double c = 1.0;
      for (size_t j = 0; j < spec.ell.size(); ++j) {
        if (std::find(spec.critical.begin(), spec.critical.end(), (int)j) !=
            spec.critical.end())
          continue;
        c *= (double)(spec.ell[j] - spec.n);
      }
      return {c, 1.0};
    }
  }
  throw UnsupportedConfiguration("hard_edge_scaling: unknown type");
}

std::vector<double> hard_edge_statistics(const EnsembleSpec& spec,
                                         std::uint64_t seed, int draws,
                                         double window) {
  if (draws < 1)
    throw UnsupportedConfiguration("hard_edge_statistics: draws must be >= 1");
  const HardEdgeScaling sc = hard_edge_scaling(spec);
  const double f = sc.factor(spec.n);
  std::vector<double> out;
  for (int d = 0; d < draws; ++d) {
    for (double lam : sample_spectrum(spec, seed, (std::uint32_t)d)) {
      const double s = f * lam;
      if (s <= window) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hardedge
