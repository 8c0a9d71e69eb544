#pragma once

/// Samplers for the hard-edge matrix ensembles and their Gaussian
/// perturbations S = M + eps H.
///
/// Component allocation within one (seed, draw): the additive GUE
/// perturbation always uses component 0; the base matrix uses components
/// 1..m (one per product factor; single-factor ensembles use component 1).
/// This keeps draws bit-identical across eps values for the same seed.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hardedge/types.hpp"

namespace hardedge {

enum class EnsembleType {
  GUE,                      // Hermitian Gaussian, semicircle macroscopics
  Wishart,                  // G* G with (n+alpha) x n Gaussian G, CN(0, 1/n)
  GinibreProduct,           // n^{-m} Y* Y, Y = G_m ... G_1 with CN(0,1) entries
  TruncatedUnitaryProduct,  // Y* Y, Y a product of Haar-unitary truncations
  MuttalibBorodin,          // (1/n) X* X with a staircase zero pattern on X
};

struct EnsembleSpec {
  EnsembleType type = EnsembleType::Wishart;
  int n = 1;       // spectrum dimension
  int alpha = 0;   // Wishart row excess / Muttalib-Borodin offset
  int theta = 1;   // Muttalib-Borodin exponent (positive integer)
  int mb_rows = 0; // Muttalib-Borodin row count; 0 = minimal n+(n-1)theta+alpha

  // Product ensembles: factor j (1-based) has shape (n+nu[j-1]) x (n+nu[j-2]),
  // with nu_0 = 0. m = nu.size().
  std::vector<int> nu;

  // TruncatedUnitaryProduct: factor j is the top-left block of a Haar
  // unitary of size ell[j-1] (requires ell_j >= n + nu_j + 1).
  std::vector<int> ell;

  // Indices into ell (0-based) of truncations treated as critical (source
  // size staying within O(1) of n); they are excluded from the hard-edge
  // scaling product.
  std::vector<int> critical;

  // Strength of the additive GUE perturbation (0 = unperturbed base).
  double eps = 0.0;
};

/// Throws UnsupportedConfiguration naming the violated invariant.
void validate(const EnsembleSpec& spec);

/// GUE with diagonal N(0, 1/n) and off-diagonal parts N(0, 1/(2n)):
/// semicircle support [-2, 2] as n grows.
Eigen::MatrixXcd sample_gue(int n, std::uint64_t seed, std::uint32_t draw,
                            std::uint32_t component);

/// rows x cols complex Gaussian with entry parts N(0, part_variance).
Eigen::MatrixXcd sample_ginibre(int rows, int cols, double part_variance,
                                std::uint64_t seed, std::uint32_t draw,
                                std::uint32_t component);

/// Haar-distributed unitary via QR of a square Ginibre with the phase fix
/// U = Q diag(r_ii/|r_ii|).
Eigen::MatrixXcd sample_haar_unitary(int ell, std::uint64_t seed,
                                     std::uint32_t draw,
                                     std::uint32_t component);

/// The Muttalib-Borodin Gaussian factor X (rows x n) with the staircase
/// zero pattern applied: entry (j, k) (0-based) vanishes iff
/// j - k > theta * k + alpha.  The sample matrix is then (1/n) X* X.
Eigen::MatrixXcd sample_mb_factor(const EnsembleSpec& spec, std::uint64_t seed,
                                  std::uint32_t draw);

/// The Hermitian sample S (= base matrix, plus eps * GUE when eps != 0).
Eigen::MatrixXcd sample_matrix(const EnsembleSpec& spec, std::uint64_t seed,
                               std::uint32_t draw);

/// Eigenvalues (ascending) of a Hermitian matrix, values-only solver.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/// sample_matrix followed by the values-only eigensolve.
std::vector<double> sample_spectrum(const EnsembleSpec& spec,
                                    std::uint64_t seed, std::uint32_t draw);

/// Hard-edge zoom: scaled eigenvalue = c * n^gamma * lambda.
struct HardEdgeScaling {
  double c;
  double gamma;
  double factor(int n) const { return c * std::pow((double)n, gamma); }
};

/// Scaling that sends the smallest eigenvalues to the O(1) kernel variable:
/// Wishart 4 n^2; Ginibre products n^{m+1}; Muttalib-Borodin n^{1+1/theta};
/// truncated-unitary products n * prod_{j not critical} (ell_j - n).
/// GUE has no hard edge and is rejected.
HardEdgeScaling hard_edge_scaling(const EnsembleSpec& spec);

/// Pools c n^gamma lambda_i over draws 0..draws-1, keeping values <= window.
std::vector<double> hard_edge_statistics(const EnsembleSpec& spec,
                                         std::uint64_t seed, int draws,
                                         double window);

}  // namespace hardedge
