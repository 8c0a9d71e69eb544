#pragma once

/// \file histogram.hpp
/// \brief Fixed-bin histograms used for spectral density estimates.
///
/// The sampling CLI bins eigenvalues into uniform histograms and writes them
/// as step-function plot files.  Bins cover [lo, hi) uniformly; values outside
/// the range are counted separately so densities can still be normalized by
/// the total number of observations.

#include <cstddef>
#include <vector>

namespace hardedge {

/// A uniform-bin histogram over [lo, hi).
struct Histogram {
  double lo = 0.0;               ///< Left edge of the binned range.
  double hi = 1.0;               ///< Right edge of the binned range.
  std::vector<std::size_t> counts;  ///< Per-bin counts, size = number of bins.
  std::size_t in_range = 0;      ///< Observations that landed in [lo, hi).
  std::size_t total = 0;         ///< All observations offered, in range or not.

  /// Number of bins.
  std::size_t bins() const { return counts.size(); }

  /// Width of one bin.
  double bin_width() const {
    return (hi - lo) / static_cast<double>(counts.size());
  }

  /// Left edge of bin \p k.
  double bin_left(std::size_t k) const { return lo + bin_width() * k; }

  /// Add one observation.  Values outside [lo, hi) only bump `total`.
  void add(double x);

  /// Empirical density value for bin \p k: count / (total * width).
  ///
  /// Normalizing by `total` (not `in_range`) makes the histogram integrate to
  /// the fraction of mass inside [lo, hi), so truncated windows remain
  /// comparable against model densities.
  double density(std::size_t k) const;
};

/// Build a histogram of \p data over [lo, hi) with \p bins uniform bins.
Histogram make_histogram(const std::vector<double>& data, double lo, double hi,
                         std::size_t bins);

/// Merge two histograms with identical bin layout (sums counts).
///
/// Throws std::invalid_argument if the layouts differ.
Histogram merge(const Histogram& a, const Histogram& b);

}  // namespace hardedge
