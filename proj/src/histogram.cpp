#include "hardedge/histogram.hpp"

#include <cmath>
#include <stdexcept>

namespace hardedge {

void Histogram::add(double x) {
  ++total;
  if (!(x >= lo) || !(x < hi)) return;
  const double w = bin_width();
  std::size_t k = static_cast<std::size_t>((x - lo) / w);
  if (k >= counts.size()) k = counts.size() - 1;  // guard x just below hi
  ++counts[k];
  ++in_range;
}

double Histogram::density(std::size_t k) const {
  if (total == 0) return 0.0;
  return static_cast<double>(counts.at(k)) /
         (static_cast<double>(total) * bin_width());
}

Histogram make_histogram(const std::vector<double>& data, double lo, double hi,
                         std::size_t bins) {
  if (!(hi > lo)) throw std::invalid_argument("make_histogram: need hi > lo");
  if (bins == 0) throw std::invalid_argument("make_histogram: need bins >= 1");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(bins, 0);
  for (double x : data) h.add(x);
  return h;
}

Histogram merge(const Histogram& a, const Histogram& b) {
  if (a.lo != b.lo || a.hi != b.hi || a.counts.size() != b.counts.size())
    throw std::invalid_argument("merge: histogram bin layouts differ");
  Histogram out = a;
  for (std::size_t k = 0; k < out.counts.size(); ++k)
    out.counts[k] += b.counts[k];
  out.in_range += b.in_range;
  out.total += b.total;
  return out;
}

}  // namespace hardedge
