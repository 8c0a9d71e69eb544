#pragma once

/// Counter-based random number generation (Philox4x32-10, Salmon et al.,
/// "Parallel random numbers: as easy as 1, 2, 3", SC'11).
///
/// Every normal variate is addressed by (seed, component, draw, index), so
/// samples are reproducible bit-for-bit regardless of evaluation order,
/// thread count, or which other components were sampled.  The counter
/// layout is {block_lo, block_hi, component, draw} with the 64-bit seed
/// split across the key words.

#include <array>
#include <cstdint>
#include <vector>

namespace hardedge {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// The raw 10-round Philox4x32 block function.
PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

/// Fill out[0..count) with standard normals from the stream addressed by
/// (seed, component, draw).  Each counter block yields four variates via
/// Box-Muller on 32-bit uniforms; index i lives in block i/4.
void fill_normals(std::uint64_t seed, std::uint32_t component,
                  std::uint32_t draw, std::size_t count, double* out);

std::vector<double> make_normals(std::uint64_t seed, std::uint32_t component,
                                 std::uint32_t draw, std::size_t count);

}  // namespace hardedge
