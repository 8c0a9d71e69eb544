#include "hardedge/rng.hpp"

#include <cmath>

#include "hardedge/types.hpp"

namespace hardedge {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline PhiloxCounter philox_round(const PhiloxCounter& c,
                                  const PhiloxKey& k) {
  const std::uint64_t p0 = (std::uint64_t)kPhiloxM0 * c[0];
  const std::uint64_t p1 = (std::uint64_t)kPhiloxM1 * c[2];
  const std::uint32_t hi0 = (std::uint32_t)(p0 >> 32),
                      lo0 = (std::uint32_t)p0;
  const std::uint32_t hi1 = (std::uint32_t)(p1 >> 32),
                      lo1 = (std::uint32_t)p1;
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    ctr = philox_round(ctr, key);
  }
  return ctr;
}

void fill_normals(std::uint64_t seed, std::uint32_t component,
                  std::uint32_t draw, std::size_t count, double* out) {
  const PhiloxKey key{(std::uint32_t)seed, (std::uint32_t)(seed >> 32)};
  const double two_pi = 2.0 * kPi;
  std::size_t written = 0;
  for (std::uint64_t block = 0; written < count; ++block) {
    const PhiloxCounter ctr{(std::uint32_t)block, (std::uint32_t)(block >> 32),
                            component, draw};
    const PhiloxCounter r = philox4x32_10(ctr, key);
    // Four 32-bit uniforms in (0,1); two Box-Muller pairs.
    double u[4];
    for (int j = 0; j < 4; ++j) u[j] = ((double)r[j] + 0.5) * 0x1p-32;
    const double m0 = std::sqrt(-2.0 * std::log(u[0]));
    const double m1 = std::sqrt(-2.0 * std::log(u[2]));
    const double z[4] = {m0 * std::cos(two_pi * u[1]),
                         m0 * std::sin(two_pi * u[1]),
                         m1 * std::cos(two_pi * u[3]),
                         m1 * std::sin(two_pi * u[3])};
    for (int j = 0; j < 4 && written < count; ++j) out[written++] = z[j];
  }
}

std::vector<double> make_normals(std::uint64_t seed, std::uint32_t component,
                                 std::uint32_t draw, std::size_t count) {
  std::vector<double> v(count);
  fill_normals(seed, component, draw, count, v.data());
  return v;
}

}  // namespace hardedge
