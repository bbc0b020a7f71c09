#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string_view>

namespace robevo {

// Deterministic xoshiro256++ generator. Streams are derived from a master
// seed plus a stream name so that consumers (matrix generation, optimizer
// sampling, ...) never share draws: changing how many numbers one stream
// consumes cannot perturb another.
class Rng {
 public:
  Rng() : Rng(0x9e3779b97f4a7c15ull) {}

  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  // Derives an independent named stream from (master seed, name).
  static Rng stream(std::uint64_t master_seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the name
    for (unsigned char c : name) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::uint64_t x = master_seed;
    std::uint64_t mixed = splitmix64(x) ^ h;
    return Rng(splitmix64(mixed));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller (stateless: no cached spare).
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  void save(std::ostream& os) const {
    os << state_[0] << ' ' << state_[1] << ' ' << state_[2] << ' ' << state_[3];
  }

  void load(std::istream& is) { is >> state_[0] >> state_[1] >> state_[2] >> state_[3]; }

  friend bool operator==(const Rng& a, const Rng& b) { return a.state_ == b.state_; }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace robevo
