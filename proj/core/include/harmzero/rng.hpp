#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace harmzero {

// Counter-based random stream. Each (seed, stream) pair yields an
// independent, randomly-accessible sequence, so Monte Carlo trial t can be
// reproduced without generating trials 0..t-1 first. Output is a SplitMix64
// walk whose start state is a mix of seed and stream; the same (seed,
// stream) gives bit-identical draws on every platform.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(mix(seed + kGamma) ^ mix(stream + 0x9e3779b97f4a7c15ULL ^
                                            (stream << 23)))) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform on (0, 1]: never returns 0, safe under log().
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  // Standard normal via Box-Muller; draws come in pairs and the spare is
  // cached, so the mapping from counter values to outputs is fixed.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Standard complex normal: E z = 0, E|z|^2 = 1 (re/im each N(0, 1/2)).
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * kInvSqrt2, im * kInvSqrt2};
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr double kInvSqrt2 = 0.70710678118654752440;

  // Stafford variant 13 of the MurmurHash3 finalizer.
  static std::uint64_t mix(std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ULL;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return v;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace harmzero
