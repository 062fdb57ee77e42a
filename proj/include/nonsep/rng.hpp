#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace nonsep {

// Deterministic random stream: SplitMix64 with Box-Muller normals. The exact
// layout is part of the public contract so that samples can be reproduced
// outside this library (the python tests re-derive it in numpy):
//
//   next():    state += 0x9E3779B97F4A7C15; z = state;
//              z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//              z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//              return z ^ (z >> 31)
//   next_unit():   (next() >> 11) * 2^-53, in [0, 1)
//   next_normal(): Box-Muller from u1 = 1 - next_unit() in (0, 1] and
//                  u2 = next_unit(); the cosine branch is returned first and
//                  the sine branch on the following call.
//   next_complex_normal(): real part then imaginary part, each one draw from
//                  the normal stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  std::complex<double> next_complex_normal() {
    const double re = next_normal();
    const double im = next_normal();
    return {re, im};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Decorrelated per-sample stream: scrambles the counter with the SplitMix64
// output function and folds it into the base seed, then scrambles again.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t counter) {
  const auto scramble = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  return scramble(seed ^ scramble(counter + 0x9E3779B97F4A7C15ULL));
}

}  // namespace nonsep
