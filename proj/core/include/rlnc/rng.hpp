#ifndef RLNC_RNG_HPP
#define RLNC_RNG_HPP

#include <cstdint>

namespace rlnc {

// SplitMix64: fixed, named generator so simulation results are
// reproducible across platforms and configurations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  // Uniform over [0, 2^bits); bits in [1, 32].
  std::uint32_t next_bits(int bits) {
    return static_cast<std::uint32_t>(next() >> (64 - bits));
  }

 private:
  std::uint64_t state_;
};

// Independent per-trial stream: trials are split by XOR-ing the trial
// index into the master seed, with a distinct offset per stream id so one
// trial can consume several non-interfering sequences (erasure draws,
// coding coefficients). Order-independent across trials by construction.
// The stream offset is NOT a multiple of SplitMix64's increment, so two
// streams of the same trial never sit a few steps apart on the same orbit.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial,
                               std::uint64_t stream) {
  return SplitMix64((seed ^ trial) + (stream + 1) * 0xBF58476D1CE4E5B9ULL);
}

}  // namespace rlnc

#endif  // RLNC_RNG_HPP
