#pragma once

#include <cstdint>
#include <span>

namespace causil {

// Counter-based SplitMix64 streams.
//
// Every consumer draws from a stream addressed by (seed, stream id). The
// stream key is derived by mixing the id into the seed, so streams are
// statistically independent and a draw on one stream never perturbs another.
// Simulation splits one stream per (episode, channel) pair: channel 0 drives
// latent/state/action draws, channel 1 drives proxy draws. Replacing the
// proxy mechanism therefore leaves the state sequence bit-identical.
//
// All outputs are pure 64-bit integer arithmetic; uniform doubles take the
// top 53 bits, so sequences are identical across platforms.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53-bit resolution.
    double next_unit();

    // Index sampled by CDF inversion; probs need not be normalized exactly,
    // trailing mass goes to the last index.
    int next_categorical(std::span<const double> probs);

    double next_normal(double mean, double stddev);

    static std::uint64_t mix(std::uint64_t x);

  private:
    std::uint64_t state_;
};

// Stable 64-bit key for composite stream ids, e.g. (episode, channel).
std::uint64_t stream_key(std::uint64_t a, std::uint64_t b);

}  // namespace causil
