#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>

namespace secrelay {

// Deterministic Gaussian source. Every consumer goes through this class so
// that a (seed, substream) pair pins the exact sample sequence on any
// platform: mt19937_64 is bit-exact per the standard and both the uniform
// mapping and the polar transform below avoid library-dependent code paths.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed, std::uint64_t substream = 0);

    // Uniform on [0, 1) from the top 53 bits of one engine draw.
    double uniform();

    // Standard normal via the Marsaglia polar method. Draws come in pairs;
    // the spare is cached, so consecutive calls consume it in order.
    double normal();

    // Fills dst with i.i.d. complex Gaussians of unit total variance
    // (re and im each N(0, 1/2)). One polar round per entry.
    void fill_complex_unit(std::span<std::complex<double>> dst);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Stateless seed combiner for derived streams (per-row, per-curve seeds).
// splitmix64 finalizer over the running mix; mix_seed(s, a, b) != mix_seed(s, b, a).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b);

}  // namespace secrelay
