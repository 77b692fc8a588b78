// Deterministic seeded sampling for the verification suites. The uniform
// mapping is spelled out by hand so identical seeds give identical samples on
// every platform (std::uniform_real_distribution is implementation-defined).

#pragma once

#include <cstdint>
#include <random>

#include "boxvariety/common.hpp"

namespace boxvariety {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        // 53 random mantissa bits in [0,1)
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    std::uint64_t index(std::uint64_t bound) { return eng_() % bound; }

    /// Sample from the suite region Re in [-2,2], Im in [0.5,3].
    UpperHalfPoint z() { return UpperHalfPoint(uniform(-2.0, 2.0), uniform(0.5, 3.0)); }

    /// Sample with a caller-chosen imaginary band, for suites whose
    /// downstream charts degrade near a cusp.
    UpperHalfPoint z_band(double im_lo, double im_hi) {
        return UpperHalfPoint(uniform(-2.0, 2.0), uniform(im_lo, im_hi));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace boxvariety
