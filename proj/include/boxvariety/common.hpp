// Shared scalar types, error types and projective-point helpers used across
// the library.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace boxvariety {

using Cx = std::complex<double>;

/// A point of the upper half-plane. Construction enforces Im > 0 and
/// finiteness, so downstream code never has to re-check.
struct UpperHalfPoint {
    Cx value;

    explicit UpperHalfPoint(Cx z) : value(z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::domain_error("UpperHalfPoint: coordinates must be finite");
        if (!(z.imag() > 0.0))
            throw std::domain_error("UpperHalfPoint: imaginary part must be positive");
    }

    UpperHalfPoint(double re, double im) : UpperHalfPoint(Cx(re, im)) {}
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllConditionedSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SnapFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scales a homogeneous coordinate tuple so the first coordinate of largest
/// modulus becomes 1 (ties resolved by coordinate order).
template <std::size_t N>
std::array<Cx, N> normalize_projective(const std::array<Cx, N>& v) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < N; ++k)
        if (std::abs(v[k]) > std::abs(v[best])) best = k;
    if (std::abs(v[best]) == 0.0)
        throw std::domain_error("normalize_projective: zero vector");
    std::array<Cx, N> out;
    for (std::size_t k = 0; k < N; ++k) out[k] = v[k] / v[best];
    return out;
}

/// Distance between two projective points: aligns p against q's largest
/// coordinate and returns the largest coordinate mismatch, relative to the
/// largest coordinate magnitude. Insensitive to which representative was
/// chosen on either side.
template <std::size_t N>
double projective_distance(const std::array<Cx, N>& p, const std::array<Cx, N>& q) {
    std::size_t m = 0;
    double pmax = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        if (std::abs(q[k]) > std::abs(q[m])) m = k;
        pmax = std::max(pmax, std::abs(p[k]));
    }
    if (std::abs(q[m]) == 0.0 || pmax == 0.0)
        throw std::domain_error("projective_distance: zero vector");
    const Cx scale = p[m] / q[m];
    double worst = 0.0;
    for (std::size_t k = 0; k < N; ++k)
        worst = std::max(worst, std::abs(p[k] - scale * q[k]));
    return worst / pmax;
}

}  // namespace boxvariety
