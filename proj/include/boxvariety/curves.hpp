// Explicit curve families on the box variety: the 32 rational modular curves
// w = Mz + k and their quartic identity, the Satake-boundary product
// identity, the diagonal elliptic curve w = z + 1, and the degree-genus bound
// for curves with bijective normalization.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boxvariety/common.hpp"
#include "boxvariety/modular.hpp"
#include "boxvariety/surface.hpp"
#include "boxvariety/theta.hpp"

namespace boxvariety::curves {

struct CurveTag {
    enum class Family { kRationalModular, kBoundaryElliptic, kDiagonalElliptic };

    Family family;
    modular::ModularMatrix rep;  // rational-modular coset representative
    int shift;                   // translation k in {0,2,4,6}
    int component;               // boundary factor / diagonal class index

    static CurveTag rational_modular(modular::ModularMatrix m, int k) {
        if (k < 0 || k > 6 || k % 2 != 0)
            throw std::invalid_argument("CurveTag: shift must lie in {0,2,4,6}");
        if (!modular::membership(m, modular::GroupLabel::principal(4)))
            throw std::invalid_argument("CurveTag: representative must lie in Gamma[4]");
        return {Family::kRationalModular, std::move(m), k, 0};
    }

    static CurveTag boundary_elliptic(int factor, int cusp_class) {
        if (factor != 0 && factor != 1)
            throw std::invalid_argument("CurveTag: boundary factor is 0 (left) or 1 (right)");
        return {Family::kBoundaryElliptic, modular::ModularMatrix::identity(), cusp_class, factor};
    }

    static CurveTag diagonal_elliptic(int class_index) {
        return {Family::kDiagonalElliptic, modular::ModularMatrix::identity(), 0, class_index};
    }
};

/// All 32 rational-modular tags: the 8 coset representatives of
/// Gamma[4]/Gamma[8] crossed with the shifts {0,2,4,6}.
inline std::vector<CurveTag> all_rational_tags() {
    std::vector<CurveTag> out;
    out.reserve(32);
    for (const auto& rep : modular::gamma4_mod_gamma8_reps())
        for (int k = 0; k <= 6; k += 2) out.push_back(CurveTag::rational_modular(rep, k));
    return out;
}

/// Factor relating the quartic theta combination to W1*W2*W3*C. The sign is
/// pinned by the orientation of W2 in the parametrization; it was fixed by an
/// independent high-precision evaluation.
inline constexpr Cx kQuarticIdentityFactor{0.0, -4.0};  // -4i

/// Both sides of the quartic identity on raw theta products:
/// theta00(z)^4 theta01(w)^4 - theta01(z)^4 theta00(w)^4 versus
/// kQuarticIdentityFactor * W1 W2 W3 C.
inline std::pair<Cx, Cx> quartic_identity_parts(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                                const theta::TruncationBudget& budget = {}) {
    using theta::kChar00;
    using theta::kChar01;
    const Cx az = theta::theta_series(kChar00, z, budget).value;
    const Cx bz = theta::theta_series(kChar01, z, budget).value;
    const Cx aw = theta::theta_series(kChar00, w, budget).value;
    const Cx bw = theta::theta_series(kChar01, w, budget).value;
    auto quart = [](Cx x) { return x * x * x * x; };
    const Cx lhs = quart(az) * quart(bw) - quart(bz) * quart(aw);

    const auto raw = surface::parametrize_raw(z, w, budget);
    const Cx rhs = kQuarticIdentityFactor * raw[3] * raw[4] * raw[5] * raw[6];
    return {lhs, rhs};
}

inline double rational_curve_identity_residual(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                               const theta::TruncationBudget& budget = {}) {
    const auto [lhs, rhs] = quartic_identity_parts(z, w, budget);
    return std::abs(lhs - rhs);
}

/// |W1 W2 W3 C| on raw coordinates at (z, Mz + k); vanishes along the tagged
/// rational curve.
inline double on_rational_curve(const UpperHalfPoint& z, const CurveTag& tag,
                                const theta::TruncationBudget& budget = {}) {
    if (tag.family != CurveTag::Family::kRationalModular)
        throw std::invalid_argument("on_rational_curve: tag must be rational-modular");
    const UpperHalfPoint w(modular::mobius(tag.rep, z).value + static_cast<double>(tag.shift));
    const auto raw = surface::parametrize_raw(z, w, budget);
    return std::abs(raw[3] * raw[4] * raw[5] * raw[6]);
}

/// Same product scaled by the fourth power of the coordinate magnitude, the
/// natural size of a degree-4 monomial in the raw coordinates.
inline double on_rational_curve_scaled(const UpperHalfPoint& z, const CurveTag& tag,
                                       const theta::TruncationBudget& budget = {}) {
    if (tag.family != CurveTag::Family::kRationalModular)
        throw std::invalid_argument("on_rational_curve_scaled: tag must be rational-modular");
    const UpperHalfPoint w(modular::mobius(tag.rep, z).value + static_cast<double>(tag.shift));
    const auto raw = surface::parametrize_raw(z, w, budget);
    double m = 0.0;
    for (const auto& x : raw) m = std::max(m, std::abs(x));
    const double m2 = m * m;
    return std::abs(raw[3] * raw[4] * raw[5] * raw[6]) / (1.0 + m2 * m2);
}

/// |product of the six thetas - Z1 Z2 Z3| on raw coordinates: zero by
/// construction, kept as a regression check of the coordinate wiring.
inline double boundary_identity_residual(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                         const theta::TruncationBudget& budget = {}) {
    using theta::kChar00;
    using theta::kChar01;
    using theta::kChar10;
    const Cx six = theta::theta_series(kChar00, z, budget).value *
                   theta::theta_series(kChar10, z, budget).value *
                   theta::theta_series(kChar01, z, budget).value *
                   theta::theta_series(kChar00, w, budget).value *
                   theta::theta_series(kChar10, w, budget).value *
                   theta::theta_series(kChar01, w, budget).value;
    const auto raw = surface::parametrize_raw(z, w, budget);
    return std::abs(six - raw[0] * raw[1] * raw[2]);
}

/// The five equations cutting out the diagonal elliptic curve w = z + 1,
/// evaluated on the normalized point:
///   W1 = W2,  Z1 = Z2,  sqrt2 W1 = Z3,
///   W3^2 + Z3^2 - C^2 = 0,  2 Z2^2 + Z3^2 - 2 C^2 = 0.
inline std::array<double, 5> diagonal_elliptic_residuals(const UpperHalfPoint& z,
                                                         const theta::TruncationBudget& budget = {}) {
    const UpperHalfPoint w(z.value + 1.0);
    const surface::BoxPoint p = surface::parametrize(z, w, budget);
    const Cx z3sq = p.z3() * p.z3();
    const Cx csq = p.c() * p.c();
    return {
        std::abs(p.w1() - p.w2()),
        std::abs(p.z1() - p.z2()),
        std::abs(std::numbers::sqrt2 * p.w1() - p.z3()),
        std::abs(p.w3() * p.w3() + z3sq - csq),
        std::abs(2.0 * p.z2() * p.z2() + z3sq - 2.0 * csq),
    };
}

/// Polynomial identities showing the last two curve equations follow from the
/// first three together with the box relations:
///   e4 = s4 - s1
///   e5 = 2 e1 (W1+W2) - 2 s2 + 2 s4 - 2 sqrt2 W1 e3 + e3^2
/// with e_i the curve equations and s_i the signed quadric residuals. Both
/// hold coordinatewise, so the returned residuals are pure rounding noise.
inline std::array<double, 2> diagonal_elliptic_dependency_residuals(
    const UpperHalfPoint& z, const theta::TruncationBudget& budget = {}) {
    const UpperHalfPoint w(z.value + 1.0);
    const surface::BoxPoint p = surface::parametrize(z, w, budget);
    const Cx w1s = p.w1() * p.w1(), w2s = p.w2() * p.w2(), w3s = p.w3() * p.w3();
    const Cx s1 = w1s + w2s - p.z3() * p.z3();
    const Cx s2 = w1s + w3s - p.z2() * p.z2();
    const Cx s4 = w1s + w2s + w3s - p.c() * p.c();
    const Cx e1 = p.w1() - p.w2();
    const Cx e3 = std::numbers::sqrt2 * p.w1() - p.z3();
    const Cx e4 = w3s + p.z3() * p.z3() - p.c() * p.c();
    const Cx e5 = 2.0 * p.z2() * p.z2() + p.z3() * p.z3() - 2.0 * p.c() * p.c();
    const Cx rhs5 =
        2.0 * e1 * (p.w1() + p.w2()) - 2.0 * s2 + 2.0 * s4 - 2.0 * std::numbers::sqrt2 * p.w1() * e3 + e3 * e3;
    return {std::abs(e4 - (s4 - s1)), std::abs(e5 - rhs5)};
}

struct CurveInvariants {
    long degree;
    long genus;

    CurveInvariants(long d, long g) : degree(d), genus(g) {
        if (d < 1) throw std::invalid_argument("CurveInvariants: degree must be positive");
        if (g < 0) throw std::invalid_argument("CurveInvariants: genus must be nonnegative");
    }
};

/// d <= 176 + 16 g, the degree bound for curves with bijective normalization.
inline bool degree_genus_bound(const CurveInvariants& ci) {
    return ci.degree <= 176 + 16 * ci.genus;
}

}  // namespace boxvariety::curves
