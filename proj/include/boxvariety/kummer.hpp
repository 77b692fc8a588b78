// The quadric-intersection elliptic curve a^2 = c^2 + d^2, b^2 = c^2 - d^2
// spanned by theta constants of one boundary component, its Weierstrass model
// y^2 z = x^3 - x z^2, the involutions tau(b -> -b) and rho(c,d -> -c,-d),
// and the chord-tangent group law used to identify them with translation and
// negation.

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxvariety/common.hpp"
#include "boxvariety/theta.hpp"

namespace boxvariety::surface {

/// Point [a:b:c:d] of the quadric intersection, normalized like BoxPoint.
struct AbcdPoint {
    std::array<Cx, 4> v;

    static AbcdPoint from_raw(const std::array<Cx, 4>& raw) {
        return AbcdPoint{normalize_projective(raw)};
    }

    const Cx& a() const { return v[0]; }
    const Cx& b() const { return v[1]; }
    const Cx& c() const { return v[2]; }
    const Cx& d() const { return v[3]; }

    std::array<double, 2> relation_residuals() const {
        return {std::abs(a() * a() - c() * c() - d() * d()),
                std::abs(b() * b() - c() * c() + d() * d())};
    }
};

/// Point [x:y:z] of y^2 z = x^3 - x z^2.
struct WeierstrassPoint {
    std::array<Cx, 3> v;

    static WeierstrassPoint from_raw(const std::array<Cx, 3>& raw) {
        return WeierstrassPoint{normalize_projective(raw)};
    }

    static WeierstrassPoint infinity() { return WeierstrassPoint{{Cx(0), Cx(1), Cx(0)}}; }

    const Cx& x() const { return v[0]; }
    const Cx& y() const { return v[1]; }
    const Cx& z() const { return v[2]; }

    bool is_infinity(double tol = 1e-10) const {
        return std::abs(v[2]) < tol && std::abs(v[0]) < tol;
    }

    double curve_residual() const {
        return std::abs(y() * y() * z() - x() * x() * x() + x() * z() * z());
    }
};

/// [theta00(z) : theta01(z) : theta00(2z) : theta10(2z)].
inline AbcdPoint abcd_from_z(const UpperHalfPoint& z, const theta::TruncationBudget& budget = {}) {
    return AbcdPoint::from_raw({
        theta::theta_series(theta::kChar00, z, budget).value,
        theta::theta_series(theta::kChar01, z, budget).value,
        theta::theta_second_kind(theta::kChar00, z, budget).value,
        theta::theta_second_kind(theta::kChar10, z, budget).value,
    });
}

/// The linear substitution x = a-b, y = 2d, z = 2c-a-b onto the Weierstrass
/// model. Its single base point [1:1:1:0] goes to the point at infinity (the
/// limit along the curve as d -> 0 there).
inline WeierstrassPoint weierstrass(const AbcdPoint& p) {
    const auto rel = p.relation_residuals();
    if (std::max(rel[0], rel[1]) >= 1e-8)
        throw std::domain_error("weierstrass: input violates the quadric relations");
    const Cx x = p.a() - p.b();
    const Cx y = 2.0 * p.d();
    const Cx z = 2.0 * p.c() - p.a() - p.b();
    if (std::abs(x) < 1e-12 && std::abs(y) < 1e-12 && std::abs(z) < 1e-12) {
        const std::array<Cx, 4> base = {Cx(1), Cx(1), Cx(1), Cx(0)};
        if (projective_distance(p.v, base) < 1e-10) return WeierstrassPoint::infinity();
        throw std::domain_error("weierstrass: degenerate chart away from [1:1:1:0]");
    }
    return WeierstrassPoint::from_raw({x, y, z});
}

enum class AbcdInvolution { kTau, kRho };

/// tau negates b; rho negates c and d. Both preserve the quadrics.
inline AbcdPoint apply_involution(const AbcdPoint& p, AbcdInvolution which) {
    std::array<Cx, 4> raw = p.v;
    if (which == AbcdInvolution::kTau) {
        raw[1] = -raw[1];
    } else {
        raw[2] = -raw[2];
        raw[3] = -raw[3];
    }
    return AbcdPoint::from_raw(raw);
}

inline WeierstrassPoint elliptic_negate(const WeierstrassPoint& p) {
    return WeierstrassPoint::from_raw({p.x(), -p.y(), p.z()});
}

/// Chord-tangent addition on y^2 z = x^3 - x z^2 with identity [0:1:0].
inline WeierstrassPoint elliptic_add(const WeierstrassPoint& p, const WeierstrassPoint& q) {
    if (p.curve_residual() >= 1e-8 || q.curve_residual() >= 1e-8)
        throw std::domain_error("elliptic_add: point off the curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    const Cx x1 = p.x() / p.z(), y1 = p.y() / p.z();
    const Cx x2 = q.x() / q.z(), y2 = q.y() / q.z();

    Cx slope;
    if (std::abs(x1 - x2) < 1e-10 * (std::abs(x1) + std::abs(x2) + 1.0)) {
        if (std::abs(y1 + y2) < 1e-10 * (std::abs(y1) + std::abs(y2) + 1.0))
            return WeierstrassPoint::infinity();  // includes doubling 2-torsion
        slope = (3.0 * x1 * x1 - 1.0) / (2.0 * y1);
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }
    const Cx x3 = slope * slope - x1 - x2;
    const Cx y3 = slope * (x1 - x3) - y1;
    return WeierstrassPoint::from_raw({x3, y3, Cx(1)});
}

/// Exact case analysis showing rho acts without fixed points. A projective
/// fixed point needs (a,b,-c,-d) = lambda (a,b,c,d) with lambda = +1 or -1;
/// the eigenvalue condition zeroes half the coordinates, and the two quadric
/// relations
///   a^2 - c^2 - d^2 = 0,   b^2 - c^2 + d^2 = 0
/// are linear in the squares of the survivors. A fixed point exists exactly
/// when that linear system has a nonzero solution (over C every value is a
/// square), so the check is an exact integer rank computation.
inline bool rho_has_fixed_point() {
    const std::array<std::array<int, 4>, 2> relations = {{
        {1, 0, -1, -1},   // a^2 - c^2 - d^2
        {0, 1, -1, +1},   // b^2 - c^2 + d^2
    }};

    for (const int lambda : {+1, -1}) {
        // (lambda - 1) a = 0 and (lambda + 1) c = 0 style conditions
        std::array<bool, 4> forced_zero = {lambda != 1, lambda != 1, lambda != -1,
                                           lambda != -1};
        std::vector<std::size_t> survivors;
        for (std::size_t v = 0; v < 4; ++v)
            if (!forced_zero[v]) survivors.push_back(v);

        // restrict the relations to the surviving squares
        std::array<std::array<long, 4>, 2> m{};
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < survivors.size(); ++c)
                m[r][c] = relations[r][survivors[c]];

        // fraction-free elimination; integer arithmetic stays exact here
        std::size_t rank = 0;
        for (std::size_t col = 0; col < survivors.size() && rank < 2; ++col) {
            std::size_t pivot = rank;
            while (pivot < 2 && m[pivot][col] == 0) ++pivot;
            if (pivot == 2) continue;
            std::swap(m[pivot], m[rank]);
            for (std::size_t r = 0; r < 2; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                const long a = m[rank][col], b = m[r][col];
                for (std::size_t c = 0; c < survivors.size(); ++c)
                    m[r][c] = m[r][c] * a - m[rank][c] * b;
            }
            ++rank;
        }
        if (rank < survivors.size()) return true;  // nontrivial kernel: fixed point
    }
    return false;
}

}  // namespace boxvariety::surface
