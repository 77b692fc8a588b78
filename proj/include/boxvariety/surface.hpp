// The box variety: the projective surface in P^6 cut out by the four quadrics
//
//   W1^2 + W2^2        = Z3^2
//   W1^2        + W3^2 = Z2^2
//          W2^2 + W3^2 = Z1^2
//   W1^2 + W2^2 + W3^2 = C^2
//
// relating a cuboid's edges (W), face diagonals (Z) and long diagonal (C).
// This header carries the point model, the theta parametrization of the
// surface, relation residuals, the Jacobian-based node test, the exact
// enumeration of the 48 nodes, and the Z3-negating involution.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "boxvariety/common.hpp"
#include "boxvariety/cyclotomic.hpp"
#include "boxvariety/theta.hpp"

namespace boxvariety::surface {

inline constexpr std::size_t kCoords = 7;  // order: Z1, Z2, Z3, W1, W2, W3, C

/// Projective point of the box variety. The stored representative scales the
/// coordinate of largest modulus to 1 (ties broken in coordinate order).
struct BoxPoint {
    std::array<Cx, kCoords> v;

    static BoxPoint from_raw(const std::array<Cx, kCoords>& raw) {
        return BoxPoint{normalize_projective(raw)};
    }

    const Cx& z1() const { return v[0]; }
    const Cx& z2() const { return v[1]; }
    const Cx& z3() const { return v[2]; }
    const Cx& w1() const { return v[3]; }
    const Cx& w2() const { return v[4]; }
    const Cx& w3() const { return v[5]; }
    const Cx& c() const { return v[6]; }
};

struct ResidualReport {
    double r1 = 0.0;  // |W1^2 + W2^2 - Z3^2|
    double r2 = 0.0;  // |W1^2 + W3^2 - Z2^2|
    double r3 = 0.0;  // |W2^2 + W3^2 - Z1^2|
    double r4 = 0.0;  // |W1^2 + W2^2 + W3^2 - C^2|

    double max() const { return std::max(std::max(r1, r2), std::max(r3, r4)); }
};

inline ResidualReport residuals(const BoxPoint& p) {
    const Cx w1s = p.w1() * p.w1(), w2s = p.w2() * p.w2(), w3s = p.w3() * p.w3();
    return {std::abs(w1s + w2s - p.z3() * p.z3()),
            std::abs(w1s + w3s - p.z2() * p.z2()),
            std::abs(w2s + w3s - p.z1() * p.z1()),
            std::abs(w1s + w2s + w3s - p.c() * p.c())};
}

/// Raw (un-normalized) coordinates of the theta parametrization. These are
/// honest products of theta values, which is what identities between modular
/// forms must be tested on.
inline std::array<Cx, kCoords> parametrize_raw(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                               const theta::TruncationBudget& budget = {}) {
    using theta::kChar00;
    using theta::kChar01;
    using theta::kChar10;
    const Cx t00z = theta::theta_series(kChar00, z, budget).value;
    const Cx t10z = theta::theta_series(kChar10, z, budget).value;
    const Cx t01z = theta::theta_series(kChar01, z, budget).value;
    const Cx t00w = theta::theta_series(kChar00, w, budget).value;
    const Cx t10w = theta::theta_series(kChar10, w, budget).value;
    const Cx t01w = theta::theta_series(kChar01, w, budget).value;
    const Cx pz = theta::theta_second_kind(kChar00, z, budget).value;  // theta00(2z)
    const Cx qz = theta::theta_second_kind(kChar10, z, budget).value;  // theta10(2z)
    const Cx pw = theta::theta_second_kind(kChar00, w, budget).value;
    const Cx qw = theta::theta_second_kind(kChar10, w, budget).value;

    return {
        t01z * t01w,                       // Z1
        t00z * t00w,                       // Z2
        t10z * t10w,                       // Z3
        qz * pw + pz * qw,                 // W1
        Cx(0.0, 1.0) * (qz * pw - pz * qw),  // W2
        pz * pw - qz * qw,                 // W3
        pz * pw + qz * qw,                 // C
    };
}

inline BoxPoint parametrize(const UpperHalfPoint& z, const UpperHalfPoint& w,
                            const theta::TruncationBudget& budget = {}) {
    return BoxPoint::from_raw(parametrize_raw(z, w, budget));
}

/// Singular values (descending) of the 4x7 Jacobian of the quadric system at
/// a variety point. Rank 3 flags a node.
inline std::array<double, 4> jacobian_singular_values(const BoxPoint& p) {
    if (residuals(p).max() >= 1e-8)
        throw std::domain_error("jacobian_singular_values: point not on the variety");
    Eigen::MatrixXcd j(4, 7);
    j.setZero();
    const Cx two(2.0, 0.0);
    j(0, 2) = -two * p.z3(); j(0, 3) = two * p.w1(); j(0, 4) = two * p.w2();
    j(1, 1) = -two * p.z2(); j(1, 3) = two * p.w1(); j(1, 5) = two * p.w3();
    j(2, 0) = -two * p.z1(); j(2, 4) = two * p.w2(); j(2, 5) = two * p.w3();
    j(3, 3) = two * p.w1(); j(3, 4) = two * p.w2(); j(3, 5) = two * p.w3();
    j(3, 6) = -two * p.c();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(j);
    std::array<double, 4> out{};
    for (Eigen::Index k = 0; k < 4; ++k) out[static_cast<std::size_t>(k)] = svd.singularValues()(k);
    return out;
}

/// Node test calibrated against the exact 48-point list: the Jacobian drops
/// to rank 3 exactly at the nodes.
inline bool is_node(const BoxPoint& p) {
    const auto sv = jacobian_singular_values(p);
    return sv[3] < 1e-8 * (sv[0] + 1.0);
}

/// Exact variety point with entries in Q(i) (the nodes only need {0,+-1,+-i}).
using ExactPoint = std::array<modular::CyclotomicScalar, kCoords>;

/// Scales an exact point so its first nonzero coordinate is 1; this is the
/// canonical representative used for set comparisons.
inline ExactPoint canonical_exact(const ExactPoint& p) {
    for (const auto& x : p) {
        if (!x.is_zero()) {
            const modular::CyclotomicScalar inv = x.inverse();
            ExactPoint out;
            for (std::size_t k = 0; k < kCoords; ++k) out[k] = inv * p[k];
            return out;
        }
    }
    throw std::domain_error("canonical_exact: zero point");
}

inline BoxPoint to_box_point(const ExactPoint& p) {
    std::array<Cx, kCoords> raw;
    for (std::size_t k = 0; k < kCoords; ++k) raw[k] = p[k].embed();
    return BoxPoint::from_raw(raw);
}

/// The 48 nodes, constructed exactly. They fall into two closed-form
/// families indexed by k in {1,2,3}:
///   (i)  Z_k = 0, the two other W's zero, W_k = 1, remaining Z's and C in
///        {+-1}: 8 points each;
///   (ii) W_k = Z_k = C = 0, the two other W's in ratio +-i, with the paired
///        Z's forced to +-i and +-1 by the quadrics: 8 points each.
inline std::vector<ExactPoint> singular_points_exact() {
    using modular::CyclotomicScalar;
    const CyclotomicScalar zero = CyclotomicScalar::zero();
    const CyclotomicScalar one = CyclotomicScalar::one();
    const CyclotomicScalar im = CyclotomicScalar::i();

    std::vector<ExactPoint> out;
    out.reserve(48);
    const std::array<std::size_t, 3> zidx = {0, 1, 2};
    const std::array<std::size_t, 3> widx = {3, 4, 5};

    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i0 = (k + 1) % 3, i1 = (k + 2) % 3;
        const std::size_t za = std::min(i0, i1), zb = std::max(i0, i1);
        // family (i): W_k = 1, Z_a, Z_b, C = +-1
        for (int s0 = 0; s0 < 2; ++s0)
            for (int s1 = 0; s1 < 2; ++s1)
                for (int s2 = 0; s2 < 2; ++s2) {
                    ExactPoint p{zero, zero, zero, zero, zero, zero, zero};
                    p[widx[k]] = one;
                    p[zidx[za]] = s0 ? -one : one;
                    p[zidx[zb]] = s1 ? -one : one;
                    p[6] = s2 ? -one : one;
                    out.push_back(canonical_exact(p));
                }
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i0 = (k + 1) % 3, i1 = (k + 2) % 3;
        const std::size_t wa = std::min(i0, i1), wb = std::max(i0, i1);
        // family (ii): W_k = Z_k = C = 0, W_a = 1, W_b = +-i; the quadrics
        // force Z_a = +-i and Z_b = +-1
        for (int s0 = 0; s0 < 2; ++s0)
            for (int s1 = 0; s1 < 2; ++s1)
                for (int s2 = 0; s2 < 2; ++s2) {
                    ExactPoint p{zero, zero, zero, zero, zero, zero, zero};
                    p[widx[wa]] = one;
                    p[widx[wb]] = s0 ? -im : im;
                    p[zidx[wa]] = s1 ? -im : im;
                    p[zidx[wb]] = s2 ? -one : one;
                    out.push_back(canonical_exact(p));
                }
    }
    return out;
}

inline std::vector<BoxPoint> singular_points() {
    std::vector<BoxPoint> out;
    out.reserve(48);
    for (const auto& p : singular_points_exact()) out.push_back(to_box_point(p));
    return out;
}

/// The involution negating Z3; induced on parameters by z -> z+4.
inline BoxPoint sigma(const BoxPoint& p) {
    std::array<Cx, kCoords> raw = p.v;
    raw[2] = -raw[2];
    return BoxPoint::from_raw(raw);
}

}  // namespace boxvariety::surface
