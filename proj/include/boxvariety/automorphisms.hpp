// Surface automorphisms induced by matrix pairs congruent mod 2 and by the
// factor swap. Their linear action on the seven coordinates is recovered by a
// least-squares fit over generic parameter samples, snapped onto the dyadic
// cyclotomic lattice, and then used exactly: node orbits and the projective
// closure of the generated matrix group.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <array>
#include <cstddef>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxvariety/common.hpp"
#include "boxvariety/cyclotomic.hpp"
#include "boxvariety/modular.hpp"
#include "boxvariety/sampling.hpp"
#include "boxvariety/surface.hpp"

namespace boxvariety::automorphisms {

using modular::CyclotomicMatrix;
using modular::CyclotomicScalar;

struct SurfaceAutomorphism {
    bool is_swap = false;
    std::optional<modular::MatrixPair> pair;

    static SurfaceAutomorphism swap_factors() { return {true, std::nullopt}; }

    static SurfaceAutomorphism from_pair(modular::MatrixPair p) {
        if (!modular::delta_membership(p, 1, 2))
            throw std::invalid_argument(
                "SurfaceAutomorphism: pair components must be congruent mod 2");
        return {false, std::move(p)};
    }

    std::string name() const {
        if (is_swap) return "swap";
        return pair->first.str() + "x" + pair->second.str();
    }
};

inline std::pair<UpperHalfPoint, UpperHalfPoint> act_on_params(const SurfaceAutomorphism& aut,
                                                               const UpperHalfPoint& z,
                                                               const UpperHalfPoint& w) {
    if (aut.is_swap) return {w, z};
    return {modular::mobius(aut.pair->first, z), modular::mobius(aut.pair->second, w)};
}

/// The generator set used throughout: (S,S) and (T1,T1) span the diagonal,
/// (A,E),(E,A),(B,E),(E,B) span the level-2 principal factors, and the swap
/// doubles the group.
inline std::vector<SurfaceAutomorphism> standard_generators(bool include_swap = true) {
    using modular::MatrixPair;
    const auto e = modular::ModularMatrix::identity();
    std::vector<SurfaceAutomorphism> out;
    out.push_back(SurfaceAutomorphism::from_pair(MatrixPair{modular::gen_s(), modular::gen_s()}));
    out.push_back(SurfaceAutomorphism::from_pair(MatrixPair{modular::gen_t1(), modular::gen_t1()}));
    out.push_back(SurfaceAutomorphism::from_pair(MatrixPair{modular::gen_a(), e}));
    out.push_back(SurfaceAutomorphism::from_pair(MatrixPair{e, modular::gen_a()}));
    out.push_back(SurfaceAutomorphism::from_pair(MatrixPair{modular::gen_b(), e}));
    out.push_back(SurfaceAutomorphism::from_pair(MatrixPair{e, modular::gen_b()}));
    if (include_swap) out.push_back(SurfaceAutomorphism::swap_factors());
    return out;
}

using Matrix7 = Eigen::Matrix<Cx, 7, 7>;

struct FitResult {
    Matrix7 matrix;     // scaled to unit largest modulus
    double residual;    // worst projective mismatch across the samples
};

/// Least-squares recovery of the projective 7x7 action: each sample (z_j,w_j)
/// contributes the 21 bilinear conditions (A u)_k v_l - (A u)_l v_k = 0 where
/// u, v are the normalized input and image points. The matrix is the right
/// singular vector of the stacked system at the smallest singular value.
inline FitResult fit_projective_matrix(const SurfaceAutomorphism& aut, std::size_t samples = 12,
                                       std::uint64_t seed = 42,
                                       const theta::TruncationBudget& budget = {}) {
    if (samples < 8)
        throw std::invalid_argument("fit_projective_matrix: need at least 8 samples");
    Sampler rng(seed);
    std::vector<std::array<Cx, 7>> ins, outs;
    ins.reserve(samples);
    outs.reserve(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const UpperHalfPoint z = rng.z(), w = rng.z();
        const auto [zi, wi] = act_on_params(aut, z, w);
        ins.push_back(normalize_projective(surface::parametrize_raw(z, w, budget)));
        outs.push_back(normalize_projective(surface::parametrize_raw(zi, wi, budget)));
    }

    Eigen::MatrixXcd sys(static_cast<Eigen::Index>(21 * samples), 49);
    sys.setZero();
    Eigen::Index row = 0;
    for (std::size_t j = 0; j < samples; ++j) {
        for (std::size_t k = 0; k < 7; ++k)
            for (std::size_t l = k + 1; l < 7; ++l) {
                // coefficient of A(k,m): u_m * v_l ; of A(l,m): -u_m * v_k
                for (std::size_t m = 0; m < 7; ++m) {
                    sys(row, static_cast<Eigen::Index>(7 * k + m)) += ins[j][m] * outs[j][l];
                    sys(row, static_cast<Eigen::Index>(7 * l + m)) -= ins[j][m] * outs[j][k];
                }
                ++row;
            }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeThinV);
    const Eigen::VectorXcd flat = svd.matrixV().col(48);

    Matrix7 a;
    for (std::size_t k = 0; k < 7; ++k)
        for (std::size_t m = 0; m < 7; ++m)
            a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m)) =
                flat(static_cast<Eigen::Index>(7 * k + m));
    a /= a.cwiseAbs().maxCoeff();

    double worst = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
        Eigen::Matrix<Cx, 7, 1> u;
        for (std::size_t m = 0; m < 7; ++m) u(static_cast<Eigen::Index>(m)) = ins[j][m];
        const Eigen::Matrix<Cx, 7, 1> img = a * u;
        std::array<Cx, 7> img_arr;
        for (std::size_t m = 0; m < 7; ++m) img_arr[m] = img(static_cast<Eigen::Index>(m));
        worst = std::max(worst, projective_distance(img_arr, outs[j]));
    }
    if (worst >= 1e-7)
        throw std::runtime_error("fit_projective_matrix: action of " + aut.name() +
                                 " is not linear on the coordinates (residual " +
                                 std::to_string(worst) + ")");
    return {a, worst};
}

namespace detail {

/// All lattice elements (c0 + c1 z + c2 z^2 + c3 z^3)/2^m within `tol` of the
/// target, deduplicated by exact value.
inline std::vector<CyclotomicScalar> snap_candidates(Cx target, double tol, long height,
                                                     long max_dyadic) {
    const double s = std::numbers::sqrt2 / 2.0;
    std::vector<CyclotomicScalar> found;
    for (long m = 0; m <= max_dyadic; ++m) {
        const double scale = static_cast<double>(1L << m);
        const double x = target.real() * scale;
        const double y = target.imag() * scale;
        const double stol = tol * scale;
        for (long c1 = -height; c1 <= height; ++c1)
            for (long c3 = -height; c3 <= height; ++c3) {
                const double xr = x - s * static_cast<double>(c1 - c3);
                const double yr = y - s * static_cast<double>(c1 + c3);
                const long c0 = std::lround(xr);
                const long c2 = std::lround(yr);
                if (std::abs(c0) > height || std::abs(c2) > height) continue;
                const double dx = xr - static_cast<double>(c0);
                const double dy = yr - static_cast<double>(c2);
                if (std::sqrt(dx * dx + dy * dy) >= stol) continue;
                using modular::BigRat;
                const BigRat den(1, 1L << m);
                CyclotomicScalar cand(BigRat(c0) * den, BigRat(c1) * den, BigRat(c2) * den,
                                      BigRat(c3) * den);
                bool dup = false;
                for (const auto& f : found) dup = dup || f == cand;
                if (!dup) found.push_back(cand);
            }
    }
    return found;
}

}  // namespace detail

/// Snaps a fitted matrix onto the dyadic cyclotomic lattice
/// { (c0+c1 z+c2 z^2+c3 z^3)/2^m : |c_j| <= height, m <= max_dyadic } after
/// normalizing the first nonzero entry to 1. Each entry must have exactly one
/// lattice point within `tol`; ambiguity or absence raises SnapFailure. On
/// failure with the default bounds, the bounds are enlarged once (logged).
inline CyclotomicMatrix snap_to_cyclotomic(const Matrix7& a, double tol = 1e-6, long height = 8,
                                           long max_dyadic = 3) {
    // first nonzero entry in row-major order; entries below the noise floor
    // count as zero
    const double floor = std::max(tol * 10.0, 1e-9);
    Cx lead(0.0, 0.0);
    for (Eigen::Index r = 0; r < 7 && lead == Cx(0.0, 0.0); ++r)
        for (Eigen::Index c = 0; c < 7 && lead == Cx(0.0, 0.0); ++c)
            if (std::abs(a(r, c)) > floor) lead = a(r, c);
    if (lead == Cx(0.0, 0.0)) throw SnapFailure("snap_to_cyclotomic: matrix is numerically zero");

    CyclotomicMatrix out(7);
    for (Eigen::Index r = 0; r < 7; ++r)
        for (Eigen::Index c = 0; c < 7; ++c) {
            const Cx t = a(r, c) / lead;
            auto cands = detail::snap_candidates(t, tol, height, max_dyadic);
            if (cands.empty() && height <= 8) {
                std::cerr << "snap_to_cyclotomic: enlarging lattice bounds for entry (" << r
                          << "," << c << ")\n";
                return snap_to_cyclotomic(a, tol, 2 * height, max_dyadic + 1);
            }
            if (cands.size() != 1) {
                std::ostringstream msg;
                msg << "snap_to_cyclotomic: entry (" << r << "," << c << ") = " << t.real()
                    << (t.imag() < 0 ? "" : "+") << t.imag() << "i has " << cands.size()
                    << " lattice candidates within " << tol;
                throw SnapFailure(msg.str());
            }
            out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = cands.front();
        }
    return out.projective_normal_form();
}

inline CyclotomicMatrix fitted_exact_matrix(const SurfaceAutomorphism& aut,
                                            std::uint64_t seed = 42) {
    return snap_to_cyclotomic(fit_projective_matrix(aut, 12, seed).matrix);
}

/// Orbit of a point under the exact matrix group generated by `gens`,
/// as canonical exact points.
inline std::set<surface::ExactPoint> node_orbit(const std::vector<CyclotomicMatrix>& gens,
                                                const surface::ExactPoint& seed,
                                                std::size_t cap = 10'000) {
    std::set<surface::ExactPoint> seen;
    std::vector<surface::ExactPoint> frontier;
    const surface::ExactPoint start = surface::canonical_exact(seed);
    seen.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        std::vector<surface::ExactPoint> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                std::vector<CyclotomicScalar> vec(p.begin(), p.end());
                const auto img = g.apply(vec);
                surface::ExactPoint q;
                std::copy(img.begin(), img.end(), q.begin());
                q = surface::canonical_exact(q);
                if (seen.insert(q).second) {
                    next.push_back(q);
                    if (seen.size() > cap)
                        throw std::runtime_error("node_orbit: orbit exceeded cap (bad snap?)");
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

/// Seed node [1:1:0:0:0:1:1], the image of the cusp at (i*inf, i*inf).
inline surface::ExactPoint seed_node() {
    const CyclotomicScalar zero = CyclotomicScalar::zero();
    const CyclotomicScalar one = CyclotomicScalar::one();
    return {one, one, zero, zero, zero, one, one};
}

struct ClosureReport {
    std::size_t order = 0;
    std::size_t reference_without_swap = 768;
    std::size_t reference_with_swap = 1536;
    bool matches_reference = false;
    std::string summary;
};

/// Breadth-first closure of the projectively-normalized exact matrices.
inline ClosureReport group_closure_order(const std::vector<CyclotomicMatrix>& gens,
                                         bool swap_included, std::size_t cap = 100'000) {
    std::set<CyclotomicMatrix> seen;
    std::vector<CyclotomicMatrix> frontier;
    const CyclotomicMatrix id = CyclotomicMatrix::identity(7);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<CyclotomicMatrix> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                CyclotomicMatrix y = (x * g).projective_normal_form();
                if (seen.insert(y).second) {
                    next.push_back(std::move(y));
                    if (seen.size() > cap)
                        throw std::runtime_error("group_closure_order: closure exceeded cap");
                }
            }
        }
        frontier = std::move(next);
    }
    ClosureReport report;
    report.order = seen.size();
    const std::size_t ref = swap_included ? report.reference_with_swap
                                          : report.reference_without_swap;
    report.matches_reference = (report.order == ref);
    std::ostringstream msg;
    msg << "projective closure order " << report.order << "; reference "
        << report.reference_without_swap << " (without swap) / " << report.reference_with_swap
        << " (with swap)";
    if (!report.matches_reference)
        msg << "; discrepancy factor " << (ref > report.order ? ref / report.order
                                                              : report.order / ref);
    report.summary = msg.str();
    return report;
}

}  // namespace boxvariety::automorphisms
