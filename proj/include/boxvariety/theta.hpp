// Jacobi theta series with certified truncation, second-kind thetas, the
// principal square root, and empirical multiplier/automorphy factors.
//
// Convention: theta_{a,b}(z) = sum_n exp(pi*i*(n+a/2)^2 z + pi*i*b*(n+a/2))
// over all integers n, for the characteristics (0,0), (1,0), (0,1). These are
// the classical theta constants theta_3, theta_2, theta_4 at nome
// q = exp(pi*i*z); see DLMF chapter 20 for their standard identities.
//
// Truncation: terms decay like t^(mu^2) with t = exp(-pi Im z), so the tail
// beyond |mu| = mu0 is bounded by the geometric comparison
//     2 t^(mu0^2) / (1 - t^(2 mu0)).
// Every evaluation returns the bound it achieved.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "boxvariety/common.hpp"
#include "boxvariety/modular.hpp"

namespace boxvariety::theta {

/// Theta characteristic: one of (0,0), (1,0), (0,1).
struct ThetaChar {
    int a = 0;
    int b = 0;

    constexpr ThetaChar() = default;
    constexpr ThetaChar(int a_, int b_) : a(a_), b(b_) {
        const bool ok = (a == 0 && b == 0) || (a == 1 && b == 0) || (a == 0 && b == 1);
        if (!ok) throw std::invalid_argument("ThetaChar: must be (0,0), (1,0) or (0,1)");
    }
};

inline constexpr ThetaChar kChar00{0, 0};
inline constexpr ThetaChar kChar10{1, 0};
inline constexpr ThetaChar kChar01{0, 1};

struct TruncationBudget {
    double target_abs_error = 1e-15;
    std::size_t max_terms = 1'000'000;

    void validate() const {
        if (!(target_abs_error > 0.0))
            throw std::invalid_argument("TruncationBudget: target_abs_error must be positive");
        if (max_terms < 1)
            throw std::invalid_argument("TruncationBudget: max_terms must be at least 1");
    }
};

/// A theta value together with its truncation certificate.
struct ThetaEval {
    Cx value;
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

/// Principal branch of the square root: positive real part away from the
/// negative real axis, and i*sqrt(|a|) for real negative a.
inline Cx principal_sqrt(Cx a) {
    if (a == Cx(0.0, 0.0))
        throw std::domain_error("principal_sqrt: undefined at 0");
    if (a.imag() == 0.0 && a.real() < 0.0)
        return Cx(0.0, std::sqrt(-a.real()));
    return std::sqrt(Cx(a.real(), a.imag()));  // strips a negative zero imag
}

namespace detail {

inline double tail_bound(double t, double mu0) {
    // 2 t^(mu0^2) / (1 - t^(2 mu0)); t in (0,1), mu0 > 0
    const double top = 2.0 * std::pow(t, mu0 * mu0);
    const double den = 1.0 - std::pow(t, 2.0 * mu0);
    if (!(den > 0.0)) return HUGE_VAL;
    return top / den;
}

}  // namespace detail

/// Symmetric truncated series; the cutoff is the smallest one whose
/// geometric tail bound meets the budget.
inline ThetaEval theta_series(ThetaChar ch, const UpperHalfPoint& z,
                              const TruncationBudget& budget = {}) {
    budget.validate();
    const double y = z.value.imag();
    const double t = std::exp(-std::numbers::pi * y);
    const double half = ch.a ? 0.5 : 0.0;

    // included indices: |n + half| <= M + half, i.e. n in [-M-a, M]
    auto excluded_mu = [&](long m) { return static_cast<double>(m) + 1.0 + half; };
    long m = static_cast<long>(std::ceil(
        std::sqrt(std::max(0.0, std::log(2.0 / budget.target_abs_error)) /
                  (std::numbers::pi * y))));
    while (m > 0 && detail::tail_bound(t, excluded_mu(m - 1)) <= budget.target_abs_error)
        --m;
    while (detail::tail_bound(t, excluded_mu(m)) > budget.target_abs_error) {
        ++m;
        if (static_cast<std::size_t>(2 * m + 2) > budget.max_terms)
            throw TruncationError("theta_series: budget unreachable within max_terms");
    }
    const std::size_t term_count = static_cast<std::size_t>(2 * m + 1 + ch.a);
    if (term_count > budget.max_terms)
        throw TruncationError("theta_series: budget unreachable within max_terms");

    const Cx ipi(0.0, std::numbers::pi);
    auto term = [&](double mu) { return std::exp(ipi * (mu * mu * z.value + ch.b * mu)); };

    // sum smallest terms first
    Cx acc(0.0, 0.0);
    for (long k = m; k >= 1; --k) {
        const double mu = static_cast<double>(k) + half;
        acc += term(mu) + term(-mu);
    }
    if (ch.a) {
        acc += term(0.5) + term(-0.5);
    } else {
        acc += term(0.0);
    }
    return {acc, detail::tail_bound(t, excluded_mu(m)), term_count};
}

/// theta of the second kind: the series at doubled argument. Only the
/// characteristics (0,0) and (1,0) occur.
inline ThetaEval theta_second_kind(ThetaChar ch, const UpperHalfPoint& z,
                                   const TruncationBudget& budget = {}) {
    if (ch.b != 0)
        throw std::invalid_argument("theta_second_kind: characteristic must have b = 0");
    return theta_series(ch, UpperHalfPoint(2.0 * z.value), budget);
}

/// principal_sqrt(cz+d)^r for the half-weight numerator r.
inline Cx automorphy_factor(const modular::ModularMatrix& m, const UpperHalfPoint& z, int r) {
    const Cx den = modular::to_cx(m.c) * z.value + modular::to_cx(m.d);
    if (den == Cx(0.0, 0.0))
        throw std::domain_error("automorphy_factor: cz+d vanishes");
    const Cx root = principal_sqrt(den);
    Cx out(1.0, 0.0);
    for (int k = 0; k < std::abs(r); ++k) out *= root;
    return r < 0 ? 1.0 / out : out;
}

/// theta(Mz) / (sqrt(cz+d) * theta(z)) at a sample z. For the theta group and
/// characteristic (0,0) this is the multiplier system value, an 8th root of
/// unity independent of z.
inline Cx empirical_multiplier(ThetaChar ch, const modular::ModularMatrix& m,
                               const UpperHalfPoint& z, const TruncationBudget& budget = {}) {
    const Cx denom_theta = theta_series(ch, z, budget).value;
    if (std::abs(denom_theta) < 1e-12)
        throw IllConditionedSample("empirical_multiplier: theta(z) too small, resample");
    const Cx numer = theta_series(ch, modular::mobius(m, z), budget).value;
    return numer / (automorphy_factor(m, z, 1) * denom_theta);
}

}  // namespace boxvariety::theta
