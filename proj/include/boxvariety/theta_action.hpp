// The exact 5x5 right action of the theta group on the basis
//   theta00(z), theta10(z), theta01(z), theta00(2z), theta10(2z),
// assembled by composing the generator matrices along a generator word, plus
// a numeric cross-check against direct theta evaluation.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "boxvariety/common.hpp"
#include "boxvariety/cyclotomic.hpp"
#include "boxvariety/modular.hpp"
#include "boxvariety/theta.hpp"

namespace boxvariety::modular {

/// Action of A = (1 2; 0 1): diag(1, i, 1, 1, -1).
inline CyclotomicMatrix action_of_a_power(long e) {
    CyclotomicMatrix m = CyclotomicMatrix::identity(5);
    m.at(1, 1) = CyclotomicScalar::zeta_pow(2 * e);  // i^e
    m.at(4, 4) = CyclotomicScalar::zeta_pow(4 * e);  // (-1)^e
    return m;
}

/// Action of S = (0 -1; 1 0): fixes theta00, swaps theta10 <-> theta01, and
/// mixes the second-kind pair through (1/sqrt2) * (1 1; 1 -1).
inline CyclotomicMatrix action_of_s() {
    CyclotomicMatrix m(5);
    m.at(0, 0) = CyclotomicScalar::one();
    m.at(1, 2) = CyclotomicScalar::one();
    m.at(2, 1) = CyclotomicScalar::one();
    const CyclotomicScalar h = CyclotomicScalar::inv_sqrt2();
    m.at(3, 3) = h;
    m.at(3, 4) = h;
    m.at(4, 3) = h;
    m.at(4, 4) = -h;
    return m;
}

/// Exact matrix of f -> f|M on the 5-dimensional theta basis, for M in the
/// theta group. -I acts trivially here (the S action is an involution), so
/// the word's sign is irrelevant and A-powers only matter mod 4.
inline CyclotomicMatrix action_matrix5(const ModularMatrix& m) {
    const ThetaWord word = theta_group_word(m);
    CyclotomicMatrix out = CyclotomicMatrix::identity(5);
    for (const auto& tok : word.tokens) {
        if (tok.kind == WordToken::Kind::kAPower) {
            const long e = static_cast<long>(mod_nonneg(tok.exponent, 4));
            out = out * action_of_a_power(e);
        } else {
            out = out * action_of_s();
        }
    }
    return out;
}

/// Evaluates the five basis functions at Mz directly and through
/// multiplier * automorphy * (row action); returns the largest discrepancy
/// relative to the largest basis magnitude.
inline double verify_action_numerically(const ModularMatrix& m, const UpperHalfPoint& z,
                                        const theta::TruncationBudget& budget = {}) {
    using theta::kChar00;
    using theta::kChar01;
    using theta::kChar10;

    auto basis = [&](const UpperHalfPoint& x) {
        return std::array<Cx, 5>{
            theta::theta_series(kChar00, x, budget).value,
            theta::theta_series(kChar10, x, budget).value,
            theta::theta_series(kChar01, x, budget).value,
            theta::theta_second_kind(kChar00, x, budget).value,
            theta::theta_second_kind(kChar10, x, budget).value,
        };
    };

    const std::array<Cx, 5> at_z = basis(z);
    const std::array<Cx, 5> at_mz = basis(mobius(m, z));
    // theta00 transforms with the multiplier system itself, so the first
    // basis element recovers v(M) at this sample
    const Cx v = theta::empirical_multiplier(kChar00, m, z, budget);
    const Cx factor = v * theta::automorphy_factor(m, z, 1);

    const CyclotomicMatrix act = action_matrix5(m);
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        Cx row(0.0, 0.0);
        for (std::size_t j = 0; j < 5; ++j) {
            if (act.at(i, j).is_zero()) continue;
            row += act.at(i, j).embed() * at_z[j];
        }
        worst = std::max(worst, std::abs(factor * row - at_mz[i]));
    }
    return worst;
}

}  // namespace boxvariety::modular
