// Integer 2x2 unimodular matrices, congruence-subgroup membership, Moebius
// action, coset representatives of Gamma[4]/Gamma[8], and generator-word
// decomposition in the theta group.
//
// Entries are arbitrary-precision integers: generator words of quite moderate
// length already overflow 64 bits.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxvariety/common.hpp"

namespace boxvariety::modular {

using BigInt = boost::multiprecision::cpp_int;

/// Element of SL(2,Z). The determinant-1 invariant is enforced on
/// construction.
struct ModularMatrix {
    BigInt a, b, c, d;

    ModularMatrix(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1)
            throw std::invalid_argument("ModularMatrix: determinant must be 1");
    }

    static ModularMatrix identity() { return {1, 0, 0, 1}; }

    ModularMatrix operator*(const ModularMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    ModularMatrix inverse() const { return {d, -b, -c, a}; }

    ModularMatrix negated() const { return {-a, -b, -c, -d}; }

    bool operator==(const ModularMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const ModularMatrix& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + a.str() + "," + b.str() + ";" + c.str() + "," + d.str() + ")";
    }
};

/// Pair of SL(2,Z) matrices acting on the two half-plane factors.
struct MatrixPair {
    ModularMatrix first;
    ModularMatrix second;
};

// Fixed matrices that recur throughout: generators of the theta group, of
// Gamma[4]/Gamma[8], and of Gamma[2] (up to sign).
inline ModularMatrix gen_a() { return {1, 2, 0, 1}; }       // z -> z+2
inline ModularMatrix gen_s() { return {0, -1, 1, 0}; }      // z -> -1/z
inline ModularMatrix gen_t1() { return {1, 1, 0, 1}; }      // z -> z+1
inline ModularMatrix gen_b() { return {1, 0, 2, 1}; }
inline ModularMatrix gen_t() { return {1, 4, 0, 1}; }
inline ModularMatrix gen_tp() { return {1, 0, 4, 1}; }
inline ModularMatrix gen_r() { return {5, 8, 8, 13}; }

inline BigInt mod_nonneg(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

/// Congruence-subgroup labels. `level` is the N parameter; the theta group is
/// the Igusa group of level 1 and needs none.
struct GroupLabel {
    enum class Kind { kPrincipal, kGamma0, kGamma1, kIgusa, kTheta, kGammaPrime4 };

    Kind kind;
    long level;

    static GroupLabel principal(long n) { return make(Kind::kPrincipal, n); }
    static GroupLabel gamma0(long n) { return make(Kind::kGamma0, n); }
    static GroupLabel gamma1(long n) { return make(Kind::kGamma1, n); }
    static GroupLabel igusa(long n) { return make(Kind::kIgusa, n); }
    static GroupLabel theta_group() { return {Kind::kTheta, 1}; }
    static GroupLabel gamma_prime4() { return {Kind::kGammaPrime4, 4}; }

private:
    static GroupLabel make(Kind k, long n) {
        if (n < 1) throw std::invalid_argument("GroupLabel: level must be positive");
        return {k, n};
    }
};

inline bool membership(const ModularMatrix& m, const GroupLabel& g) {
    const BigInt n = g.level;
    switch (g.kind) {
        case GroupLabel::Kind::kPrincipal:
            return mod_nonneg(m.a - 1, n) == 0 && mod_nonneg(m.d - 1, n) == 0 &&
                   mod_nonneg(m.b, n) == 0 && mod_nonneg(m.c, n) == 0;
        case GroupLabel::Kind::kGamma0:
            return mod_nonneg(m.c, n) == 0;
        case GroupLabel::Kind::kGamma1:
            return mod_nonneg(m.a - 1, n) == 0 && mod_nonneg(m.d - 1, n) == 0 &&
                   mod_nonneg(m.c, n) == 0;
        case GroupLabel::Kind::kIgusa:
            // Gamma[N] with the extra conditions ab = cd = 0 mod 2N
            return membership(m, GroupLabel::principal(g.level)) &&
                   mod_nonneg(m.a * m.b, 2 * n) == 0 && mod_nonneg(m.c * m.d, 2 * n) == 0;
        case GroupLabel::Kind::kTheta:
            return mod_nonneg(m.a * m.b, 2) == 0 && mod_nonneg(m.c * m.d, 2) == 0;
        case GroupLabel::Kind::kGammaPrime4:
            return membership(m, GroupLabel::principal(4)) &&
                   mod_nonneg(m.a + m.b + m.c, 8) == 1;
    }
    throw std::invalid_argument("membership: unknown group label");
}

/// Pairs of Gamma[N] matrices congruent to each other mod N'. Requires N | N'.
inline bool delta_membership(const MatrixPair& p, long n, long n_prime) {
    if (n < 1 || n_prime < 1 || n_prime % n != 0)
        throw std::invalid_argument("delta_membership: need N | N'");
    const GroupLabel gn = GroupLabel::principal(n);
    if (!membership(p.first, gn) || !membership(p.second, gn)) return false;
    const BigInt m = n_prime;
    return mod_nonneg(p.first.a - p.second.a, m) == 0 &&
           mod_nonneg(p.first.b - p.second.b, m) == 0 &&
           mod_nonneg(p.first.c - p.second.c, m) == 0 &&
           mod_nonneg(p.first.d - p.second.d, m) == 0;
}

inline Cx to_cx(const BigInt& x) { return Cx(static_cast<double>(x), 0.0); }

/// (az+b)/(cz+d). The half-plane is preserved since det = 1.
inline UpperHalfPoint mobius(const ModularMatrix& m, const UpperHalfPoint& z) {
    const Cx num = to_cx(m.a) * z.value + to_cx(m.b);
    const Cx den = to_cx(m.c) * z.value + to_cx(m.d);
    return UpperHalfPoint(num / den);
}

/// The 8 coset representatives of Gamma[4]/Gamma[8]: products T^e1 T'^e2 R^e3
/// over e in {0,1}^3, in binary order of (e1,e2,e3).
inline std::array<ModularMatrix, 8> gamma4_mod_gamma8_reps() {
    const ModularMatrix t = gen_t(), tp = gen_tp(), r = gen_r();
    std::array<ModularMatrix, 8> out = {
        ModularMatrix::identity(), ModularMatrix::identity(), ModularMatrix::identity(),
        ModularMatrix::identity(), ModularMatrix::identity(), ModularMatrix::identity(),
        ModularMatrix::identity(), ModularMatrix::identity()};
    for (int e = 0; e < 8; ++e) {
        ModularMatrix m = ModularMatrix::identity();
        if (e & 4) m = m * t;
        if (e & 2) m = m * tp;
        if (e & 1) m = m * r;
        out[static_cast<std::size_t>(e)] = m;
    }
    return out;
}

/// One factor of a theta-group word: either a power of A = (1 2; 0 1) or a
/// single S = (0 -1; 1 0).
struct WordToken {
    enum class Kind { kAPower, kS };
    Kind kind;
    BigInt exponent;  // nonzero for kAPower, unused for kS

    static WordToken a_power(BigInt e) { return {Kind::kAPower, std::move(e)}; }
    static WordToken s() { return {Kind::kS, 0}; }
};

/// A word in the theta-group generators together with a sign, so that
/// sign * (product of tokens) reproduces the decomposed matrix. -I is
/// absorbed into the sign (S^2 = -I).
struct ThetaWord {
    bool negated = false;
    std::vector<WordToken> tokens;

    ModularMatrix reconstruct() const {
        ModularMatrix m = ModularMatrix::identity();
        for (const auto& t : tokens) {
            if (t.kind == WordToken::Kind::kAPower)
                m = m * ModularMatrix{1, 2 * t.exponent, 0, 1};
            else
                m = m * gen_s();
        }
        return negated ? m.negated() : m;
    }
};

/// Decomposes a theta-group element into A-powers and S-factors by Euclidean
/// reduction on the bottom row: A-shifts change d by multiples of 2c and an
/// S-swap rotates (c,d) -> (-d,c). |c| strictly decreases, so the loop
/// terminates after O(log max|entry|) rounds.
inline ThetaWord theta_group_word(const ModularMatrix& m) {
    if (!membership(m, GroupLabel::theta_group()))
        throw std::invalid_argument("theta_group_word: matrix not in the theta group");

    ModularMatrix work = m;
    // Steps applied on the right while reducing; entry true => S^{-1} was
    // used, false => A^{-shift}.
    std::vector<std::pair<bool, BigInt>> used;
    while (work.c != 0) {
        const BigInt twoc = 2 * work.c;
        // nearest integer to d / 2c; the parity of the theta group ensures
        // |d - 2nc| < |c| afterwards
        BigInt q = work.d / twoc;
        BigInt best = q;
        for (BigInt cand = q - 1; cand <= q + 1; ++cand)
            if (abs(work.d - twoc * cand) < abs(work.d - twoc * best)) best = cand;
        if (best != 0) {
            work = work * ModularMatrix{1, -2 * best, 0, 1};
            used.emplace_back(false, best);
        }
        work = work * ModularMatrix{0, 1, -1, 0};  // S^{-1}
        used.emplace_back(true, 0);
    }

    ThetaWord word;
    word.negated = (work.a == -1);
    const BigInt btop = word.negated ? -work.b : work.b;
    if (btop % 2 != 0 || abs(work.a) != 1)
        throw std::logic_error("theta_group_word: reduction failed");
    if (btop != 0) word.tokens.push_back(WordToken::a_power(btop / 2));
    // invert the reduction steps in reverse order: A^{-n} inverts to A^{n},
    // S^{-1} inverts to S
    for (auto it = used.rbegin(); it != used.rend(); ++it) {
        if (it->first)
            word.tokens.push_back(WordToken::s());
        else
            word.tokens.push_back(WordToken::a_power(it->second));
    }
    if (word.reconstruct() != m)
        throw std::logic_error("theta_group_word: verification failed");
    return word;
}

}  // namespace boxvariety::modular
