#include <catch2/catch_amalgamated.hpp>

#include "boxvariety/modular.hpp"
#include "boxvariety/sampling.hpp"

using boxvariety::Sampler;
namespace md = boxvariety::modular;
using md::GroupLabel;
using md::ModularMatrix;

TEST_CASE("determinant invariant") {
    CHECK_THROWS_AS(ModularMatrix(1, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ModularMatrix(2, 0, 0, 2), std::invalid_argument);
    CHECK(ModularMatrix(1, 4, 4, 17).a == 1);
}

TEST_CASE("membership examples") {
    const ModularMatrix m(1, 4, 4, 17);
    CHECK(md::membership(m, GroupLabel::principal(4)));
    CHECK_FALSE(md::membership(m, GroupLabel::principal(8)));
    CHECK(md::membership(md::gen_a(), GroupLabel::theta_group()));
    CHECK(md::membership(md::gen_r(), GroupLabel::principal(4)));
    CHECK(md::membership(md::gen_s(), GroupLabel::theta_group()));
    CHECK_FALSE(md::membership(md::gen_t1(), GroupLabel::theta_group()));
    CHECK(md::membership(ModularMatrix(1, 0, 4, 1), GroupLabel::gamma0(4)));
    CHECK_FALSE(md::membership(ModularMatrix(1, 0, 2, 1), GroupLabel::gamma0(4)));
    CHECK(md::membership(ModularMatrix(5, 1, 4, 1), GroupLabel::gamma1(4)));
    CHECK_FALSE(md::membership(ModularMatrix(3, 1, 8, 3), GroupLabel::gamma1(4)));
    CHECK(md::membership(ModularMatrix(3, 1, 8, 3), GroupLabel::gamma0(4)));
    // Igusa condition on top of the principal one
    CHECK(md::membership(ModularMatrix(1, 8, 0, 1), GroupLabel::igusa(4)));
    CHECK_FALSE(md::membership(md::gen_t(), GroupLabel::igusa(4)));  // ab = 4 mod 8
    CHECK(md::membership(ModularMatrix(1, 4, 0, 1), GroupLabel::igusa(2)));
    CHECK_FALSE(md::membership(ModularMatrix(1, 2, 0, 1), GroupLabel::igusa(2)));
    CHECK_THROWS_AS(GroupLabel::principal(0), std::invalid_argument);
}

TEST_CASE("gamma-prime membership") {
    const GroupLabel gp = GroupLabel::gamma_prime4();
    CHECK(md::membership(ModularMatrix::identity(), gp));
    CHECK(md::membership(md::gen_t() * md::gen_tp(), gp));
    CHECK(md::membership(md::gen_t() * md::gen_r(), gp));
    CHECK(md::membership(md::gen_tp() * md::gen_r(), gp));
    CHECK_FALSE(md::membership(md::gen_t(), gp));
    CHECK_FALSE(md::membership(md::gen_tp(), gp));
    CHECK_FALSE(md::membership(md::gen_r(), gp));
    CHECK_FALSE(md::membership(ModularMatrix(0, -1, 1, 0), gp));
}

TEST_CASE("delta membership") {
    const ModularMatrix t4(1, 4, 0, 1);
    const ModularMatrix t4p(1, 0, 4, 1);
    const ModularMatrix u(1, 8, 0, 1);
    const ModularMatrix v(1, 0, 8, 1);
    CHECK(md::delta_membership({t4, t4}, 4, 8));
    CHECK(md::delta_membership({u, v}, 4, 8));
    CHECK_FALSE(md::delta_membership({t4, t4p}, 4, 8));
    CHECK_THROWS_AS(md::delta_membership({t4, t4}, 4, 6), std::invalid_argument);
}

TEST_CASE("group closure under products and inverses") {
    Sampler rng(5);
    const std::array<ModularMatrix, 3> g4 = {md::gen_t(), md::gen_tp(), md::gen_r()};
    const GroupLabel gamma4 = GroupLabel::principal(4);
    const GroupLabel theta = GroupLabel::theta_group();
    for (int k = 0; k < 1000; ++k) {
        ModularMatrix m = ModularMatrix::identity();
        const std::size_t len = 1 + rng.index(5);
        for (std::size_t t = 0; t < len; ++t) {
            const auto& g = g4[rng.index(3)];
            m = m * (rng.index(2) == 0 ? g : g.inverse());
        }
        CHECK(md::membership(m, gamma4));
        CHECK(md::membership(m.inverse(), gamma4));
        CHECK(md::membership(m, theta));  // Gamma[4] sits inside the theta group
    }

    // same for the upper-triangular-flavored labels and the Igusa group
    const std::array<ModularMatrix, 3> g01 = {ModularMatrix(1, 1, 0, 1),
                                              ModularMatrix(1, 0, 4, 1),
                                              ModularMatrix(-1, 0, 0, -1)};
    const std::array<ModularMatrix, 2> g1 = {ModularMatrix(1, 1, 0, 1),
                                             ModularMatrix(1, 0, 4, 1)};
    const std::array<ModularMatrix, 2> gig = {ModularMatrix(1, 4, 0, 1),
                                              ModularMatrix(1, 0, 4, 1)};
    for (int k = 0; k < 300; ++k) {
        auto word = [&](const auto& gens) {
            ModularMatrix m = ModularMatrix::identity();
            const std::size_t len = 1 + rng.index(5);
            for (std::size_t t = 0; t < len; ++t) {
                const auto& g = gens[rng.index(gens.size())];
                m = m * (rng.index(2) == 0 ? g : g.inverse());
            }
            return m;
        };
        CHECK(md::membership(word(g01), GroupLabel::gamma0(4)));
        CHECK(md::membership(word(g1), GroupLabel::gamma1(4)));
        CHECK(md::membership(word(gig), GroupLabel::igusa(2)));
    }
}

TEST_CASE("pair-group closure under products and inverses") {
    Sampler rng(15);
    const ModularMatrix e = ModularMatrix::identity();
    const ModularMatrix u(1, 8, 0, 1), v(1, 0, 8, 1);
    const std::array<md::MatrixPair, 7> gens = {
        md::MatrixPair{md::gen_t(), md::gen_t()}, md::MatrixPair{md::gen_tp(), md::gen_tp()},
        md::MatrixPair{md::gen_r(), md::gen_r()}, md::MatrixPair{u, e}, md::MatrixPair{e, u},
        md::MatrixPair{v, e}, md::MatrixPair{e, v}};
    for (int k = 0; k < 300; ++k) {
        md::MatrixPair m{e, e};
        const std::size_t len = 1 + rng.index(5);
        for (std::size_t t = 0; t < len; ++t) {
            const auto& g = gens[rng.index(gens.size())];
            if (rng.index(2) == 0)
                m = {m.first * g.first, m.second * g.second};
            else
                m = {m.first * g.first.inverse(), m.second * g.second.inverse()};
        }
        CHECK(md::delta_membership(m, 4, 8));
        CHECK(md::delta_membership({m.first.inverse(), m.second.inverse()}, 4, 8));
    }
}

TEST_CASE("mobius action") {
    using boxvariety::Cx;
    using boxvariety::UpperHalfPoint;
    const UpperHalfPoint z(0.25, 1.5);
    CHECK(md::mobius(ModularMatrix::identity(), z).value == z.value);
    CHECK(std::abs(md::mobius(md::gen_s(), UpperHalfPoint(0.0, 1.0)).value - Cx(0.0, 1.0)) <
          1e-15);
    CHECK(std::abs(md::mobius(md::gen_a(), z).value - (z.value + 2.0)) < 1e-15);
}

TEST_CASE("coset representatives of Gamma[4] mod Gamma[8]") {
    const auto reps = md::gamma4_mod_gamma8_reps();
    CHECK(reps[0] == ModularMatrix::identity());
    bool has_t = false;
    for (const auto& r : reps) has_t = has_t || r == md::gen_t();
    CHECK(has_t);

    auto congruent_mod8 = [](const ModularMatrix& x, const ModularMatrix& y) {
        return md::mod_nonneg(x.a - y.a, 8) == 0 && md::mod_nonneg(x.b - y.b, 8) == 0 &&
               md::mod_nonneg(x.c - y.c, 8) == 0 && md::mod_nonneg(x.d - y.d, 8) == 0;
    };
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(md::membership(reps[i], GroupLabel::principal(4)));
        for (std::size_t j = i + 1; j < 8; ++j) CHECK_FALSE(congruent_mod8(reps[i], reps[j]));
    }

    // every Gamma[4] element matches exactly one representative mod 8
    Sampler rng(9);
    const std::array<ModularMatrix, 5> gens = {md::gen_t(), md::gen_tp(), md::gen_r(),
                                               ModularMatrix(1, 8, 0, 1),
                                               ModularMatrix(1, 0, 8, 1)};
    for (int k = 0; k < 200; ++k) {
        ModularMatrix m = ModularMatrix::identity();
        const std::size_t len = 1 + rng.index(6);
        for (std::size_t t = 0; t < len; ++t) {
            const auto& g = gens[rng.index(gens.size())];
            m = m * (rng.index(2) == 0 ? g : g.inverse());
        }
        int matches = 0;
        for (const auto& r : reps)
            if (congruent_mod8(m, r)) ++matches;
        CHECK(matches == 1);
    }
}

TEST_CASE("theta group words") {
    // the shift generator decomposes as itself
    const md::ThetaWord wa = md::theta_group_word(md::gen_a());
    REQUIRE(wa.tokens.size() == 1);
    CHECK(wa.tokens[0].kind == md::WordToken::Kind::kAPower);
    CHECK(wa.tokens[0].exponent == 1);
    CHECK_FALSE(wa.negated);

    // S^2 = -I is carried by the sign
    const ModularMatrix minus_id(-1, 0, 0, -1);
    const md::ThetaWord wneg = md::theta_group_word(minus_id);
    CHECK(wneg.negated);
    CHECK(wneg.reconstruct() == minus_id);

    const md::ThetaWord wb = md::theta_group_word(md::gen_b());
    CHECK(wb.reconstruct() == md::gen_b());

    CHECK_THROWS_AS(md::theta_group_word(md::gen_t1()), std::invalid_argument);

    Sampler rng(21);
    for (int k = 0; k < 300; ++k) {
        ModularMatrix m = ModularMatrix::identity();
        const std::size_t len = rng.index(13);
        for (std::size_t t = 0; t < len; ++t) {
            switch (rng.index(4)) {
                case 0: m = m * md::gen_a(); break;
                case 1: m = m * md::gen_a().inverse(); break;
                case 2: m = m * md::gen_s(); break;
                default: m = m * md::gen_s().inverse(); break;
            }
        }
        CHECK(md::theta_group_word(m).reconstruct() == m);
    }
}

TEST_CASE("word length stays logarithmic in the entries") {
    // a long A/S word has huge entries but a short decomposition
    ModularMatrix m = ModularMatrix::identity();
    for (int k = 0; k < 40; ++k) m = m * md::gen_a() * md::gen_s();
    const md::ThetaWord w = md::theta_group_word(m);
    CHECK(w.tokens.size() <= 90);
    CHECK(w.reconstruct() == m);
}
