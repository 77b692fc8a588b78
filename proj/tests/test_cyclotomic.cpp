#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "boxvariety/cyclotomic.hpp"
#include "boxvariety/sampling.hpp"

using boxvariety::Cx;
using boxvariety::Sampler;
namespace md = boxvariety::modular;
using md::BigRat;
using md::CyclotomicMatrix;
using md::CyclotomicScalar;

namespace {

CyclotomicScalar random_scalar(Sampler& rng, long height) {
    auto coeff = [&] {
        const long num = static_cast<long>(rng.index(2 * height + 1)) - height;
        const long den = 1 + static_cast<long>(rng.index(4));
        return BigRat(num, den);
    };
    return {coeff(), coeff(), coeff(), coeff()};
}

}  // namespace

TEST_CASE("zeta powers") {
    CHECK(CyclotomicScalar::zeta_pow(0) == CyclotomicScalar::one());
    CHECK(CyclotomicScalar::zeta_pow(2) == CyclotomicScalar::i());
    CHECK(CyclotomicScalar::zeta_pow(8) == CyclotomicScalar::one());
    CHECK(CyclotomicScalar::zeta_pow(-1) == CyclotomicScalar::zeta_pow(7));
    CHECK(CyclotomicScalar::zeta_pow(4) == -CyclotomicScalar::one());
    // zeta^2 = i by embedding
    CHECK(std::abs(CyclotomicScalar::zeta_pow(1).embed() -
                   std::exp(Cx(0.0, std::numbers::pi / 4.0))) < 1e-15);
}

TEST_CASE("inv_sqrt2 squares to one half") {
    const CyclotomicScalar h = CyclotomicScalar::inv_sqrt2();
    CHECK(h * h == CyclotomicScalar(BigRat(1, 2)));
    CHECK(std::abs(h.embed() - Cx(std::numbers::sqrt2 / 2.0, 0.0)) < 1e-15);
}

TEST_CASE("field arithmetic closes and inverts") {
    Sampler rng(3);
    for (int k = 0; k < 200; ++k) {
        const CyclotomicScalar x = random_scalar(rng, 6);
        const CyclotomicScalar y = random_scalar(rng, 6);
        CHECK((x + y) - y == x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == CyclotomicScalar::one());
            CHECK((y / x) * x == y);
        }
    }
    CHECK_THROWS_AS(CyclotomicScalar::zero().inverse(), std::domain_error);
}

TEST_CASE("embedding matches exact arithmetic") {
    Sampler rng(5);
    for (int k = 0; k < 300; ++k) {
        const CyclotomicScalar x = random_scalar(rng, 8);
        const CyclotomicScalar y = random_scalar(rng, 8);
        const Cx lhs = (x * y).embed();
        const Cx rhs = x.embed() * y.embed();
        CHECK(std::abs(lhs - rhs) < 1e-14 * (std::abs(rhs) + 1.0));
    }
}

TEST_CASE("matrix multiplication is associative with identity") {
    Sampler rng(7);
    auto random_matrix = [&](std::size_t n) {
        CyclotomicMatrix m(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_scalar(rng, 2);
        return m;
    };
    for (int k = 0; k < 20; ++k) {
        const CyclotomicMatrix a = random_matrix(4), b = random_matrix(4), c = random_matrix(4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * CyclotomicMatrix::identity(4) == a);
        CHECK(CyclotomicMatrix::identity(4) * a == a);
    }
}

TEST_CASE("matrix inverse") {
    CyclotomicMatrix m(3);
    m.at(0, 0) = CyclotomicScalar::i();
    m.at(0, 2) = CyclotomicScalar::one();
    m.at(1, 1) = CyclotomicScalar::inv_sqrt2();
    m.at(2, 0) = CyclotomicScalar::one();
    CHECK(m * m.inverse() == CyclotomicMatrix::identity(3));
    CHECK(m.inverse() * m == CyclotomicMatrix::identity(3));

    CyclotomicMatrix sing(2);
    sing.at(0, 0) = CyclotomicScalar::one();
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("projective normal form fixes the first nonzero entry") {
    CyclotomicMatrix m(2);
    m.at(0, 1) = CyclotomicScalar::i();
    m.at(1, 0) = CyclotomicScalar::one();
    const CyclotomicMatrix n = m.projective_normal_form();
    CHECK(n.at(0, 1) == CyclotomicScalar::one());
    CHECK(n.at(1, 0) == CyclotomicScalar::zeta_pow(-2));
}
