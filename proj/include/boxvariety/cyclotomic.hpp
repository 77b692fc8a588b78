// Exact arithmetic in Q(zeta_8) and square matrices over it.
//
// A scalar is c0 + c1 z + c2 z^2 + c3 z^3 with z = exp(i pi/4), z^4 = -1, and
// rational coefficients. This field holds every entry the surface actions
// need: the Gaussian units and 1/sqrt(2) = (z - z^3)/2.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxvariety/common.hpp"

namespace boxvariety::modular {

using BigRat = boost::multiprecision::cpp_rational;

class CyclotomicScalar {
public:
    CyclotomicScalar() : c_{} {}
    explicit CyclotomicScalar(BigRat rational) : c_{} { c_[0] = std::move(rational); }
    CyclotomicScalar(BigRat c0, BigRat c1, BigRat c2, BigRat c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static CyclotomicScalar zero() { return {}; }
    static CyclotomicScalar one() { return CyclotomicScalar(BigRat(1)); }

    /// zeta^k for any integer k (zeta^8 = 1).
    static CyclotomicScalar zeta_pow(long k) {
        k = ((k % 8) + 8) % 8;
        CyclotomicScalar out;
        if (k < 4)
            out.c_[static_cast<std::size_t>(k)] = 1;
        else
            out.c_[static_cast<std::size_t>(k - 4)] = -1;
        return out;
    }

    static CyclotomicScalar i() { return zeta_pow(2); }

    /// 1/sqrt(2) = (zeta - zeta^3)/2.
    static CyclotomicScalar inv_sqrt2() {
        return {BigRat(0), BigRat(1, 2), BigRat(0), BigRat(-1, 2)};
    }

    const std::array<BigRat, 4>& coeffs() const { return c_; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }

    CyclotomicScalar operator+(const CyclotomicScalar& o) const {
        CyclotomicScalar out;
        for (std::size_t k = 0; k < 4; ++k) out.c_[k] = c_[k] + o.c_[k];
        return out;
    }

    CyclotomicScalar operator-(const CyclotomicScalar& o) const {
        CyclotomicScalar out;
        for (std::size_t k = 0; k < 4; ++k) out.c_[k] = c_[k] - o.c_[k];
        return out;
    }

    CyclotomicScalar operator-() const {
        CyclotomicScalar out;
        for (std::size_t k = 0; k < 4; ++k) out.c_[k] = -c_[k];
        return out;
    }

    CyclotomicScalar operator*(const CyclotomicScalar& o) const {
        std::array<BigRat, 8> raw{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (o.c_[j] == 0) continue;
                raw[i + j] += c_[i] * o.c_[j];
            }
        }
        CyclotomicScalar out;
        for (std::size_t k = 0; k < 4; ++k) out.c_[k] = raw[k] - raw[k + 4];
        return out;
    }

    CyclotomicScalar& operator+=(const CyclotomicScalar& o) { return *this = *this + o; }
    CyclotomicScalar& operator*=(const CyclotomicScalar& o) { return *this = *this * o; }

    /// Galois image under zeta -> zeta^k for odd k.
    CyclotomicScalar galois(long k) const {
        std::array<BigRat, 8> raw{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (c_[i] == 0) continue;
            raw[static_cast<std::size_t>((static_cast<long>(i) * k) % 8)] += c_[i];
        }
        CyclotomicScalar out;
        for (std::size_t t = 0; t < 4; ++t) out.c_[t] = raw[t] - raw[t + 4];
        return out;
    }

    /// Multiplicative inverse through the product of Galois conjugates: the
    /// full norm down to Q is rational and easy to divide by.
    CyclotomicScalar inverse() const {
        if (is_zero()) throw std::domain_error("CyclotomicScalar: inverse of zero");
        const CyclotomicScalar cof = galois(3) * galois(5) * galois(7);
        const CyclotomicScalar nrm = *this * cof;
        if (!(nrm.c_[1] == 0 && nrm.c_[2] == 0 && nrm.c_[3] == 0) || nrm.c_[0] == 0)
            throw std::logic_error("CyclotomicScalar: norm must be a nonzero rational");
        CyclotomicScalar out;
        for (std::size_t k = 0; k < 4; ++k) out.c_[k] = cof.c_[k] / nrm.c_[0];
        return out;
    }

    CyclotomicScalar operator/(const CyclotomicScalar& o) const { return *this * o.inverse(); }

    bool operator==(const CyclotomicScalar& o) const { return c_ == o.c_; }
    bool operator!=(const CyclotomicScalar& o) const { return !(*this == o); }
    bool operator<(const CyclotomicScalar& o) const { return c_ < o.c_; }

    Cx embed() const {
        const double s = std::numbers::sqrt2 / 2.0;
        const double r0 = static_cast<double>(c_[0]);
        const double r1 = static_cast<double>(c_[1]);
        const double r2 = static_cast<double>(c_[2]);
        const double r3 = static_cast<double>(c_[3]);
        return Cx(r0 + s * (r1 - r3), r2 + s * (r1 + r3));
    }

    std::string str() const {
        auto piece = [](const BigRat& q) {
            return boost::multiprecision::numerator(q).str() + "/" +
                   boost::multiprecision::denominator(q).str();
        };
        return "[" + piece(c_[0]) + "," + piece(c_[1]) + "," + piece(c_[2]) + "," +
               piece(c_[3]) + "]";
    }

private:
    std::array<BigRat, 4> c_;
};

class CyclotomicMatrix {
public:
    CyclotomicMatrix(std::size_t n, CyclotomicScalar fill = CyclotomicScalar::zero())
        : n_(n), e_(n * n, fill) {}

    static CyclotomicMatrix identity(std::size_t n) {
        CyclotomicMatrix m(n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = CyclotomicScalar::one();
        return m;
    }

    std::size_t size() const { return n_; }

    CyclotomicScalar& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const CyclotomicScalar& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    CyclotomicMatrix operator*(const CyclotomicMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("CyclotomicMatrix: size mismatch");
        CyclotomicMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const CyclotomicScalar& left = at(i, k);
                if (left.is_zero()) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    out.at(i, j) += left * o.at(k, j);
                }
            }
        return out;
    }

    std::vector<CyclotomicScalar> apply(const std::vector<CyclotomicScalar>& v) const {
        if (v.size() != n_) throw std::invalid_argument("CyclotomicMatrix: vector size mismatch");
        std::vector<CyclotomicScalar> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (at(i, j).is_zero() || v[j].is_zero()) continue;
                out[i] += at(i, j) * v[j];
            }
        return out;
    }

    /// Exact inverse by Gauss-Jordan elimination over the field.
    CyclotomicMatrix inverse() const {
        CyclotomicMatrix a(*this);
        CyclotomicMatrix inv = identity(n_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && a.at(pivot, col).is_zero()) ++pivot;
            if (pivot == n_) throw std::domain_error("CyclotomicMatrix: singular");
            if (pivot != col) {
                for (std::size_t j = 0; j < n_; ++j) {
                    std::swap(a.at(pivot, j), a.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            }
            const CyclotomicScalar scale = a.at(col, col).inverse();
            for (std::size_t j = 0; j < n_; ++j) {
                a.at(col, j) *= scale;
                inv.at(col, j) *= scale;
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                const CyclotomicScalar f = a.at(r, col);
                for (std::size_t j = 0; j < n_; ++j) {
                    a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                    inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Scales so the first nonzero entry in row-major order becomes 1; the
    /// canonical representative for projective matrix comparison.
    CyclotomicMatrix projective_normal_form() const {
        for (const auto& x : e_) {
            if (!x.is_zero()) {
                const CyclotomicScalar inv = x.inverse();
                CyclotomicMatrix out(n_);
                for (std::size_t k = 0; k < n_ * n_; ++k) out.e_[k] = inv * e_[k];
                return out;
            }
        }
        throw std::domain_error("CyclotomicMatrix: zero matrix has no normal form");
    }

    bool operator==(const CyclotomicMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const CyclotomicMatrix& o) const { return !(*this == o); }
    bool operator<(const CyclotomicMatrix& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return e_ < o.e_;
    }

private:
    std::size_t n_;
    std::vector<CyclotomicScalar> e_;
};

}  // namespace boxvariety::modular
