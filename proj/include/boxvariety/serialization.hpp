// JSON wire formats: points as arrays of [re, im] pairs in coordinate order,
// exact matrices as grids of cyclotomic coefficient 4-tuples with a dyadic
// exponent, curve tags as {family, M, k}, and suite reports.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "boxvariety/common.hpp"
#include "boxvariety/curves.hpp"
#include "boxvariety/cyclotomic.hpp"
#include "boxvariety/kummer.hpp"
#include "boxvariety/surface.hpp"

namespace boxvariety {

using Json = nlohmann::json;

inline Json to_json(const Cx& x) { return Json::array({x.real(), x.imag()}); }

inline Json to_json(const surface::BoxPoint& p) {
    Json out = Json::array();
    for (const auto& x : p.v) out.push_back(to_json(x));
    return out;
}

/// Entry (c0 + c1 z + c2 z^2 + c3 z^3)/2^m as {"c": [4 integers], "m": m}.
/// Only dyadic-denominator scalars (all exact matrices here) are
/// serializable.
inline Json to_json(const modular::CyclotomicScalar& s) {
    using boost::multiprecision::cpp_int;
    cpp_int twopow = 1;
    int m = 0;
    for (const auto& q : s.coeffs()) {
        cpp_int den = boost::multiprecision::denominator(q);
        int e = 0;
        while (den % 2 == 0) {
            den /= 2;
            ++e;
        }
        if (den != 1)
            throw std::invalid_argument("serialize: cyclotomic entry has non-dyadic denominator");
        m = std::max(m, e);
    }
    for (int k = 0; k < m; ++k) twopow *= 2;
    Json coeffs = Json::array();
    for (const auto& q : s.coeffs()) {
        const cpp_int num = boost::multiprecision::numerator(q) *
                            (twopow / boost::multiprecision::denominator(q));
        coeffs.push_back(num.str());
    }
    return Json{{"c", coeffs}, {"m", m}};
}

inline Json to_json(const modular::CyclotomicMatrix& mat) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < mat.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < mat.size(); ++c) row.push_back(to_json(mat.at(r, c)));
        rows.push_back(row);
    }
    return Json{{"size", mat.size()}, {"entries", rows}};
}

inline Json to_json(const curves::CurveTag& tag) {
    switch (tag.family) {
        case curves::CurveTag::Family::kRationalModular:
            return Json{{"family", "rational_modular"},
                        {"M", Json::array({tag.rep.a.str(), tag.rep.b.str(), tag.rep.c.str(),
                                           tag.rep.d.str()})},
                        {"k", tag.shift}};
        case curves::CurveTag::Family::kBoundaryElliptic:
            return Json{{"family", "boundary_elliptic"},
                        {"factor", tag.component == 0 ? "left" : "right"},
                        {"cusp_class", tag.shift}};
        case curves::CurveTag::Family::kDiagonalElliptic:
            return Json{{"family", "diagonal_elliptic"}, {"class", tag.component}};
    }
    throw std::invalid_argument("serialize: unknown curve family");
}

}  // namespace boxvariety
