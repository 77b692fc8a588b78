// Pruned exhaustive search for Euler bricks (integer edges and face
// diagonals) and perfect cuboids (space diagonal integral as well).
//
// Only primitive triples gcd(w1,w2,w3) = 1 are reported; scaled copies carry
// no new information on the projective surface. The output order is
// lexicographic in (w1,w2,w3) regardless of how many workers run.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace boxvariety::cuboid {

/// Exact integer square root when n is a perfect square. Pure integer Newton
/// iteration; no floating point anywhere near the decision. The power-of-two
/// starting point dominates sqrt(n), which keeps x + n/x below 2^33 for every
/// 64-bit input.
inline std::optional<std::uint64_t> is_perfect_square(std::uint64_t n) {
    if (n == 0) return 0;
    const int bits = std::bit_width(n);
    std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
    std::uint64_t prev = 0;
    // Newton for floor(sqrt(n)); monotone decreasing from above
    while (x != prev) {
        prev = x;
        const std::uint64_t next = (x + n / x) / 2;
        if (next >= x) break;
        x = next;
    }
    if (x * x == n) return x;
    return std::nullopt;
}

namespace detail {

// squares mod 16 lie in {0,1,4,9}; squares mod 9 lie in {0,1,4,7}
inline constexpr std::array<bool, 16> kSquareMod16 = {
    true, true, false, false, true, false, false, false,
    false, true, false, false, false, false, false, false};
inline constexpr std::array<bool, 9> kSquareMod9 = {
    true, true, false, false, true, false, false, true, false};

inline bool residue_ok(std::uint64_t n) {
    return kSquareMod16[n % 16] && kSquareMod9[n % 9];
}

inline std::optional<std::uint64_t> square_root_pruned(std::uint64_t n) {
    if (!residue_ok(n)) return std::nullopt;
    return is_perfect_square(n);
}

}  // namespace detail

enum class SearchMode { kEuler, kPerfect };

inline std::string to_string(SearchMode m) {
    return m == SearchMode::kEuler ? "euler" : "perfect";
}

struct CuboidCandidate {
    std::uint64_t w1 = 0, w2 = 0, w3 = 0;            // edges, w1 <= w2 <= w3
    std::optional<std::uint64_t> d12, d13, d23;      // face diagonals
    std::optional<std::uint64_t> space_diag;

    bool operator==(const CuboidCandidate& o) const {
        return w1 == o.w1 && w2 == o.w2 && w3 == o.w3 && d12 == o.d12 && d13 == o.d13 &&
               d23 == o.d23 && space_diag == o.space_diag;
    }
};

struct SearchConfig {
    std::uint64_t max_edge = 0;
    SearchMode mode = SearchMode::kEuler;
    unsigned worker_count = 1;
    std::string output_path;  // CSV destination; empty disables the file sink

    void validate() const {
        if (max_edge < 1) throw std::invalid_argument("SearchConfig: max_edge must be >= 1");
        if (worker_count < 1) throw std::invalid_argument("SearchConfig: need at least 1 worker");
        if (max_edge > (1ull << 31))
            throw std::invalid_argument("SearchConfig: max_edge too large for 64-bit squares");
    }
};

/// Runs the pruned search. Workers pull w1 values from a shared counter
/// (small w1 carries most of the load), buffer per-w1 results, and the
/// buffers are concatenated in w1 order, so the output is deterministic.
inline std::vector<CuboidCandidate> search(const SearchConfig& cfg) {
    cfg.validate();
    const std::uint64_t n = cfg.max_edge;
    std::vector<std::vector<CuboidCandidate>> by_w1(n + 1);
    std::atomic<std::uint64_t> next_w1{1};

    auto worker = [&]() {
        for (;;) {
            const std::uint64_t w1 = next_w1.fetch_add(1);
            if (w1 > n) return;
            auto& bucket = by_w1[w1];
            for (std::uint64_t w2 = w1; w2 <= n; ++w2) {
                const auto d12 = detail::square_root_pruned(w1 * w1 + w2 * w2);
                if (!d12) continue;  // w3 cannot repair a broken (w1,w2) face
                const std::uint64_t g12 = std::gcd(w1, w2);
                for (std::uint64_t w3 = w2; w3 <= n; ++w3) {
                    if (std::gcd(g12, w3) != 1) continue;
                    const auto d13 = detail::square_root_pruned(w1 * w1 + w3 * w3);
                    if (!d13) continue;
                    const auto d23 = detail::square_root_pruned(w2 * w2 + w3 * w3);
                    if (!d23) continue;
                    const std::uint64_t space_sq = w1 * w1 + w2 * w2 + w3 * w3;
                    const auto space = detail::square_root_pruned(space_sq);
                    if (cfg.mode == SearchMode::kPerfect && !space) continue;
                    CuboidCandidate cand{w1, w2, w3, d12, d13, d23, space};
                    // re-verify the stored diagonals before emitting
                    if (*cand.d12 * *cand.d12 != w1 * w1 + w2 * w2 ||
                        *cand.d13 * *cand.d13 != w1 * w1 + w3 * w3 ||
                        *cand.d23 * *cand.d23 != w2 * w2 + w3 * w3 ||
                        (cand.space_diag && *cand.space_diag * *cand.space_diag != space_sq))
                        throw std::logic_error("search: diagonal re-verification failed");
                    bucket.push_back(cand);
                }
            }
        }
    };

    if (cfg.worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(cfg.worker_count);
        for (unsigned k = 0; k < cfg.worker_count; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<CuboidCandidate> out;
    for (std::uint64_t w1 = 1; w1 <= n; ++w1)
        out.insert(out.end(), by_w1[w1].begin(), by_w1[w1].end());
    return out;
}

/// CSV with the fixed column set; absent diagonals are left empty.
inline void write_csv(std::ostream& os, const std::vector<CuboidCandidate>& rows,
                      SearchMode mode) {
    os << "w1,w2,w3,d12,d13,d23,space_diag,mode\n";
    auto opt = [](const std::optional<std::uint64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    for (const auto& r : rows)
        os << r.w1 << ',' << r.w2 << ',' << r.w3 << ',' << opt(r.d12) << ',' << opt(r.d13) << ','
           << opt(r.d23) << ',' << opt(r.space_diag) << ',' << to_string(mode) << '\n';
}

/// Runs the search and, when the config names an output path, writes the CSV
/// there. I/O failures surface as std::runtime_error.
inline std::vector<CuboidCandidate> search_to_csv(const SearchConfig& cfg) {
    auto rows = search(cfg);
    if (!cfg.output_path.empty()) {
        std::ofstream os(cfg.output_path);
        if (!os) throw std::runtime_error("search: cannot open " + cfg.output_path);
        write_csv(os, rows, cfg.mode);
        if (!os.good()) throw std::runtime_error("search: write failed for " + cfg.output_path);
    }
    return rows;
}

using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational point of the box variety; the four quadric relations are
/// checked on construction.
struct RationalBoxPoint {
    std::array<BigRat, 7> v;  // Z1, Z2, Z3, W1, W2, W3, C

    explicit RationalBoxPoint(std::array<BigRat, 7> coords) : v(std::move(coords)) {
        const BigRat w1s = v[3] * v[3], w2s = v[4] * v[4], w3s = v[5] * v[5];
        const bool ok = (w1s + w2s == v[2] * v[2]) && (w1s + w3s == v[1] * v[1]) &&
                        (w2s + w3s == v[0] * v[0]) && (w1s + w2s + w3s == v[6] * v[6]);
        if (!ok)
            throw std::invalid_argument("RationalBoxPoint: quadric relations violated");
        bool any = false;
        for (const auto& x : v) any = any || x != 0;
        if (!any) throw std::invalid_argument("RationalBoxPoint: zero point");
    }

    /// Builds the point attached to an integer edge triple, when every
    /// diagonal is integral; a perfect cuboid would produce a point with all
    /// coordinates nonzero.
    static std::optional<RationalBoxPoint> from_edges(std::uint64_t w1, std::uint64_t w2,
                                                      std::uint64_t w3) {
        const auto z3 = is_perfect_square(w1 * w1 + w2 * w2);
        const auto z2 = is_perfect_square(w1 * w1 + w3 * w3);
        const auto z1 = is_perfect_square(w2 * w2 + w3 * w3);
        const auto c = is_perfect_square(w1 * w1 + w2 * w2 + w3 * w3);
        if (!z1 || !z2 || !z3 || !c) return std::nullopt;
        return RationalBoxPoint({BigRat(*z1), BigRat(*z2), BigRat(*z3), BigRat(w1), BigRat(w2),
                                 BigRat(w3), BigRat(*c)});
    }
};

enum class PointClass { kTrivial, kNontrivial };

/// Trivial means some coordinate vanishes; a nontrivial rational point would
/// be a perfect cuboid.
inline PointClass classify(const RationalBoxPoint& p) {
    for (const auto& x : p.v)
        if (x == 0) return PointClass::kTrivial;
    return PointClass::kNontrivial;
}

}  // namespace boxvariety::cuboid
