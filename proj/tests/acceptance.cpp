// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Tolerances are pinned here and do not react to BOX_TOL.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boxvariety/automorphisms.hpp"
#include "boxvariety/cuboid_search.hpp"
#include "boxvariety/curves.hpp"
#include "boxvariety/kummer.hpp"
#include "boxvariety/sampling.hpp"
#include "boxvariety/suites.hpp"
#include "boxvariety/surface.hpp"
#include "boxvariety/theta.hpp"
#include "boxvariety/theta_action.hpp"

namespace {

using boxvariety::Cx;
using boxvariety::Sampler;
using boxvariety::UpperHalfPoint;
namespace am = boxvariety::automorphisms;
namespace cb = boxvariety::cuboid;
namespace cv = boxvariety::curves;
namespace md = boxvariety::modular;
namespace sf = boxvariety::surface;
namespace st = boxvariety::suites;
namespace th = boxvariety::theta;

int g_failures = 0;

void report(int number, bool pass, const std::string& label, const std::string& detail) {
    std::cout << "criterion " << std::setw(2) << std::setfill('0') << number << ' '
              << (pass ? "pass" : "FAIL") << "  " << label << " (" << detail << ")\n"
              << std::setfill(' ');
    if (!pass) ++g_failures;
}

std::string residual_detail(double worst, double tol, long ms) {
    std::ostringstream os;
    os << "max residual " << std::scientific << std::setprecision(2) << worst << " vs " << tol
       << ", " << ms << " ms";
    return os.str();
}

long run_ms(const std::chrono::steady_clock::time_point& t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count());
}

void criterion_1_relations() {
    const auto rep = st::run_relations(100, 42, 1e-12);
    report(1, rep.pass && rep.elapsed_ms < 1000, "squared theta relations",
           residual_detail(rep.max_residual, rep.tolerance, rep.elapsed_ms));
}

void criterion_2_inversion() {
    const auto rep = st::run_inversion(100, 42, 1e-10);
    report(2, rep.pass && rep.elapsed_ms < 1000, "theta inversion formula",
           residual_detail(rep.max_residual, rep.tolerance, rep.elapsed_ms));
}

void criterion_3_multiplier() {
    const auto t0 = std::chrono::steady_clock::now();
    Sampler rng(42);
    const Cx want_s = std::exp(Cx(0.0, -std::numbers::pi / 4.0));
    double worst = 0.0;
    std::vector<Cx> va, vs;
    for (int k = 0; k < 10; ++k) {
        va.push_back(th::empirical_multiplier(th::kChar00, md::gen_a(), rng.z()));
        vs.push_back(th::empirical_multiplier(th::kChar00, md::gen_s(), rng.z()));
        worst = std::max(worst, std::abs(va.back() - Cx(1.0, 0.0)));
        worst = std::max(worst, std::abs(vs.back() - want_s));
    }
    for (int k = 1; k < 10; ++k) {
        worst = std::max(worst, std::abs(va[static_cast<std::size_t>(k)] - va[0]));
        worst = std::max(worst, std::abs(vs[static_cast<std::size_t>(k)] - vs[0]));
    }
    report(3, worst < 1e-10, "multiplier values on the generators",
           residual_detail(worst, 1e-10, run_ms(t0)));
}

void criterion_4_action() {
    const auto rep = st::run_lemma22(50, 42, 1e-9);
    report(4, rep.pass, "5x5 theta-basis action vs direct evaluation",
           residual_detail(rep.max_residual, rep.tolerance, rep.elapsed_ms));
}

void criterion_5_diagonals() {
    const auto rep = st::run_lemma23(42);
    std::ostringstream os;
    os << "exact projective match for " << rep.actual.value_or(0) << "/3 generators, "
       << rep.elapsed_ms << " ms";
    report(5, rep.pass, "level-4 sign-diagonal actions", os.str());
}

void criterion_6_parametrization() {
    const auto t0 = std::chrono::steady_clock::now();
    Sampler rng(42);
    double worst_landing = 0.0;
    for (int k = 0; k < 200; ++k)
        worst_landing = std::max(worst_landing,
                                 sf::residuals(sf::parametrize(rng.z(), rng.z())).max());
    double worst_inv = 0.0;
    for (int k = 0; k < 20; ++k) {
        const UpperHalfPoint z = rng.z(), w = rng.z();
        const md::MatrixPair pair = st::detail::random_delta48_element(rng, 4);
        const sf::BoxPoint base = sf::parametrize(z, w);
        const sf::BoxPoint moved =
            sf::parametrize(md::mobius(pair.first, z), md::mobius(pair.second, w));
        worst_inv = std::max(worst_inv, boxvariety::projective_distance(moved.v, base.v));
    }
    std::ostringstream os;
    os << "landing " << std::scientific << std::setprecision(2) << worst_landing
       << " vs 1e-10, invariance " << worst_inv << " vs 1e-8, " << run_ms(t0) << " ms";
    report(6, worst_landing < 1e-10 && worst_inv < 1e-8, "theta parametrization", os.str());
}

bool g_nodes_agree = false;

void criterion_7_nodes() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto exact = sf::singular_points_exact();
    bool ok = exact.size() == 48;
    for (const auto& p : exact) {
        const sf::BoxPoint bp = sf::to_box_point(p);
        const auto sv = sf::jacobian_singular_values(bp);
        ok = ok && sv[3] < 1e-8 * (sv[0] + 1.0) && sv[2] > 1e-8 * (sv[0] + 1.0);
    }
    std::vector<md::CyclotomicMatrix> gens;
    for (const auto& aut : am::standard_generators(true))
        gens.push_back(am::fitted_exact_matrix(aut, 42));
    const auto orbit = am::node_orbit(gens, am::seed_node());
    const std::set<sf::ExactPoint> algebraic(exact.begin(), exact.end());
    const bool orbit_matches = orbit == algebraic;
    g_nodes_agree = ok && orbit_matches;

    const long ms = run_ms(t0);
    std::ostringstream os;
    os << exact.size() << " algebraic nodes, orbit " << orbit.size()
       << (orbit_matches ? " (equal sets)" : " (MISMATCH)") << ", " << ms << " ms";
    report(7, g_nodes_agree && ms < 30'000, "singular locus enumeration", os.str());
}

void criterion_8_rational_curves() {
    const auto rep = st::run_prop26(200, 42, 1e-9);
    report(8, rep.pass, "quartic identity and 32 rational curves",
           residual_detail(rep.max_residual, rep.tolerance, rep.elapsed_ms) +
               "; constant -4i");
}

void criterion_9_diagonal_elliptic() {
    const auto rep = st::run_prop29(20, 42, 1e-9);
    report(9, rep.pass, "diagonal elliptic curve equations",
           residual_detail(rep.max_residual, rep.tolerance, rep.elapsed_ms));
}

void criterion_10_kummer() {
    const auto t0 = std::chrono::steady_clock::now();
    Sampler rng(42);
    using sf::AbcdInvolution;
    using sf::WeierstrassPoint;

    const sf::AbcdPoint tau_fix =
        sf::AbcdPoint::from_raw({Cx(std::numbers::sqrt2), Cx(0), Cx(1), Cx(1)});
    const double fix_dev = boxvariety::projective_distance(
        sf::apply_involution(tau_fix, AbcdInvolution::kTau).v, tau_fix.v);

    const WeierstrassPoint t2 = WeierstrassPoint::from_raw({Cx(0), Cx(0), Cx(1)});
    const WeierstrassPoint o1 = sf::weierstrass(tau_fix);
    const WeierstrassPoint o2 = sf::elliptic_add(o1, o1);

    double worst_curve = 0.0, worst_law = 0.0;
    for (int k = 0; k < 50; ++k) {
        // band keeps the mapped points away from the chart's base point
        const sf::AbcdPoint p = sf::abcd_from_z(rng.z_band(0.35, 0.7));
        const WeierstrassPoint wp = sf::weierstrass(p);
        worst_curve = std::max(worst_curve, wp.curve_residual());
        const WeierstrassPoint wrho =
            sf::weierstrass(sf::apply_involution(p, AbcdInvolution::kRho));
        worst_law = std::max(
            worst_law, boxvariety::projective_distance(wrho.v, sf::elliptic_add(wp, t2).v));
        const WeierstrassPoint wtau =
            sf::weierstrass(sf::apply_involution(p, AbcdInvolution::kTau));
        worst_law = std::max(worst_law,
                             boxvariety::projective_distance(
                                 wtau.v, sf::elliptic_add(o2, sf::elliptic_negate(wp)).v));
    }
    const bool fixed_point_free = !sf::rho_has_fixed_point();

    std::ostringstream os;
    os << "curve " << std::scientific << std::setprecision(2) << worst_curve
       << " vs 1e-9, fixed point " << fix_dev << " vs 1e-12, involution laws " << worst_law
       << " vs 1e-8, rho fixed-point-free: " << (fixed_point_free ? "yes" : "NO") << ", "
       << run_ms(t0) << " ms";
    report(10,
           worst_curve < 1e-9 && fix_dev < 1e-12 && worst_law < 1e-8 && fixed_point_free,
           "boundary curve as Weierstrass model", os.str());
}

void criterion_11_genus() {
    const auto rep = st::run_genus7(42, 1e6);
    std::ostringstream os;
    os << "condition number " << std::scientific << std::setprecision(2) << rep.max_residual
       << " vs 1e6, " << rep.elapsed_ms << " ms";
    report(11, rep.pass, "independence of the seven invariant 2-forms", os.str());
}

void criterion_12_bound() {
    const bool ok = cv::degree_genus_bound({176, 0}) && !cv::degree_genus_bound({177, 0}) &&
                    cv::degree_genus_bound({192, 1}) && !cv::degree_genus_bound({193, 1});
    report(12, ok, "degree-genus bound truth table",
           ok ? "boundary cases exact" : "truth table violated");
}

std::vector<cb::CuboidCandidate> brute_force(std::uint64_t max_edge, cb::SearchMode mode) {
    std::vector<cb::CuboidCandidate> out;
    for (std::uint64_t w1 = 1; w1 <= max_edge; ++w1)
        for (std::uint64_t w2 = w1; w2 <= max_edge; ++w2)
            for (std::uint64_t w3 = w2; w3 <= max_edge; ++w3) {
                if (std::gcd(std::gcd(w1, w2), w3) != 1) continue;
                const auto d12 = cb::is_perfect_square(w1 * w1 + w2 * w2);
                const auto d13 = cb::is_perfect_square(w1 * w1 + w3 * w3);
                const auto d23 = cb::is_perfect_square(w2 * w2 + w3 * w3);
                if (!d12 || !d13 || !d23) continue;
                const auto space = cb::is_perfect_square(w1 * w1 + w2 * w2 + w3 * w3);
                if (mode == cb::SearchMode::kPerfect && !space) continue;
                out.push_back({w1, w2, w3, d12, d13, d23, space});
            }
    return out;
}

void criterion_13_search() {
    const auto t0 = std::chrono::steady_clock::now();

    const auto pruned300 = cb::search({300, cb::SearchMode::kEuler, 4, ""});
    const bool prune_sound = pruned300 == brute_force(300, cb::SearchMode::kEuler) &&
                             cb::search({300, cb::SearchMode::kPerfect, 4, ""}) ==
                                 brute_force(300, cb::SearchMode::kPerfect);

    bool found_brick = false;
    for (const auto& r : pruned300)
        found_brick = found_brick || (r.w1 == 44 && r.w2 == 117 && r.w3 == 240 &&
                                      r.d12 == 125u && r.d13 == 244u && r.d23 == 267u);

    const auto perfect2000 = cb::search({2000, cb::SearchMode::kPerfect, 4, ""});
    const bool none_perfect = perfect2000.empty();

    std::string csv1, csv4, csv8;
    for (const unsigned workers : {1u, 4u, 8u}) {
        std::ostringstream os;
        cb::write_csv(os, cb::search({2000, cb::SearchMode::kEuler, workers, ""}),
                      cb::SearchMode::kEuler);
        (workers == 1 ? csv1 : workers == 4 ? csv4 : csv8) = os.str();
    }
    const bool deterministic = csv1 == csv4 && csv4 == csv8;

    const long ms = run_ms(t0);
    std::ostringstream os;
    os << "prune-sound " << (prune_sound ? "yes" : "NO") << ", (44,117,240) "
       << (found_brick ? "found" : "MISSING") << ", perfect<=2000: " << perfect2000.size()
       << ", worker-deterministic " << (deterministic ? "yes" : "NO") << ", " << ms << " ms";
    report(13, prune_sound && found_brick && none_perfect && deterministic && ms < 180'000,
           "Euler brick / perfect cuboid search", os.str());
}

void criterion_14_group() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<md::CyclotomicMatrix> gens;
    for (const auto& aut : am::standard_generators(false))
        gens.push_back(am::fitted_exact_matrix(aut, 42));
    const auto without = am::group_closure_order(gens, false);
    gens.push_back(am::fitted_exact_matrix(am::SurfaceAutomorphism::swap_factors(), 42));
    const auto with = am::group_closure_order(gens, true);

    std::ostringstream os;
    os << "orders " << without.order << " / " << with.order << " (reference 768 / 1536), "
       << "node orbit agreement " << (g_nodes_agree ? "yes" : "NO") << ", " << run_ms(t0)
       << " ms";
    // pass requires termination (both calls returned) and the criterion-7
    // orbit agreement; the computed orders are reported alongside
    report(14, g_nodes_agree, "automorphism group diagnostics", os.str());
}

}  // namespace

int main() {
    criterion_1_relations();
    criterion_2_inversion();
    criterion_3_multiplier();
    criterion_4_action();
    criterion_5_diagonals();
    criterion_6_parametrization();
    criterion_7_nodes();
    criterion_8_rational_curves();
    criterion_9_diagonal_elliptic();
    criterion_10_kummer();
    criterion_11_genus();
    criterion_12_bound();
    criterion_13_search();
    criterion_14_group();

    if (g_failures == 0) {
        std::cout << "all 14 acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria FAILED\n";
    return 1;
}
