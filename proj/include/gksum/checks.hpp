#pragma once

/**
 * @file checks.hpp
 * @brief Exhaustive / sampled verification of the box theorems for the
 *        half-order and quarter-order subgroup sums, and the empirical
 *        report on the conjectured imaginary-part bounds.
 */

#include <cmath>
#include <cstdint>
#include <mutex>
#include <random>
#include <vector>

#include "gksum/errors.hpp"
#include "gksum/grid.hpp"
#include "gksum/modular.hpp"
#include "gksum/sums.hpp"

namespace gksum {

inline constexpr double kBoundSlack = 1e-9;
inline constexpr double kIdentityTolerance = 1e-8;

/**
 * Result of sweeping K(a,b,p,(p-1)/2) for p = 3 (mod 4) over all pairs.
 * The gating box is |Re|, |Im| <= sqrt(p): that is the bound the halving of
 * T and K actually yields, and the one the full sweep confirms. The stricter
 * sqrt(p)/2 box is reported alongside because it fails in practice (see
 * half_box_satisfied), starting with K(1,4,7,3) = -1.346... - 2.383...i.
 */
struct Theorem3Report {
    int64_t p = 0;
    int64_t pairs_checked = 0;
    double bound = 0.0;          // sqrt(p)
    double max_abs_re = 0.0;     // over pairs with p not dividing ab
    double max_abs_im = 0.0;
    double max_zero_case_dev = 0.0;  // worst deviation from the p | ab formulas
    bool box_satisfied = false;
    bool zero_cases_ok = false;
    bool half_box_satisfied = false;  // the sqrt(p)/2 box, informational

    bool pass() const { return box_satisfied && zero_cases_ok; }
};

inline Theorem3Report theorem3_check(int64_t p, int threads = 0) {
    if (p % 4 != 3)
        throw WrongResidueClass("theorem3_check: p must be 3 mod 4");
    Theorem3Report rep;
    rep.p = p;
    rep.bound = std::sqrt(static_cast<double>(p));
    const Complex tau_p = tau(p);

    SumEvaluator ev(subgroup_of_order(p, (p - 1) / 2));
    std::mutex merge;
    for_each_gks_row(ev, {0, p}, {0, p}, threads,
                     [&](int64_t a, std::span<const Complex> row) {
                         double mre = 0.0, mim = 0.0, mzero = 0.0;
                         for (int64_t b = 0; b < p; ++b) {
                             const Complex& v = row[static_cast<std::size_t>(b)];
                             if (a != 0 && b != 0) {
                                 mre = std::max(mre, std::abs(v.real()));
                                 mim = std::max(mim, std::abs(v.imag()));
                             } else if (a == 0 && b == 0) {
                                 double expect = static_cast<double>(p - 1) / 2.0;
                                 mzero = std::max(mzero, std::abs(v - Complex{expect, 0.0}));
                             } else {
                                 // a = 0 column (and b = 0 row via the a<->b
                                 // symmetry): K = ((c/p) tau_p - 1) / 2.
                                 int64_t c = a == 0 ? b : a;
                                 Complex expect =
                                     0.5 * (static_cast<double>(legendre(c, p)) * tau_p -
                                            Complex{1.0, 0.0});
                                 mzero = std::max(mzero, std::abs(v - expect));
                             }
                         }
                         std::lock_guard<std::mutex> lock(merge);
                         rep.max_abs_re = std::max(rep.max_abs_re, mre);
                         rep.max_abs_im = std::max(rep.max_abs_im, mim);
                         rep.max_zero_case_dev = std::max(rep.max_zero_case_dev, mzero);
                         rep.pairs_checked += p;
                     });
    rep.box_satisfied = rep.max_abs_re <= rep.bound + kBoundSlack &&
                        rep.max_abs_im <= rep.bound + kBoundSlack;
    rep.half_box_satisfied = rep.max_abs_re <= rep.bound / 2.0 + kBoundSlack &&
                             rep.max_abs_im <= rep.bound / 2.0 + kBoundSlack;
    rep.zero_cases_ok = rep.max_zero_case_dev <= kIdentityTolerance;
    return rep;
}

/**
 * Sweep of K(g^r, g^s, p, (p-1)/4) for p = 5 (mod 8), grouped by the class
 * r - s mod 4. Shared by the theorem check (Re bounds, vanishing Im in
 * class 2) and the conjecture report (Im bounds).
 */
struct QuarterOrderStats {
    int64_t p = 0;
    int64_t pairs = 0;
    bool exhaustive = false;
    double max_abs_re[4] = {0, 0, 0, 0};
    double max_abs_im[4] = {0, 0, 0, 0};
    int64_t count[4] = {0, 0, 0, 0};
};

/// max_pairs = 0 sweeps all (p-1)^2 unit pairs; otherwise max_pairs pairs
/// are drawn deterministically from mt19937_64(seed).
inline QuarterOrderStats quarter_order_sweep(int64_t p, int64_t max_pairs = 0,
                                             uint64_t seed = 0x5eed) {
    if (p % 8 != 5)
        throw WrongResidueClass("quarter-order sweep: p must be 5 mod 8");
    QuarterOrderStats st;
    st.p = p;
    const int64_t g = primitive_root(p);
    std::vector<std::int32_t> dlog(static_cast<std::size_t>(p), -1);
    int64_t x = 1;
    for (int64_t r = 0; r < p - 1; ++r) {
        dlog[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(r);
        x = x * g % p;
    }
    SumEvaluator ev(subgroup_of_order(p, (p - 1) / 4));

    auto visit = [&](int64_t a, int64_t b) {
        int cls = ((dlog[static_cast<std::size_t>(a)] - dlog[static_cast<std::size_t>(b)]) % 4 +
                   4) % 4;
        Complex v = ev(a, b);
        st.max_abs_re[cls] = std::max(st.max_abs_re[cls], std::abs(v.real()));
        st.max_abs_im[cls] = std::max(st.max_abs_im[cls], std::abs(v.imag()));
        ++st.count[cls];
        ++st.pairs;
    };

    if (max_pairs <= 0 || max_pairs >= (p - 1) * (p - 1)) {
        st.exhaustive = true;
        for (int64_t a = 1; a < p; ++a)
            for (int64_t b = 1; b < p; ++b) visit(a, b);
    } else {
        std::mt19937_64 rng(seed);
        for (int64_t i = 0; i < max_pairs; ++i) {
            int64_t a = 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(p - 1));
            int64_t b = 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(p - 1));
            visit(a, b);
        }
    }
    return st;
}

struct Theorem5Report {
    QuarterOrderStats stats;
    double full_bound = 0.0;  // sqrt(p), classes 0 and 2
    double half_bound = 0.0;  // sqrt(p)/2, classes 1 and 3
    bool re_bounds_ok = false;
    bool class2_im_ok = false;

    bool pass() const { return re_bounds_ok && class2_im_ok; }
};

inline Theorem5Report theorem5_check(int64_t p, int64_t max_pairs = 0,
                                     uint64_t seed = 0x5eed) {
    Theorem5Report rep;
    rep.stats = quarter_order_sweep(p, max_pairs, seed);
    rep.full_bound = std::sqrt(static_cast<double>(p));
    rep.half_bound = rep.full_bound / 2.0;
    rep.re_bounds_ok = rep.stats.max_abs_re[0] <= rep.full_bound + kBoundSlack &&
                       rep.stats.max_abs_re[2] <= rep.full_bound + kBoundSlack &&
                       rep.stats.max_abs_re[1] <= rep.half_bound + kBoundSlack &&
                       rep.stats.max_abs_re[3] <= rep.half_bound + kBoundSlack;
    rep.class2_im_ok = rep.stats.max_abs_im[2] <= kIdentityTolerance;
    return rep;
}

/// Empirical status of the conjectured imaginary-part bounds. Never gates:
/// the caller gets maxima and flags, not a pass/fail verdict.
struct ConjectureReport {
    QuarterOrderStats stats;
    double bound[4] = {0, 0, 0, 0};  // conjectured |Im| bounds per class
    bool within[4] = {false, false, false, false};
};

inline ConjectureReport conjecture_report(int64_t p, int64_t max_pairs = 0,
                                          uint64_t seed = 0x5eed) {
    ConjectureReport rep;
    rep.stats = quarter_order_sweep(p, max_pairs, seed);
    double sp = std::sqrt(static_cast<double>(p));
    rep.bound[0] = sp;
    rep.bound[1] = rep.bound[3] = std::sqrt(2.0 * static_cast<double>(p)) / 2.0;
    rep.bound[2] = 0.0;  // proven: purely real
    for (int cls = 0; cls < 4; ++cls) {
        double tol = cls == 2 ? kIdentityTolerance : kBoundSlack;
        rep.within[cls] = rep.stats.max_abs_im[cls] <= rep.bound[cls] + tol;
    }
    return rep;
}

}  // namespace gksum
