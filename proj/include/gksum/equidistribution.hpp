#pragma once

/**
 * @file equidistribution.hpp
 * @brief The point sets S_q behind the hypocycloid fill-out, with Weyl-sum
 *        and discrepancy diagnostics for their distribution mod 1.
 */

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <random>
#include <span>
#include <vector>

#include "gksum/errors.hpp"
#include "gksum/modular.hpp"
#include "gksum/sums.hpp"

namespace gksum {

/**
 * S_q: for each a in [0, q), the vector of fractional parts of
 * (a*w^k + b*w^{-k})/q for k = 0..phi(d)-1, with w the canonical order-d
 * generator mod q. Coordinates are stored both as doubles in [0,1) and as
 * their exact integer numerators, so Weyl phases can be formed without
 * rounding.
 */
struct LatticePointSet {
    std::size_t dimension = 0;
    std::size_t count = 0;
    int64_t q = 0, d = 0, omega = 0, b = 0;     // provenance
    std::vector<double> points;                 // count x dimension, row-major
    std::vector<uint32_t> numerators;           // same layout; point = numerator / q

    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * dimension, dimension};
    }
};

inline LatticePointSet build_s_q(int64_t q, int64_t d, int64_t b) {
    auto [p, alpha] = odd_prime_power(q);
    (void)alpha;
    if (d < 1 || (p - 1) % d != 0)
        throw WrongResidueClass("build_s_q: prime of q is not 1 mod d");
    UnitSubgroup sub = subgroup_of_order(q, d);
    std::size_t dim = static_cast<std::size_t>(euler_phi(d));
    LatticePointSet set;
    set.dimension = dim;
    set.count = static_cast<std::size_t>(q);
    set.q = q;
    set.d = d;
    set.omega = sub.generator;
    set.b = floor_mod(b, q);
    set.points.resize(set.count * dim);
    set.numerators.resize(set.count * dim);
    const uint64_t m = static_cast<uint64_t>(q);
    const uint64_t bb = static_cast<uint64_t>(set.b);
    for (uint64_t a = 0; a < m; ++a) {
        for (std::size_t k = 0; k < dim; ++k) {
            uint64_t t = (a * sub.elements[k] + bb * sub.inverse_of(static_cast<int64_t>(k))) % m;
            std::size_t idx = static_cast<std::size_t>(a) * dim + k;
            set.numerators[idx] = static_cast<uint32_t>(t);
            set.points[idx] = static_cast<double>(t) / static_cast<double>(q);
        }
    }
    return set;
}

/**
 * |(1/|S|) * sum over x in S of e(x . y)| for a nonzero integer vector y.
 * The dot product is reduced through the exact numerators, so each phase is
 * the exact rational (y . t mod q)/q before the single rounding in the trig
 * call.
 */
inline double weyl_sum(const LatticePointSet& set, std::span<const int64_t> y) {
    if (y.size() != set.dimension)
        throw Error("weyl_sum: frequency vector has wrong dimension");
    bool all_zero = true;
    for (int64_t c : y)
        if (c != 0) all_zero = false;
    if (all_zero) throw ZeroVector("weyl_sum: frequency vector is zero");
    const int64_t q = set.q;
    CompensatedSum acc;
    for (std::size_t i = 0; i < set.count; ++i) {
        __int128 num = 0;
        for (std::size_t k = 0; k < set.dimension; ++k)
            num += static_cast<__int128>(y[k]) * set.numerators[i * set.dimension + k];
        int64_t r = static_cast<int64_t>(num % q);
        if (r < 0) r += q;
        double phase = kTwoPi * static_cast<double>(r) / static_cast<double>(q);
        acc.add({std::cos(phase), std::sin(phase)});
    }
    return std::abs(acc.sum) / static_cast<double>(set.count);
}

/// Writes the point set as `a,x1,...,xk` rows (12 significant digits).
/// Returns the row count.
inline std::size_t write_points_csv(const LatticePointSet& set, std::ostream& os) {
    os << "a";
    for (std::size_t k = 1; k <= set.dimension; ++k) os << ",x" << k;
    os << "\n";
    char buf[40];
    for (std::size_t a = 0; a < set.count; ++a) {
        os << a;
        for (double x : set.point(a)) {
            std::snprintf(buf, sizeof buf, ",%.12g", x);
            os << buf;
        }
        os << "\n";
    }
    os.flush();
    if (!os) throw IoFailure("write_points_csv: write failed");
    return set.count;
}

/**
 * Monte Carlo lower bound on the box discrepancy: the maximum over sampled
 * axis-aligned boxes of |count fraction - volume|. The first box is always
 * the whole unit cube; the rest are drawn from mt19937_64(seed) with
 * 53-bit uniform doubles, so estimates are reproducible across platforms.
 */
inline double discrepancy_estimate(const LatticePointSet& set, std::size_t n_boxes,
                                   uint64_t seed) {
    if (n_boxes < 1) throw Error("discrepancy_estimate: need at least one box");
    const std::size_t dim = set.dimension;
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<double> lo(dim), hi(dim);
    double worst = 0.0;
    for (std::size_t box = 0; box < n_boxes; ++box) {
        double volume = 1.0;
        if (box == 0) {
            std::fill(lo.begin(), lo.end(), 0.0);
            std::fill(hi.begin(), hi.end(), 1.0);
        } else {
            for (std::size_t k = 0; k < dim; ++k) {
                double u = uniform01();
                double v = uniform01();
                lo[k] = std::min(u, v);
                hi[k] = std::max(u, v);
                volume *= hi[k] - lo[k];
            }
        }
        std::size_t inside = 0;
        for (std::size_t i = 0; i < set.count; ++i) {
            const double* x = set.points.data() + i * dim;
            bool in = true;
            for (std::size_t k = 0; k < dim; ++k) {
                if (x[k] < lo[k] || x[k] >= hi[k]) {
                    in = false;
                    break;
                }
            }
            inside += in;
        }
        double dev = std::abs(static_cast<double>(inside) / static_cast<double>(set.count) -
                              volume);
        worst = std::max(worst, dev);
    }
    return worst;
}

}  // namespace gksum
