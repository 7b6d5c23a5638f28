#pragma once

/**
 * @file geometry.hpp
 * @brief The filled d-cusped hypocycloid H_d and point membership.
 *
 * The boundary curve theta -> (d-1)e^{i theta} + e^{(1-d)i theta} is sampled
 * into a closed polygon and membership is decided by a winding-number test
 * against that polygon, with a tolerance band so that boundary-grazing
 * values (cusps included) count as inside. Queries go through a slab index
 * over the imaginary axis, which keeps grid-scale containment checks cheap.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

#include "gksum/errors.hpp"
#include "gksum/sums.hpp"

namespace gksum {

struct HypocycloidRegion {
    int cusps = 0;
    double tolerance = 1e-6;
    std::vector<Complex> boundary;  // closed polygon, boundary[j] = curve(2*pi*j/N)

    // Slab index over Im(z): slab s holds every edge whose y-extent meets it.
    double y_lo = 0.0;
    double slab_height = 1.0;
    std::vector<std::vector<std::int32_t>> slabs;
};

/**
 * Samples the boundary of H_d. The sample count is rounded up to a multiple
 * of 2d so that the cusps and the deepest arc points land exactly on sample
 * points and the sample set is invariant under rotation by 2*pi/d.
 */
inline HypocycloidRegion boundary_samples(int d, std::size_t n = 8192,
                                          double tolerance = 1e-6) {
    if (d < 3) throw Error("boundary_samples: need d >= 3");
    if (n < 64) throw Error("boundary_samples: need at least 64 samples");
    if (tolerance < 0.0) throw Error("boundary_samples: negative tolerance");
    std::size_t grain = 2 * static_cast<std::size_t>(d);
    std::size_t N = (n + grain - 1) / grain * grain;
    HypocycloidRegion region;
    region.cusps = d;
    region.tolerance = tolerance;
    region.boundary.resize(N);
    for (std::size_t j = 0; j < N; ++j) {
        double theta = kTwoPi * (static_cast<double>(j) / static_cast<double>(N));
        double re = (d - 1) * std::cos(theta) + std::cos((d - 1) * theta);
        double im = (d - 1) * std::sin(theta) - std::sin((d - 1) * theta);
        region.boundary[j] = {re, im};
    }

    std::size_t slab_count = std::max<std::size_t>(64, N / 8);
    region.y_lo = -static_cast<double>(d) - tolerance;
    double y_hi = static_cast<double>(d) + tolerance;
    region.slab_height = (y_hi - region.y_lo) / static_cast<double>(slab_count);
    region.slabs.assign(slab_count, {});
    auto slab_of = [&](double y) {
        auto s = static_cast<std::int64_t>(std::floor((y - region.y_lo) / region.slab_height));
        return std::clamp<std::int64_t>(s, 0, static_cast<std::int64_t>(slab_count) - 1);
    };
    for (std::size_t j = 0; j < N; ++j) {
        const Complex& p = region.boundary[j];
        const Complex& q = region.boundary[(j + 1) % N];
        auto lo = slab_of(std::min(p.imag(), q.imag()) - tolerance);
        auto hi = slab_of(std::max(p.imag(), q.imag()) + tolerance);
        for (auto s = lo; s <= hi; ++s)
            region.slabs[static_cast<std::size_t>(s)].push_back(static_cast<std::int32_t>(j));
    }
    return region;
}

inline double segment_distance_sq(Complex z, Complex p, Complex q) {
    Complex d = q - p;
    double len2 = std::norm(d);
    double t = len2 > 0.0
                   ? std::clamp(((z.real() - p.real()) * d.real() +
                                 (z.imag() - p.imag()) * d.imag()) / len2, 0.0, 1.0)
                   : 0.0;
    Complex c = p + t * d;
    return std::norm(z - c);
}

/// Exact distance from z to the sampled boundary polygon (linear scan).
inline double boundary_distance(const HypocycloidRegion& region, Complex z) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t N = region.boundary.size();
    for (std::size_t j = 0; j < N; ++j)
        best = std::min(best, segment_distance_sq(z, region.boundary[j],
                                                  region.boundary[(j + 1) % N]));
    return std::sqrt(best);
}

/// True iff z lies inside the sampled region or within its tolerance band.
inline bool contains(const HypocycloidRegion& region, Complex z) {
    const double d = region.cusps;
    const double tol = region.tolerance;
    const double r2 = std::norm(z);
    const double outer = d + tol;
    if (r2 > outer * outer) return false;
    const double inner = d - 2.0 - tol;
    if (inner > 0.0 && r2 < inner * inner) return true;

    if (z.imag() < region.y_lo ||
        z.imag() >= region.y_lo + region.slab_height * static_cast<double>(region.slabs.size()))
        return false;
    auto slab = static_cast<std::size_t>((z.imag() - region.y_lo) / region.slab_height);
    slab = std::min(slab, region.slabs.size() - 1);

    const std::size_t N = region.boundary.size();
    int winding = 0;
    double near2 = std::numeric_limits<double>::infinity();
    for (std::int32_t j : region.slabs[slab]) {
        const Complex& p = region.boundary[static_cast<std::size_t>(j)];
        const Complex& q = region.boundary[(static_cast<std::size_t>(j) + 1) % N];
        if (p.imag() <= z.imag()) {
            if (q.imag() > z.imag()) {
                double cross = (q.real() - p.real()) * (z.imag() - p.imag()) -
                               (z.real() - p.real()) * (q.imag() - p.imag());
                if (cross > 0.0) ++winding;
            }
        } else if (q.imag() <= z.imag()) {
            double cross = (q.real() - p.real()) * (z.imag() - p.imag()) -
                           (z.real() - p.real()) * (q.imag() - p.imag());
            if (cross < 0.0) --winding;
        }
        near2 = std::min(near2, segment_distance_sq(z, p, q));
    }
    if (winding != 0) return true;
    return near2 <= tol * tol;
}

/// Writes the boundary polygon as `theta,re,im` rows (12 significant
/// digits), one per sample, for use as a plot overlay. Returns the row count.
inline std::size_t write_boundary_csv(const HypocycloidRegion& region, std::ostream& os) {
    os << "theta,re,im\n";
    char buf[128];
    std::size_t N = region.boundary.size();
    for (std::size_t j = 0; j < N; ++j) {
        double theta = kTwoPi * (static_cast<double>(j) / static_cast<double>(N));
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", theta,
                      region.boundary[j].real(), region.boundary[j].imag());
        os << buf;
    }
    os.flush();
    if (!os) throw IoFailure("write_boundary_csv: write failed");
    return N;
}

/// f(z_1, ..., z_k) = z_1 + ... + z_k + 1/(z_1 ... z_k) on the torus; the
/// image for k = d-1 is the filled hypocycloid H_d.
inline Complex f_map(std::span<const Complex> zs) {
    if (zs.empty()) throw Error("f_map: empty input");
    Complex sum{0.0, 0.0};
    Complex prod{1.0, 0.0};
    for (const Complex& z : zs) {
        if (std::abs(std::abs(z) - 1.0) > 1e-6)
            throw NotOnTorus("f_map: input is not on the unit torus");
        sum += z;
        prod *= z;
    }
    return sum + 1.0 / prod;
}

}  // namespace gksum
