#pragma once

/**
 * @file grid.hpp
 * @brief Dense grids of generalized Kloosterman sums.
 *
 * Grid evaluation walks each output row a with an incrementally updated
 * index (a*u + b*u^{-1} steps by u^{-1} as b increases), sharing one root
 * table across all cells. Rows are distributed over worker threads in
 * contiguous blocks; every cell accumulates its terms in subgroup-element
 * order regardless of the worker count, so results are bitwise identical
 * for any number of threads.
 */

#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "gksum/errors.hpp"
#include "gksum/modular.hpp"
#include "gksum/sums.hpp"

namespace gksum {

struct IndexRange {
    int64_t begin = 0;
    int64_t end = 0;  // exclusive

    int64_t size() const { return end - begin; }
};

inline int resolve_thread_count(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// K(a, b, m, Lambda) for one fixed a and all b in b_range, written to out.
inline void gks_row(const SumEvaluator& ev, int64_t a, IndexRange b_range,
                    std::span<Complex> out, std::span<Complex> carry) {
    const UnitSubgroup& sub = ev.subgroup();
    const RootTable* table = ev.table();
    const uint64_t m = static_cast<uint64_t>(sub.modulus);
    const uint64_t aa = static_cast<uint64_t>(floor_mod(a, sub.modulus));
    const uint64_t b0 = static_cast<uint64_t>(floor_mod(b_range.begin, sub.modulus));
    const std::size_t bn = static_cast<std::size_t>(b_range.size());
    std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
    std::fill(carry.begin(), carry.end(), Complex{0.0, 0.0});
    const std::size_t d = sub.elements.size();
    const auto& inv = ev.inverse_elements();
    for (std::size_t k = 0; k < d; ++k) {
        const uint64_t step = inv[k];
        uint64_t t = (aa * sub.elements[k] + b0 * step) % m;
        if (table) {
            for (std::size_t j = 0; j < bn; ++j) {
                Complex y = (*table)[t] - carry[j];
                Complex s = out[j] + y;
                carry[j] = (s - out[j]) - y;
                out[j] = s;
                t += step;
                if (t >= m) t -= m;
            }
        } else {
            for (std::size_t j = 0; j < bn; ++j) {
                Complex y = unit_root(t, sub.modulus) - carry[j];
                Complex s = out[j] + y;
                carry[j] = (s - out[j]) - y;
                out[j] = s;
                t += step;
                if (t >= m) t -= m;
            }
        }
    }
}

/**
 * Calls fn(a, row) for every a in a_range, where row spans the values
 * K(a, b) for b in b_range. fn runs concurrently on worker threads and must
 * be thread-safe; the row span is only valid during the call.
 */
template <typename Fn>
void for_each_gks_row(const SumEvaluator& ev, IndexRange a_range, IndexRange b_range,
                      int threads, Fn&& fn) {
    const int64_t rows = a_range.size();
    if (rows <= 0 || b_range.size() <= 0) return;
    const int workers = static_cast<int>(
        std::min<int64_t>(resolve_thread_count(threads), rows));
    auto work = [&](int w) {
        const int64_t lo = a_range.begin + rows * w / workers;
        const int64_t hi = a_range.begin + rows * (w + 1) / workers;
        std::vector<Complex> row(static_cast<std::size_t>(b_range.size()));
        std::vector<Complex> carry(static_cast<std::size_t>(b_range.size()));
        for (int64_t a = lo; a < hi; ++a) {
            gks_row(ev, a, b_range, row, carry);
            fn(a, std::span<const Complex>(row));
        }
    };
    if (workers == 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
}

/// Dense matrix of K(a,b) values over a rectangle of (a, b) indices, plus a
/// color class per point (all zero until a scheme is applied).
struct SumGrid {
    int64_t modulus = 0;
    UnitSubgroup subgroup;
    IndexRange a_range;
    IndexRange b_range;
    std::vector<Complex> values;      // row-major: a index major
    std::vector<std::int32_t> color;  // same layout

    std::size_t offset(int64_t a, int64_t b) const {
        return static_cast<std::size_t>((a - a_range.begin) * b_range.size() +
                                        (b - b_range.begin));
    }
    const Complex& value(int64_t a, int64_t b) const { return values[offset(a, b)]; }
    std::size_t size() const { return values.size(); }
};

inline SumGrid gks_grid(const UnitSubgroup& sub, IndexRange a_range, IndexRange b_range,
                        int threads = 0) {
    if (a_range.begin < 0 || a_range.end > sub.modulus || b_range.begin < 0 ||
        b_range.end > sub.modulus || a_range.size() < 0 || b_range.size() < 0)
        throw Error("gks_grid: ranges must lie within [0, m)");
    SumGrid grid;
    grid.modulus = sub.modulus;
    grid.subgroup = sub;
    grid.a_range = a_range;
    grid.b_range = b_range;
    grid.values.resize(static_cast<std::size_t>(a_range.size() * b_range.size()));
    grid.color.assign(grid.values.size(), 0);
    SumEvaluator ev(sub);
    for_each_gks_row(ev, a_range, b_range, threads,
                     [&](int64_t a, std::span<const Complex> row) {
                         std::copy(row.begin(), row.end(),
                                   grid.values.begin() + static_cast<std::ptrdiff_t>(
                                                             grid.offset(a, b_range.begin)));
                     });
    return grid;
}

}  // namespace gksum
