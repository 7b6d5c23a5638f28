#pragma once

/**
 * @file render.hpp
 * @brief Color classification, CSV export, and deterministic SVG scatter
 *        plots of sum grids, with optional hypocycloid overlays.
 *
 * SVG output is fully deterministic: fixed palette, fixed draw order (class
 * index, then y, then x of the quantized marker position), no timestamps.
 * Markers that would print at the same canvas position collapse to the one
 * drawn last, which keeps spider-sized plots compact without changing the
 * rendered image.
 */

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gksum/errors.hpp"
#include "gksum/geometry.hpp"
#include "gksum/grid.hpp"
#include "gksum/modular.hpp"

namespace gksum {

/// Fixed palette; class indices wrap around it. The first four entries match
/// the discrete-log coloring order blue, red, green, purple.
inline constexpr std::array<const char*, 8> kPalette = {
    "blue", "red", "green", "purple", "orange", "teal", "brown", "gray"};

class ColorScheme {
public:
    enum class Kind { SumModK, LegendreAB, DlogDiffMod4, Constant };

    static ColorScheme sum_mod(int64_t k) {
        if (k < 1) throw Error("ColorScheme: k must be positive");
        ColorScheme s;
        s.kind_ = Kind::SumModK;
        s.k_ = k;
        return s;
    }

    static ColorScheme legendre_ab(int64_t p) {
        ColorScheme s;
        s.kind_ = Kind::LegendreAB;
        s.p_ = p;
        // Quadratic-residue table: 1 residue, -1 nonresidue, 0 divisible.
        s.table_.assign(static_cast<std::size_t>(p), -1);
        s.table_[0] = 0;
        for (int64_t u = 1; u < p; ++u)
            s.table_[static_cast<std::size_t>(u * u % p)] = 1;
        return s;
    }

    static ColorScheme dlog_diff(int64_t p) {
        ColorScheme s;
        s.kind_ = Kind::DlogDiffMod4;
        s.p_ = p;
        int64_t g = primitive_root(p);
        s.table_.assign(static_cast<std::size_t>(p), -1);  // -1 marks non-units
        int64_t x = 1;
        for (int64_t r = 0; r < p - 1; ++r) {
            s.table_[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(r);
            x = x * g % p;
        }
        return s;
    }

    static ColorScheme constant() { return ColorScheme{}; }

    Kind kind() const { return kind_; }
    int64_t k() const { return k_; }
    int64_t p() const { return p_; }

    std::int32_t classify(int64_t a, int64_t b) const {
        switch (kind_) {
            case Kind::SumModK:
                return static_cast<std::int32_t>(floor_mod(a + b, k_));
            case Kind::LegendreAB: {
                int64_t ab = floor_mod(a, p_) * floor_mod(b, p_) % p_;
                std::int32_t t = table_[static_cast<std::size_t>(ab)];
                return t == 1 ? 0 : (t == -1 ? 1 : 2);
            }
            case Kind::DlogDiffMod4: {
                std::int32_t r = table_[static_cast<std::size_t>(floor_mod(a, p_))];
                std::int32_t s = table_[static_cast<std::size_t>(floor_mod(b, p_))];
                if (r < 0 || s < 0)
                    throw NotAUnit("classify: a and b must be units mod p");
                return ((r - s) % 4 + 4) % 4;
            }
            case Kind::Constant:
                return 0;
        }
        return 0;
    }

private:
    Kind kind_ = Kind::Constant;
    int64_t k_ = 0;
    int64_t p_ = 0;
    std::vector<std::int32_t> table_;
};

inline std::int32_t classify(int64_t a, int64_t b, const ColorScheme& scheme) {
    return scheme.classify(a, b);
}

inline void apply_scheme(SumGrid& grid, const ColorScheme& scheme) {
    for (int64_t a = grid.a_range.begin; a < grid.a_range.end; ++a)
        for (int64_t b = grid.b_range.begin; b < grid.b_range.end; ++b)
            grid.color[grid.offset(a, b)] = scheme.classify(a, b);
}

namespace detail {

inline void append_double(std::string& out, double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    out.append(buf, res.ptr);
}

inline void append_int(std::string& out, int64_t v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

inline void flush_chunk(std::ostream& os, std::string& chunk, std::size_t& bytes) {
    os.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
    if (!os) throw IoFailure("write failed");
    bytes += chunk.size();
    chunk.clear();
}

}  // namespace detail

/// Writes `a,b,re,im,class` rows sorted by (a, b), 12 significant digits for
/// the complex parts. Returns the number of data rows.
inline std::size_t write_csv(const SumGrid& grid, std::ostream& os) {
    std::size_t bytes = 0;
    std::string chunk;
    chunk.reserve(1 << 16);
    chunk = "a,b,re,im,class\n";
    std::size_t rows = 0;
    for (int64_t a = grid.a_range.begin; a < grid.a_range.end; ++a) {
        for (int64_t b = grid.b_range.begin; b < grid.b_range.end; ++b) {
            const Complex& v = grid.value(a, b);
            detail::append_int(chunk, a);
            chunk.push_back(',');
            detail::append_int(chunk, b);
            chunk.push_back(',');
            detail::append_double(chunk, v.real(), 12);
            chunk.push_back(',');
            detail::append_double(chunk, v.imag(), 12);
            chunk.push_back(',');
            detail::append_int(chunk, grid.color[grid.offset(a, b)]);
            chunk.push_back('\n');
            ++rows;
            if (chunk.size() > (1 << 16) - 256) detail::flush_chunk(os, chunk, bytes);
        }
    }
    detail::flush_chunk(os, chunk, bytes);
    os.flush();
    if (!os) throw IoFailure("write_csv: flush failed");
    return rows;
}

struct SvgOptions {
    double point_radius = 1.4;
    int canvas_size = 1000;
    const HypocycloidRegion* overlay = nullptr;
};

/**
 * Deterministic SVG scatter writer. Feed points (complex position + class),
 * then write. The frame is the square [-R, R]^2 with R = 1.05 * max(point
 * magnitude, overlay radius); positions are quantized to 0.01 canvas pixels
 * and identical positions keep the marker that overdraw order (class-major)
 * would leave visible.
 */
class ScatterPlot {
public:
    explicit ScatterPlot(SvgOptions options) : opts_(options) {}

    void add(double re, double im, std::int32_t cls) {
        double mag = std::hypot(re, im);
        max_magnitude_ = std::max(max_magnitude_, mag);
        staged_.push_back({re, im, cls});
    }

    std::size_t write(std::ostream& os) {
        if (staged_.empty()) throw EmptyGrid("ScatterPlot: no points");
        double radius = max_magnitude_;
        if (opts_.overlay) radius = std::max(radius, static_cast<double>(opts_.overlay->cusps));
        double R = radius * 1.05;
        if (R <= 0.0) R = 1.0;  // all points at the origin
        const double S = static_cast<double>(opts_.canvas_size);
        auto to_canvas_x = [&](double re) { return (re + R) / (2.0 * R) * S; };
        auto to_canvas_y = [&](double im) { return (R - im) / (2.0 * R) * S; };

        // Quantize to 0.01 px and keep, per position, the class drawn last.
        std::unordered_map<uint64_t, std::int32_t> visible;
        visible.reserve(staged_.size());
        for (const Point& pt : staged_) {
            auto qx = static_cast<uint32_t>(std::lround(to_canvas_x(pt.re) * 100.0));
            auto qy = static_cast<uint32_t>(std::lround(to_canvas_y(pt.im) * 100.0));
            uint64_t key = (static_cast<uint64_t>(qy) << 32) | qx;
            auto [it, inserted] = visible.try_emplace(key, pt.cls);
            if (!inserted && pt.cls > it->second) it->second = pt.cls;
        }
        std::vector<std::pair<uint64_t, std::int32_t>> markers(visible.begin(), visible.end());
        std::sort(markers.begin(), markers.end(), [](const auto& lhs, const auto& rhs) {
            if (lhs.second != rhs.second) return lhs.second < rhs.second;
            return lhs.first < rhs.first;
        });

        std::size_t bytes = 0;
        std::string chunk;
        chunk.reserve(1 << 16);
        chunk = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        chunk += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                 std::to_string(opts_.canvas_size) + "\" height=\"" +
                 std::to_string(opts_.canvas_size) + "\" viewBox=\"0 0 " +
                 std::to_string(opts_.canvas_size) + " " + std::to_string(opts_.canvas_size) +
                 "\">\n";
        chunk += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

        char rbuf[32];
        std::snprintf(rbuf, sizeof rbuf, "%.2f", opts_.point_radius);
        std::int32_t open_class = -1;
        for (const auto& [key, cls] : markers) {
            if (cls != open_class) {
                if (open_class >= 0) chunk += "</g>\n";
                chunk += "<g fill=\"";
                chunk += kPalette[static_cast<std::size_t>(cls) % kPalette.size()];
                chunk += "\">\n";
                open_class = cls;
            }
            char line[96];
            double cx = static_cast<double>(key & 0xffffffffu) / 100.0;
            double cy = static_cast<double>(key >> 32) / 100.0;
            std::snprintf(line, sizeof line, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%s\"/>\n",
                          cx, cy, rbuf);
            chunk += line;
            if (chunk.size() > (1 << 16) - 256) detail::flush_chunk(os, chunk, bytes);
        }
        if (open_class >= 0) chunk += "</g>\n";

        if (opts_.overlay) {
            chunk += "<path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"";
            const auto& boundary = opts_.overlay->boundary;
            for (std::size_t j = 0; j < boundary.size(); ++j) {
                char seg[64];
                std::snprintf(seg, sizeof seg, "%c%.2f %.2f", j == 0 ? 'M' : 'L',
                              to_canvas_x(boundary[j].real()), to_canvas_y(boundary[j].imag()));
                chunk += seg;
                if (chunk.size() > (1 << 16) - 256) detail::flush_chunk(os, chunk, bytes);
            }
            chunk += "Z\"/>\n";
        }
        chunk += "</svg>\n";
        detail::flush_chunk(os, chunk, bytes);
        os.flush();
        if (!os) throw IoFailure("ScatterPlot: flush failed");
        return bytes;
    }

private:
    struct Point {
        double re, im;
        std::int32_t cls;
    };

    SvgOptions opts_;
    double max_magnitude_ = 0.0;
    std::vector<Point> staged_;
};

/// Renders a grid as an SVG scatter plot; classes come from the scheme.
/// Returns the number of bytes written.
inline std::size_t render_svg(const SumGrid& grid, const ColorScheme& scheme,
                              const SvgOptions& options, std::ostream& os) {
    if (grid.values.empty()) throw EmptyGrid("render_svg: empty grid");
    ScatterPlot plot(options);
    for (int64_t a = grid.a_range.begin; a < grid.a_range.end; ++a) {
        for (int64_t b = grid.b_range.begin; b < grid.b_range.end; ++b) {
            const Complex& v = grid.value(a, b);
            plot.add(v.real(), v.imag(), scheme.classify(a, b));
        }
    }
    return plot.write(os);
}

}  // namespace gksum
