#pragma once

// Test-side reference implementations, kept deliberately independent of the
// library's evaluation paths: plain summation, own inverse computation, own
// point-in-polygon test.

#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace testutil {

using Complex = std::complex<double>;
using std::int64_t;

inline int64_t egcd_inverse(int64_t u, int64_t m) {
    int64_t r0 = m, r1 = ((u % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return t0 < 0 ? t0 + m : t0;
}

/// Brute-force K(a,b,m,Lambda) from the element list, long double, plain sum.
inline Complex naive_gks(int64_t a, int64_t b, int64_t m,
                         const std::vector<std::uint32_t>& elements) {
    long double re = 0.0L, im = 0.0L;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (std::uint32_t u : elements) {
        int64_t uinv = egcd_inverse(u, m);
        int64_t t = ((a % m + m) % m * u + (b % m + m) % m * uinv) % m;
        long double x = two_pi * t / m;
        re += cosl(x);
        im += sinl(x);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

/// Even-odd crossing test against a polygon (no winding, no tolerance).
inline bool naive_point_in_polygon(const std::vector<Complex>& poly, Complex z) {
    bool inside = false;
    std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        double xi = poly[i].real(), yi = poly[i].imag();
        double xj = poly[j].real(), yj = poly[j].imag();
        if ((yi > z.imag()) != (yj > z.imag()) &&
            z.real() < (xj - xi) * (z.imag() - yi) / (yj - yi) + xi)
            inside = !inside;
    }
    return inside;
}

/// Minimal XML well-formedness scan: tag balance, attribute quoting, one root.
inline bool xml_well_formed(const std::string& doc) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    int roots = 0;
    if (doc.rfind("<?xml", 0) == 0) {
        i = doc.find("?>");
        if (i == std::string::npos) return false;
        i += 2;
    }
    while (i < doc.size()) {
        if (doc[i] != '<') {
            if (doc[i] == '>') return false;
            ++i;
            continue;
        }
        std::size_t close = i;
        bool in_quote = false;
        for (close = i + 1; close < doc.size(); ++close) {
            if (doc[close] == '"') in_quote = !in_quote;
            else if (doc[close] == '>' && !in_quote) break;
            else if (doc[close] == '<' && !in_quote) return false;
        }
        if (close >= doc.size() || in_quote) return false;
        std::string tag = doc.substr(i + 1, close - i - 1);
        if (!tag.empty() && tag.front() == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            if (stack.empty()) ++roots;
        } else if (!tag.empty() && tag.back() == '/') {
            if (stack.empty()) ++roots;
        } else if (!tag.empty() && tag.front() != '!' && tag.front() != '?') {
            std::size_t sp = tag.find_first_of(" \t\n");
            std::string name = sp == std::string::npos ? tag : tag.substr(0, sp);
            stack.push_back(name);
        }
        i = close + 1;
    }
    return stack.empty() && roots == 1;
}

}  // namespace testutil
