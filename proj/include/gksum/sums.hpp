#pragma once

/**
 * @file sums.hpp
 * @brief Generalized Kloosterman sums K(a,b,m,Lambda), classical Kloosterman
 *        sums, Salie sums, and the identities that relate them.
 *
 * Terms are always accumulated in subgroup-element order (successive powers
 * of the generator) with compensated summation, so every evaluation is
 * reproducible bit for bit and the rounding error stays far below the 1e-8
 * tolerances used by the identity checks.
 */

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "gksum/errors.hpp"
#include "gksum/modular.hpp"

namespace gksum {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

/// e(t/m) = exp(2*pi*i*t/m).
inline Complex unit_root(uint64_t t, int64_t m) {
    double x = kTwoPi * (static_cast<double>(t) / static_cast<double>(m));
    return {std::cos(x), std::sin(x)};
}

/// Shared table of the m-th roots of unity: roots[t] = e(t/m).
class RootTable {
public:
    /// Above this modulus the table (16 bytes per entry) is not materialized
    /// and evaluation falls back to per-term transcendental calls.
    static constexpr int64_t kMaxTabulatedModulus = 100'000'000;

    explicit RootTable(int64_t m) : modulus_(m) {
        if (m < 1) throw Error("RootTable: modulus must be positive");
        if (m > kMaxTabulatedModulus) throw Overflow("RootTable: modulus too large to tabulate");
        roots_.resize(static_cast<std::size_t>(m));
        for (int64_t t = 0; t < m; ++t)
            roots_[static_cast<std::size_t>(t)] = unit_root(static_cast<uint64_t>(t), m);
    }

    int64_t modulus() const { return modulus_; }
    const Complex& operator[](uint64_t t) const { return roots_[t]; }

private:
    int64_t modulus_;
    std::vector<Complex> roots_;
};

/// Kahan-compensated accumulator, applied componentwise to complex terms.
struct CompensatedSum {
    Complex sum{0.0, 0.0};
    Complex carry{0.0, 0.0};

    void add(Complex x) {
        Complex y = x - carry;
        Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

/**
 * Evaluator for K(a,b,m,Lambda) over a fixed subgroup. Builds the root table
 * once (for m up to RootTable::kMaxTabulatedModulus) and reuses it across
 * evaluations; above the threshold each term is computed transcendentally.
 * Immutable after construction and safe to share across threads.
 */
class SumEvaluator {
public:
    explicit SumEvaluator(UnitSubgroup sub) : sub_(std::move(sub)) {
        if (sub_.modulus <= RootTable::kMaxTabulatedModulus) table_.emplace(sub_.modulus);
        inverse_.reserve(sub_.elements.size());
        for (int64_t k = 0; k < sub_.order; ++k) inverse_.push_back(sub_.inverse_of(k));
    }

    const UnitSubgroup& subgroup() const { return sub_; }
    const RootTable* table() const { return table_ ? &*table_ : nullptr; }
    const std::vector<uint32_t>& inverse_elements() const { return inverse_; }

    Complex operator()(int64_t a, int64_t b) const {
        uint64_t m = static_cast<uint64_t>(sub_.modulus);
        uint64_t aa = static_cast<uint64_t>(floor_mod(a, sub_.modulus));
        uint64_t bb = static_cast<uint64_t>(floor_mod(b, sub_.modulus));
        CompensatedSum acc;
        std::size_t d = sub_.elements.size();
        for (std::size_t k = 0; k < d; ++k) {
            // a*u + b*u^{-1} < 2^63 because every factor is below 2^31.
            uint64_t t = (aa * sub_.elements[k] + bb * inverse_[k]) % m;
            acc.add(table_ ? (*table_)[t] : unit_root(t, sub_.modulus));
        }
        return acc.sum;
    }

private:
    UnitSubgroup sub_;
    std::optional<RootTable> table_;
    std::vector<uint32_t> inverse_;
};

/// K(a,b,m,Lambda) = sum over u in Lambda of e((a*u + b*u^{-1})/m).
inline Complex gks(int64_t a, int64_t b, const UnitSubgroup& sub) {
    return SumEvaluator(sub)(a, b);
}

/// Same sum with every term evaluated transcendentally (no root table);
/// this is the documented fallback path for moduli too large to tabulate.
inline Complex gks_direct(int64_t a, int64_t b, const UnitSubgroup& sub) {
    uint64_t m = static_cast<uint64_t>(sub.modulus);
    uint64_t aa = static_cast<uint64_t>(floor_mod(a, sub.modulus));
    uint64_t bb = static_cast<uint64_t>(floor_mod(b, sub.modulus));
    CompensatedSum acc;
    for (int64_t k = 0; k < sub.order; ++k) {
        uint64_t t = (aa * sub.elements[static_cast<std::size_t>(k)] + bb * sub.inverse_of(k)) % m;
        acc.add(unit_root(t, sub.modulus));
    }
    return acc.sum;
}

/// Classical Kloosterman sum K(a,b,p): the full unit group mod a prime.
inline Complex classical(int64_t a, int64_t b, int64_t p) {
    return gks(a, b, subgroup_from_generator(p, primitive_root(p)));
}

/// Salie sum T(a,b,p) = sum over units of (u/p) e((a*u + b*u^{-1})/p),
/// enumerated as powers of the smallest primitive root so the Legendre
/// weight is just the parity of the exponent.
inline Complex salie_direct(int64_t a, int64_t b, int64_t p) {
    UnitSubgroup units = subgroup_from_generator(p, primitive_root(p));
    uint64_t m = static_cast<uint64_t>(p);
    uint64_t aa = static_cast<uint64_t>(floor_mod(a, p));
    uint64_t bb = static_cast<uint64_t>(floor_mod(b, p));
    CompensatedSum acc;
    for (int64_t k = 0; k < units.order; ++k) {
        uint64_t t = (aa * units.elements[static_cast<std::size_t>(k)] + bb * units.inverse_of(k)) % m;
        Complex term = unit_root(t, p);
        acc.add(k % 2 == 0 ? term : -term);
    }
    return acc.sum;
}

/// tau_n = sqrt(n) for n = 1 (mod 4), i*sqrt(n) for n = 3 (mod 4).
inline Complex tau(int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw InvalidParity("tau: n must be a positive odd integer");
    double s = std::sqrt(static_cast<double>(n));
    return n % 4 == 1 ? Complex{s, 0.0} : Complex{0.0, s};
}

/**
 * Closed-form Salie value for p not dividing a or b:
 *   +-2 * tau_p * cos(2*pi*k/p) in the equal-Legendre cases (k^2 = 4ab),
 *   0 when the Legendre symbols differ.
 * Either square root of 4ab gives the same cosine.
 */
inline Complex salie_explicit(int64_t a, int64_t b, int64_t p) {
    int64_t aa = floor_mod(a, p);
    int64_t bb = floor_mod(b, p);
    if (aa == 0 || bb == 0)
        throw DividesAB("salie_explicit: p divides a*b");
    int la = legendre(aa, p);
    int lb = legendre(bb, p);
    if (la != lb) return {0.0, 0.0};
    uint64_t pp = static_cast<uint64_t>(p);
    uint64_t fourab = 4 * static_cast<uint64_t>(aa) % pp * static_cast<uint64_t>(bb) % pp;
    int64_t k = sqrt_mod(static_cast<int64_t>(fourab), p);
    double c = 2.0 * std::cos(kTwoPi * (static_cast<double>(k) / static_cast<double>(p)));
    return (la == 1 ? c : -c) * tau(p);
}

/// Both sides of K(a,b,p,(p-1)/2) = (T(a,b,p) + K(a,b,p)) / 2.
inline std::pair<Complex, Complex> half_subgroup_identity(int64_t a, int64_t b, int64_t p) {
    Complex lhs = gks(a, b, subgroup_of_order(p, (p - 1) / 2));
    Complex rhs = 0.5 * (salie_direct(a, b, p) + classical(a, b, p));
    return {lhs, rhs};
}

struct RealHalving {
    double full;      // K(a,b,p,(p-1)/2^{n-1}), real-valued
    Complex halved;   // K(a,b,p,(p-1)/2^n)
};

/// Real-halving identity K(a,b,p,(p-1)/2^{n-1}) = 2*Re K(a,b,p,(p-1)/2^n)
/// for p = 2^n*d + 1 with d odd.
inline RealHalving real_halving(int64_t a, int64_t b, int64_t p, int n) {
    if (n < 1) throw BadForm("real_halving: n must be positive");
    int64_t pm1 = p - 1;
    int64_t pow2 = int64_t{1} << n;
    if (pm1 % pow2 != 0 || (pm1 / pow2) % 2 == 0)
        throw BadForm("real_halving: p is not of the form 2^n*d + 1 with d odd");
    Complex full = gks(a, b, subgroup_of_order(p, pm1 / (pow2 / 2)));
    Complex halved = gks(a, b, subgroup_of_order(p, pm1 / pow2));
    return {full.real(), halved};
}

struct CrtDecomposition {
    Complex left;     // K(r2*a, r2*b, m1, <omega mod m1>)
    Complex right;    // K(r1*a, r1*b, m2, <omega mod m2>)
    Complex product;  // equals K(a, b, m1*m2, <omega>)
};

/**
 * Multiplicative decomposition through the Chinese Remainder Theorem.
 * A factor with modulus 1 contributes the empty-phase value 1.
 *
 * The identity K(a,b,m1*m2,<w>) = K(r2 a, r2 b, m1, <w>) K(r1 a, r1 b, m2, <w>)
 * holds exactly when the orders of w mod m1 and mod m2 are coprime: only then
 * does <w> split under CRT as the full product of its two projections.
 * (Counterexample otherwise: m = 15, w = 2 gives |<2>| = 4 but factor orders
 * 2 and 4, so K(0,0) = 4 while the product of the factors is 8.) Violations
 * are rejected rather than silently returning a product that does not equal
 * the direct sum.
 */
inline CrtDecomposition crt_decompose(int64_t a, int64_t b, int64_t m1, int64_t m2,
                                      int64_t omega) {
    auto [r1, r2] = crt_split(m1, m2);
    if (m1 > kMaxModulus / m2)
        throw Overflow("crt_decompose: m1*m2 exceeds 2^31 limit");
    if (std::gcd(floor_mod(omega, m1 * m2), m1 * m2) != 1)
        throw NotAUnit("crt_decompose: omega is not a unit mod m1*m2");
    int64_t d1 = m1 == 1 ? 1 : multiplicative_order(omega, m1);
    int64_t d2 = m2 == 1 ? 1 : multiplicative_order(omega, m2);
    if (std::gcd(d1, d2) != 1)
        throw NotCoprime("crt_decompose: orders of omega mod m1 and mod m2 share a factor; "
                         "the subgroup does not split as a product");
    auto side = [](int64_t r, int64_t aa, int64_t bb, int64_t m, int64_t w) -> Complex {
        if (m == 1) return {1.0, 0.0};
        int64_t sa = floor_mod(r * floor_mod(aa, m) % m, m);
        int64_t sb = floor_mod(r * floor_mod(bb, m) % m, m);
        return gks(sa, sb, subgroup_from_generator(m, floor_mod(w, m)));
    };
    CrtDecomposition out;
    out.left = side(r2, a, b, m1, omega);
    out.right = side(r1, a, b, m2, omega);
    out.product = out.left * out.right;
    return out;
}

/**
 * The three deltoid-valued triples whose sum is K(a,b,q,9):
 *   (z_j + z_{j+3} + 1/(z_j z_{j+3})) for j = 1,2,3,
 * with z_k = e((a*u^k + b*u^{-k})/q) and u the canonical order-9 generator.
 * Each triple lies in the filled deltoid H_3.
 */
inline std::array<Complex, 3> deltoid_triples(int64_t a, int64_t b, int64_t q) {
    UnitSubgroup sub = subgroup_of_order(q, 9);
    uint64_t m = static_cast<uint64_t>(q);
    uint64_t aa = static_cast<uint64_t>(floor_mod(a, q));
    uint64_t bb = static_cast<uint64_t>(floor_mod(b, q));
    std::array<Complex, 7> zeta;  // zeta[k] for k = 1..6
    for (int64_t k = 1; k <= 6; ++k) {
        uint64_t t = (aa * sub.elements[static_cast<std::size_t>(k)] + bb * sub.inverse_of(k)) % m;
        zeta[static_cast<std::size_t>(k)] = unit_root(t, q);
    }
    std::array<Complex, 3> triples;
    for (int j = 1; j <= 3; ++j) {
        Complex z1 = zeta[static_cast<std::size_t>(j)];
        Complex z2 = zeta[static_cast<std::size_t>(j + 3)];
        triples[static_cast<std::size_t>(j - 1)] = z1 + z2 + 1.0 / (z1 * z2);
    }
    return triples;
}

/// Verifies 1 + u + ... + u^{d-1} = 0 (mod q) for the canonical order-d
/// generator u, where d is a prime divisor of p - 1.
inline bool cyclotomic_relation_check(int64_t q, int64_t d) {
    auto [p, alpha] = odd_prime_power(q);
    (void)alpha;
    Factorization df = factorize(d);
    if (d < 2 || df.prime_powers.size() != 1 || df.prime_powers[0].second != 1)
        throw Error("cyclotomic_relation_check: d must be prime");
    if ((p - 1) % d != 0)
        throw OrderDoesNotDivide("cyclotomic_relation_check: d does not divide p - 1");
    UnitSubgroup sub = subgroup_of_order(q, d);
    uint64_t sum = 0;
    for (uint32_t e : sub.elements) sum = (sum + e) % static_cast<uint64_t>(q);
    return sum == 0;
}

}  // namespace gksum
