#pragma once

/**
 * @file modular.hpp
 * @brief Exact modular arithmetic and multiplicative group structure.
 *
 * All moduli are capped at 2^31 so that a product of two reduced residues
 * fits in an unsigned 64-bit word; mod_pow additionally accepts any modulus
 * below 2^63 by reducing 128-bit intermediate products.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gksum/errors.hpp"

namespace gksum {

using std::int64_t;
using std::uint32_t;
using std::uint64_t;

/// Largest modulus accepted for subgroup construction and sum evaluation.
inline constexpr int64_t kMaxModulus = int64_t{1} << 31;

/// x mod m mapped into [0, m), also for negative x.
inline int64_t floor_mod(int64_t x, int64_t m) {
    int64_t r = x % m;
    return r < 0 ? r + m : r;
}

inline uint64_t mulmod_u128(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

/// base^exp mod m by repeated squaring; exp >= 0, 1 <= m < 2^63.
inline int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
    if (m < 1) throw Error("mod_pow: modulus must be positive");
    if (exp < 0) throw Error("mod_pow: negative exponent");
    uint64_t b = static_cast<uint64_t>(floor_mod(base, m));
    uint64_t r = 1 % static_cast<uint64_t>(m);
    uint64_t mm = static_cast<uint64_t>(m);
    uint64_t e = static_cast<uint64_t>(exp);
    while (e > 0) {
        if (e & 1) r = mulmod_u128(r, b, mm);
        b = mulmod_u128(b, b, mm);
        e >>= 1;
    }
    return static_cast<int64_t>(r);
}

/// Multiplicative inverse of u modulo m (extended Euclid), in (0, m).
inline int64_t mod_inv(int64_t u, int64_t m) {
    if (m < 2) throw Error("mod_inv: modulus must be at least 2");
    int64_t a = floor_mod(u, m);
    int64_t r0 = m, r1 = a;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw NotInvertible("mod_inv: gcd(" + std::to_string(u) + ", " + std::to_string(m) +
                            ") = " + std::to_string(r0));
    return t0 < 0 ? t0 + m : t0;
}

struct Factorization {
    int64_t value = 1;
    std::vector<std::pair<int64_t, int>> prime_powers;  // sorted by prime
};

/// Deterministic trial division. Complete for every n whose second-largest
/// prime factor is below 2^31.5; all moduli used here are far smaller.
inline Factorization factorize(int64_t n) {
    if (n < 1) throw Error("factorize: n must be positive");
    Factorization f;
    f.value = n;
    auto strip = [&](int64_t p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.prime_powers.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (int64_t d = 5; d <= n / d; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) f.prime_powers.emplace_back(n, 1);
    return f;
}

inline int64_t euler_phi(int64_t n) {
    Factorization f = factorize(n);
    int64_t phi = 1;
    for (auto [p, e] : f.prime_powers) {
        int64_t pk = 1;
        for (int i = 1; i < e; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

/// (p, alpha) with q = p^alpha for an odd prime p; rejects everything else.
inline std::pair<int64_t, int> odd_prime_power(int64_t q) {
    if (q < 3) throw NotPrimePower(std::to_string(q) + " is not an odd prime power");
    Factorization f = factorize(q);
    if (f.prime_powers.size() != 1 || f.prime_powers[0].first == 2)
        throw NotPrimePower(std::to_string(q) + " is not an odd prime power");
    return f.prime_powers[0];
}

/// Smallest primitive root modulo an odd prime power q. The smallest root is
/// used everywhere so that discrete-log based colorings are reproducible.
inline int64_t primitive_root(int64_t q) {
    auto [p, alpha] = odd_prime_power(q);
    (void)alpha;
    int64_t phi = q / p * (p - 1);
    Factorization pf = factorize(phi);
    for (int64_t g = 2; g < q; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto [r, e] : pf.prime_powers) {
            (void)e;
            if (mod_pow(g, phi / r, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("primitive_root: none found below q (q not a prime power?)");
}

/// Least k >= 1 with u^k = 1 mod m, via the divisors of phi(m).
inline int64_t multiplicative_order(int64_t u, int64_t m) {
    int64_t a = floor_mod(u, m);
    if (std::gcd(a, m) != 1)
        throw NotAUnit("multiplicative_order: " + std::to_string(u) + " is not a unit mod " +
                       std::to_string(m));
    int64_t k = euler_phi(m);
    for (auto [r, e] : factorize(k).prime_powers) {
        for (int i = 0; i < e; ++i) {
            if (k % r == 0 && mod_pow(a, k / r, m) == 1)
                k /= r;
            else
                break;
        }
    }
    return k;
}

/**
 * A cyclic subgroup of (Z/mZ)^x, stored as the orbit of its generator.
 * elements[k] = generator^k mod m, so elements[0] = 1 and the inverse of
 * elements[k] is elements[(order - k) % order]. Downstream grid code relies
 * on this indexing.
 */
struct UnitSubgroup {
    int64_t modulus = 0;
    int64_t generator = 0;
    int64_t order = 0;
    std::vector<uint32_t> elements;

    uint32_t inverse_of(int64_t k) const {
        return elements[static_cast<std::size_t>(k == 0 ? 0 : order - k)];
    }
};

inline UnitSubgroup subgroup_from_generator(int64_t m, int64_t omega) {
    if (m < 2) throw Error("subgroup_from_generator: modulus must be at least 2");
    if (m > kMaxModulus)
        throw Overflow("subgroup_from_generator: modulus exceeds 2^31 limit");
    int64_t w = floor_mod(omega, m);
    if (std::gcd(w, m) != 1)
        throw NotAUnit("subgroup_from_generator: gcd(" + std::to_string(omega) + ", " +
                       std::to_string(m) + ") != 1");
    UnitSubgroup sub;
    sub.modulus = m;
    sub.generator = w;
    sub.elements.push_back(1);
    uint64_t x = static_cast<uint64_t>(w);
    while (x != 1) {
        sub.elements.push_back(static_cast<uint32_t>(x));
        x = x * static_cast<uint64_t>(w) % static_cast<uint64_t>(m);
    }
    sub.order = static_cast<int64_t>(sub.elements.size());
    return sub;
}

/// The unique subgroup of order d of the cyclic group (Z/qZ)^x, generated by
/// g^(phi(q)/d) for the smallest primitive root g.
inline UnitSubgroup subgroup_of_order(int64_t q, int64_t d) {
    auto [p, alpha] = odd_prime_power(q);
    (void)p;
    (void)alpha;
    if (d < 1) throw Error("subgroup_of_order: order must be positive");
    int64_t phi = euler_phi(q);
    if (phi % d != 0)
        throw OrderDoesNotDivide("subgroup_of_order: " + std::to_string(d) +
                                 " does not divide phi(" + std::to_string(q) + ") = " +
                                 std::to_string(phi));
    int64_t gen = mod_pow(primitive_root(q), phi / d, q);
    UnitSubgroup sub = subgroup_from_generator(q, gen);
    // The order of g^(phi/d) is exactly d for cyclic groups.
    if (sub.order != d) throw Error("subgroup_of_order: internal order mismatch");
    return sub;
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
inline int legendre(int64_t a, int64_t p) {
    if (p < 3 || p % 2 == 0) throw Error("legendre: p must be an odd prime");
    int64_t t = mod_pow(floor_mod(a, p), (p - 1) / 2, p);
    if (t == 0) return 0;
    if (t == 1) return 1;
    if (t == p - 1) return -1;
    throw Error("legendre: " + std::to_string(p) + " is not prime");
}

/**
 * Smaller square root of a modulo an odd prime p (Tonelli-Shanks).
 * Both roots give the same cosine in the Salie evaluation, so returning the
 * smaller one is a pure determinism choice.
 */
inline int64_t sqrt_mod(int64_t a, int64_t p) {
    int64_t n = floor_mod(a, p);
    if (n == 0) return 0;
    int ls = legendre(n, p);
    if (ls == -1)
        throw NotAResidue("sqrt_mod: " + std::to_string(a) + " is not a square mod " +
                          std::to_string(p));
    int64_t r;
    if (p % 4 == 3) {
        r = mod_pow(n, (p + 1) / 4, p);
    } else {
        // p = 1 (mod 4): full Tonelli-Shanks.
        int64_t s = p - 1;
        int e = 0;
        while (s % 2 == 0) {
            s /= 2;
            ++e;
        }
        int64_t z = 2;
        while (legendre(z, p) != -1) ++z;
        uint64_t pp = static_cast<uint64_t>(p);
        uint64_t c = static_cast<uint64_t>(mod_pow(z, s, p));
        uint64_t rr = static_cast<uint64_t>(mod_pow(n, (s + 1) / 2, p));
        uint64_t t = static_cast<uint64_t>(mod_pow(n, s, p));
        int m = e;
        while (t != 1) {
            uint64_t t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = t2 * t2 % pp;
                ++i;
            }
            uint64_t b = c;
            for (int j = 0; j < m - i - 1; ++j) b = b * b % pp;
            rr = rr * b % pp;
            c = b * b % pp;
            t = t * c % pp;
            m = i;
        }
        r = static_cast<int64_t>(rr);
    }
    return std::min(r, p - r);
}

/**
 * Baby-step giant-step discrete logarithm: least r >= 0 with g^r = a mod q,
 * in O(sqrt(ord(g))) multiplications. g is expected to generate a subgroup
 * containing a (a primitive root in all uses here).
 */
inline int64_t discrete_log(int64_t g, int64_t a, int64_t q) {
    int64_t gg = floor_mod(g, q);
    int64_t aa = floor_mod(a, q);
    if (std::gcd(aa, q) != 1)
        throw NotAUnit("discrete_log: " + std::to_string(a) + " is not a unit mod " +
                       std::to_string(q));
    if (std::gcd(gg, q) != 1)
        throw NotAUnit("discrete_log: base is not a unit");
    if (aa == 1) return 0;
    int64_t ord = multiplicative_order(gg, q);
    int64_t n = 1;
    while (n * n < ord) ++n;
    std::unordered_map<int64_t, int64_t> baby;
    baby.reserve(static_cast<std::size_t>(n) * 2);
    int64_t x = 1;
    for (int64_t j = 0; j < n; ++j) {
        baby.emplace(x, j);  // keeps the smallest j per value
        x = static_cast<int64_t>(mulmod_u128(static_cast<uint64_t>(x),
                                             static_cast<uint64_t>(gg),
                                             static_cast<uint64_t>(q)));
    }
    int64_t giant = mod_inv(mod_pow(gg, n, q), q);
    int64_t gamma = aa;
    for (int64_t i = 0; i * n <= ord; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) return i * n + it->second;
        gamma = static_cast<int64_t>(mulmod_u128(static_cast<uint64_t>(gamma),
                                                 static_cast<uint64_t>(giant),
                                                 static_cast<uint64_t>(q)));
    }
    throw Error("discrete_log: " + std::to_string(a) + " is not a power of the base");
}

/**
 * Cross inverses (r1, r2) with r1 = m1^{-1} mod m2 and r2 = m2^{-1} mod m1,
 * as used by the multiplicative decomposition. The inverse of anything
 * modulo 1 is defined as 0, which makes the trivial-factor case degenerate
 * cleanly.
 */
inline std::pair<int64_t, int64_t> crt_split(int64_t m1, int64_t m2) {
    if (m1 < 1 || m2 < 1) throw Error("crt_split: moduli must be positive");
    if (std::gcd(m1, m2) != 1)
        throw NotCoprime("crt_split: gcd(" + std::to_string(m1) + ", " + std::to_string(m2) +
                         ") != 1");
    int64_t r1 = (m2 == 1) ? 0 : mod_inv(m1, m2);
    int64_t r2 = (m1 == 1) ? 0 : mod_inv(m2, m1);
    return {r1, r2};
}

}  // namespace gksum
