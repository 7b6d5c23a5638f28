#pragma once

/**
 * @file lucas.hpp
 * @brief Lucas and Fibonacci machinery behind the spider moduli: sequences,
 *        order of appearance, the mod-8 lemma, and p | phi(L_p).
 *
 * Values are plain 64-bit integers, which caps lucas_number at index 87 and
 * fibonacci_number at index 92; the spider table tops out far below that.
 */

#include <cstdint>
#include <vector>

#include "gksum/errors.hpp"
#include "gksum/modular.hpp"

namespace gksum {

inline constexpr int kMaxLucasIndex = 87;      // L_87 < 2^63 <= L_88 + L_87
inline constexpr int kMaxFibonacciIndex = 92;  // F_92 < 2^63 <= F_93

/// L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}.
inline int64_t lucas_number(int k) {
    if (k < 0) throw Error("lucas_number: negative index");
    if (k > kMaxLucasIndex) throw Overflow("lucas_number: L_k exceeds 64 bits");
    int64_t a = 2, b = 1;
    if (k == 0) return a;
    for (int i = 1; i < k; ++i) {
        int64_t c = a + b;
        a = b;
        b = c;
    }
    return b;
}

/// F_1 = F_2 = 1 (and F_0 = 0).
inline int64_t fibonacci_number(int k) {
    if (k < 0) throw Error("fibonacci_number: negative index");
    if (k > kMaxFibonacciIndex) throw Overflow("fibonacci_number: F_k exceeds 64 bits");
    int64_t a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        int64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

/**
 * Order of appearance z(n): least k >= 1 with n | F_k, found by scanning the
 * Fibonacci sequence mod n. The scan is capped at 6n steps, comfortably above
 * the known growth of z; hitting the cap indicates a bug and throws.
 */
inline int64_t order_of_appearance(int64_t n) {
    if (n < 1) throw Error("order_of_appearance: n must be positive");
    if (n == 1) return 1;
    int64_t a = 0, b = 1;  // F_0, F_1 mod n
    for (int64_t k = 1; k <= 6 * n; ++k) {
        int64_t c = (a + b) % n;
        a = b;
        b = c;
        if (a == 0) return k;
    }
    throw Error("order_of_appearance: scan exceeded 6n iterations");
}

/**
 * The mod-8 lemma: L_k mod 8 is periodic with period 12 and never 0, so L_p
 * has an odd prime factor for every prime p >= 5. Periodicity and the
 * absence of multiples of 8 are checked over the first 24 terms regardless
 * of the limit; the odd-factor consequence is checked by factorization for
 * every prime in [5, limit].
 */
inline bool mod8_lemma_check(int limit) {
    if (limit < 12) throw Error("mod8_lemma_check: limit must be at least 12");
    if (limit > kMaxLucasIndex) throw Overflow("mod8_lemma_check: limit exceeds Lucas range");
    constexpr int kTerms = 36;
    int seq[kTerms];
    int a = 2, b = 1;
    seq[0] = 2;
    seq[1] = 1;
    for (int k = 2; k < kTerms; ++k) {
        int c = (a + b) % 8;
        a = b;
        b = c;
        seq[k] = c;
    }
    for (int k = 0; k + 12 < kTerms; ++k)
        if (seq[k] != seq[k + 12]) return false;
    for (int k = 0; k < kTerms; ++k)
        if (seq[k] == 0) return false;
    for (int p = 5; p <= limit; ++p) {
        if (factorize(p).prime_powers.size() != 1 || factorize(p).prime_powers[0].second != 1)
            continue;  // not prime
        bool has_odd_prime = false;
        for (auto [prime, e] : factorize(lucas_number(p)).prime_powers) {
            (void)e;
            if (prime % 2 == 1) has_odd_prime = true;
        }
        if (!has_odd_prime) return false;
    }
    return true;
}

/**
 * Verifies p | phi(L_p) together with the chain it rests on, for an odd
 * prime q dividing L_p:
 *   q | F_{2p},  2p | z(q),  (q/5) = 1,  L_p^2 - 5 F_p^2 = 4 (-1)^p.
 */
inline bool lucas_divisibility_check(int64_t p) {
    if (p < 5) throw Error("lucas_divisibility_check: need a prime p >= 5");
    Factorization pf = factorize(p);
    if (pf.prime_powers.size() != 1 || pf.prime_powers[0].second != 1)
        throw Error("lucas_divisibility_check: p is not prime");
    int64_t L = lucas_number(static_cast<int>(p));
    if (euler_phi(L) % p != 0) return false;

    // Smallest odd prime factor of L_p (exists by the mod-8 lemma).
    int64_t q = 0;
    for (auto [prime, e] : factorize(L).prime_powers) {
        (void)e;
        if (prime % 2 == 1) {
            q = prime;
            break;
        }
    }
    if (q == 0) return false;

    // q | F_{2p}, computed mod q.
    int64_t f = 0, g = 1;
    for (int64_t k = 0; k < 2 * p; ++k) {
        int64_t c = (f + g) % q;
        f = g;
        g = c;
    }
    if (f % q != 0) return false;

    if (order_of_appearance(q) % (2 * p) != 0) return false;
    if (q % 5 != 1 && q % 5 != 4) return false;  // (q/5) = 1

    int64_t F = fibonacci_number(static_cast<int>(p));
    __int128 lhs = static_cast<__int128>(L) * L - static_cast<__int128>(5) * F * F;
    __int128 rhs = (p % 2 == 0) ? 4 : -4;
    return lhs == rhs;
}

/// One row of the spider-modulus table.
struct LucasRow {
    int n = 0;        // index into the prime sequence
    int64_t p_n = 0;  // the n-th prime
    int64_t lucas = 0;
    int64_t phi = 0;
};

inline int64_t nth_prime(int n) {
    if (n < 1) throw Error("nth_prime: n must be positive");
    int count = 0;
    for (int64_t c = 2;; ++c) {
        bool prime = true;
        for (int64_t d = 2; d * d <= c; ++d)
            if (c % d == 0) {
                prime = false;
                break;
            }
        if (prime && ++count == n) return c;
    }
}

/// Rows n = 3..n_max of the table (n, p(n), L_{p(n)}, phi(L_{p(n)})).
inline std::vector<LucasRow> spider_table(int n_max) {
    if (n_max < 3) throw Error("spider_table: n_max must be at least 3");
    std::vector<LucasRow> rows;
    for (int n = 3; n <= n_max; ++n) {
        LucasRow row;
        row.n = n;
        row.p_n = nth_prime(n);
        row.lucas = lucas_number(static_cast<int>(row.p_n));  // throws Overflow past L_87
        row.phi = euler_phi(row.lucas);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gksum
