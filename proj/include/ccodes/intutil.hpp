#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccodes/errors.hpp"

namespace ccodes {

inline std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime_int(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::int64_t mod_pow_int(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    if (mod == 1) return 0;
    base %= mod;
    if (base < 0) base += mod;
    std::int64_t res = 1;
    while (exp > 0) {
        if (exp & 1) res = (res * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return res;
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::int64_t mod_inv_int(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t r0 = m, r1 = ((a % m) + m) % m;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw ConsistencyFailure("mod_inv_int: arguments not coprime");
    return ((t0 % m) + m) % m;
}

// base^exp if it does not exceed limit, otherwise nullopt. base >= 1, exp >= 0.
inline std::optional<std::int64_t> pow_within(std::int64_t base, std::int64_t exp,
                                              std::int64_t limit) {
    std::int64_t res = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (res > limit / base) return std::nullopt;
        res *= base;
    }
    return res;
}

inline std::int64_t checked_pow_int(std::int64_t base, std::int64_t exp, std::int64_t limit,
                                    const char* what) {
    auto v = pow_within(base, exp, limit);
    if (!v) throw TooLarge(what);
    return *v;
}

// Distinct prime factors, ascending.
inline std::vector<std::int64_t> prime_factors_int(std::int64_t v) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// All positive divisors, ascending.
inline std::vector<std::int64_t> divisors_int(std::int64_t v) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d != v / d) large.push_back(v / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Exact decimal representation of base^exp (display helper; exponents stay desk-scale).
inline std::string pow_decimal(std::int64_t base, std::int64_t exp) {
    std::vector<std::uint32_t> digits{1};  // little-endian decimal
    for (std::int64_t i = 0; i < exp; ++i) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            std::uint64_t v = static_cast<std::uint64_t>(d) * base + carry;
            d = static_cast<std::uint32_t>(v % 10);
            carry = v / 10;
        }
        while (carry > 0) {
            digits.push_back(static_cast<std::uint32_t>(carry % 10));
            carry /= 10;
        }
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
    return s;
}

}  // namespace ccodes
