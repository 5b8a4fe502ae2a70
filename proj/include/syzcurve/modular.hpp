#pragma once

#include <cstdint>

#include "syzcurve/errors.hpp"
#include "syzcurve/rational.hpp"

namespace syzcurve {

// Arithmetic mod a prime p < 2^31.  Products fit in int64/uint64 without
// overflow, which keeps the modular elimination loop branch-free.
namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    return pow(a, p - 2, p);
}

// Image of an integer mod p.
inline std::uint64_t from_int(const Int& z, std::uint64_t p) {
    Int m = z % static_cast<long>(p);
    long v = m.get_si();
    if (v < 0) v += static_cast<long>(p);
    return static_cast<std::uint64_t>(v);
}

// Image of a rational mod p; the denominator must be a unit mod p.
inline std::uint64_t from_rat(const Rat& q, std::uint64_t p) {
    std::uint64_t d = from_int(q.get_den(), p);
    if (d == 0)
        throw BadPrime("denominator divisible by prime " + std::to_string(p));
    return mul(from_int(q.get_num(), p), inv(d, p), p);
}

} // namespace modp

// Primes used for modular prefilters: 30-bit, far from small denominators.
inline constexpr std::uint64_t default_primes[] = {1073741789ULL, 1073741783ULL,
                                                   1073741741ULL, 1073741723ULL};

} // namespace syzcurve
