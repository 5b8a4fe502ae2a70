#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace syzcurve {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class's string constructor does not canonicalize; go through this
// helper so 4/6 and 2/3 compare equal.
inline Rat rat_from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Binomial coefficient C(n, k); zero for k < 0 or k > n.  Used for dimension
// counts dim S_k = C(k+2, 2) and Hilbert-polynomial evaluations, where n can
// be negative in intermediate formulas (treated as an empty count).
inline long binom2(long n) { return n < 0 ? 0 : n * (n + 1) / 2; } // C(n+1, 2)

inline long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return static_cast<long>(r.get_si());
}

// lcm of denominators of a row of rationals; 1 for an empty row.
inline Int common_denominator(const std::vector<Rat>& row) {
    Int l = 1;
    for (const Rat& q : row) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

} // namespace syzcurve
