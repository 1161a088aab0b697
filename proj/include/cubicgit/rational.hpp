#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicgit {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational num/den.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rat pow_rat(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? q : Rat(1) / q;
    long k = e > 0 ? e : -e;
    Rat r(1);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

/// Exact k-th root of a rational if it exists in Q.
inline std::optional<Rat> exact_root(const Rat& q, unsigned long k) {
    if (k == 0) throw std::invalid_argument("exact_root: k = 0");
    if (k == 1) return q;
    if (q == 0) return Rat(0);
    if (q < 0 && k % 2 == 0) return std::nullopt;
    Int num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
    if (!exact_n || !exact_d) return std::nullopt;
    Rat r = rat(neg ? Int(-rn) : rn, rd);
    return r;
}

/// Deterministic RNG (splitmix64); identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Nonzero uniform integer in [lo, hi].
    long uniform_nonzero(long lo, long hi) {
        for (;;) {
            long v = uniform(lo, hi);
            if (v != 0) return v;
        }
    }

    Rat rational(long lo, long hi, long max_den = 1) {
        long den = uniform(1, max_den);
        return rat(uniform(lo * den, hi * den), den);
    }

private:
    std::uint64_t state_;
};

}  // namespace cubicgit
