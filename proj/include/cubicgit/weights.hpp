#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cubicgit/poly.hpp"

namespace cubicgit {

/// Diagonal one-parameter subgroup, given by integer weights summing to zero.
struct OnePS {
    std::vector<long long> a;

    OnePS() = default;
    explicit OnePS(std::vector<long long> w) : a(std::move(w)) {
        long long s = std::accumulate(a.begin(), a.end(), 0LL);
        if (s != 0) throw std::invalid_argument("OnePS: weights must sum to zero");
    }

    std::size_t n() const { return a.size(); }
    bool is_zero() const { return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; }); }
    bool normalized() const { return std::is_sorted(a.begin(), a.end(), std::greater<long long>()); }

    /// Weights sorted non-increasing.
    OnePS normalize() const {
        OnePS r = *this;
        std::sort(r.a.begin(), r.a.end(), std::greater<long long>());
        return r;
    }

    /// Dual: negated and reversed weights (again normalized if *this is).
    OnePS dual() const {
        OnePS r = *this;
        for (auto& v : r.a) v = -v;
        std::reverse(r.a.begin(), r.a.end());
        return r;
    }

    /// Clear denominators of a rational direction and divide by content.
    static OnePS from_rational(const std::vector<Rat>& w) {
        Int l(1);
        for (const auto& q : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> v;
        v.reserve(w.size());
        Int g(0);
        for (const auto& q : w) {
            Int x = q.get_num() * (l / q.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            v.push_back(x);
        }
        if (g == 0) g = 1;
        std::vector<long long> out;
        out.reserve(w.size());
        for (auto& x : v) {
            Int y = x / g;
            if (!y.fits_slong_p()) throw std::runtime_error("OnePS::from_rational: weight overflow");
            out.push_back(y.get_si());
        }
        return OnePS(out);
    }

    bool operator==(const OnePS& o) const { return a == o.a; }
};

inline long long weight(const Exponent& m, const OnePS& lam) {
    if (m.n() != lam.n()) throw std::invalid_argument("weight: length mismatch");
    long long w = 0;
    for (std::size_t i = 0; i < m.n(); ++i) w += static_cast<long long>(m[i]) * lam.a[i];
    return w;
}

/// Hilbert-Mumford numerical function: highest weight over the support of f.
inline long long mu(const Polynomial& f, const OnePS& lam) {
    if (f.is_zero()) throw std::invalid_argument("mu: zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("mu: polynomial not homogeneous");
    bool first = true;
    long long best = 0;
    for (const auto& [m, c] : f.terms()) {
        long long w = weight(m, lam);
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

inline std::vector<Exponent> mu_argmax(const Polynomial& f, const OnePS& lam) {
    long long best = mu(f, lam);
    std::vector<Exponent> out;
    for (const auto& [m, c] : f.terms())
        if (weight(m, lam) == best) out.push_back(m);
    return out;
}

/// Sorted, deduplicated set of degree-d exponents in n variables.
struct MonomialSet {
    int n = 0, d = 0;
    std::vector<Exponent> members;  // kept graded-lex descending

    MonomialSet() = default;
    MonomialSet(int n, int d, std::vector<Exponent> m) : n(n), d(d), members(std::move(m)) {
        for (const auto& e : members) {
            if (static_cast<int>(e.n()) != n || e.degree() != d)
                throw std::invalid_argument("MonomialSet: member of wrong shape");
        }
        std::sort(members.begin(), members.end(), GrlexDesc{});
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    std::size_t size() const { return members.size(); }
    bool contains(const Exponent& m) const {
        return std::binary_search(members.begin(), members.end(), m, GrlexDesc{});
    }
    bool subset_of(const MonomialSet& o) const {
        for (const auto& m : members)
            if (!o.contains(m)) return false;
        return true;
    }
    bool operator==(const MonomialSet& o) const { return n == o.n && d == o.d && members == o.members; }
};

struct SignPartition {
    MonomialSet neg, zero, pos;

    MonomialSet nonpos() const {
        std::vector<Exponent> m = neg.members;
        m.insert(m.end(), zero.members.begin(), zero.members.end());
        return MonomialSet(neg.n, neg.d, std::move(m));
    }
};

/// Partition of all degree-d monomials by weight sign.
inline SignPartition sign_partition(const OnePS& lam, int d) {
    if (lam.is_zero()) throw std::invalid_argument("sign_partition: trivial 1-PS");
    int n = static_cast<int>(lam.n());
    std::vector<Exponent> neg, zero, pos;
    for (const auto& m : all_exponents(n, d)) {
        long long w = weight(m, lam);
        (w < 0 ? neg : w == 0 ? zero : pos).push_back(m);
    }
    SignPartition s;
    s.neg = MonomialSet(n, d, std::move(neg));
    s.zero = MonomialSet(n, d, std::move(zero));
    s.pos = MonomialSet(n, d, std::move(pos));
    return s;
}

/// Invariant part lim_{t->0} f(lam(t)^{-1} x): defined iff mu(f, lam) <= 0,
/// in which case it is the sum of the weight-zero terms.
inline std::optional<Polynomial> limit(const Polynomial& f, const OnePS& lam) {
    if (mu(f, lam) > 0) return std::nullopt;
    Polynomial r(f.n());
    for (const auto& [m, c] : f.terms())
        if (weight(m, lam) == 0) r.add_term(m, c);
    return r;
}

/// Index-reversal image of a monomial set (the duality map pairing lam with lam.dual()).
inline MonomialSet reverse_indices(const MonomialSet& s) {
    std::vector<Exponent> out;
    out.reserve(s.members.size());
    for (const auto& m : s.members) {
        Exponent r = m;
        std::reverse(r.e.begin(), r.e.end());
        out.push_back(r);
    }
    return MonomialSet(s.n, s.d, std::move(out));
}

}  // namespace cubicgit
