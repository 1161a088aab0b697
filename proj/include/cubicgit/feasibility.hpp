#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicgit/weights.hpp"

namespace cubicgit {

/// Linear constraint sum_i a[i] x_i + c <= 0 (strict: < 0).
struct LinRow {
    std::vector<Rat> a;
    Rat c;
    bool strict = false;
};

namespace fm {

/// Primitive integer normal form of a row; false if the row is contradictory,
/// dropping happens when it is a tautology (then a is cleared and c set to -1).
inline bool normalize_row(LinRow& r) {
    bool all_zero = std::all_of(r.a.begin(), r.a.end(), [](const Rat& q) { return q == 0; });
    if (all_zero) {
        if (r.c > 0 || (r.c == 0 && r.strict)) return false;  // contradiction
        r.c = -1;                                             // canonical tautology
        return true;
    }
    Int l(1);
    for (const auto& q : r.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.c.get_den().get_mpz_t());
    Int g(0);
    for (auto& q : r.a) {
        q *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    }
    r.c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.c.get_num().get_mpz_t());
    if (g > 1) {
        for (auto& q : r.a) q /= g;
        r.c /= g;
    }
    return true;
}

struct Result {
    bool feasible = false;
    std::vector<Rat> witness;
    // infimum of the designated last variable over the projected feasible set
    std::optional<Rat> last_lower;
    bool last_lower_strict = false;
};

/// Fourier-Motzkin elimination with exact rationals and strict-flag
/// propagation. Variables are eliminated greedily (fewest pair products);
/// `last_var`, when nonnegative, is eliminated last so its exact infimum can
/// be read off. Witness by back-substitution in reverse elimination order.
inline Result solve(std::vector<LinRow> rows, int nvars, int last_var = -1) {
    Result res;
    std::vector<std::vector<LinRow>> level(static_cast<std::size_t>(std::max(nvars, 0)));
    std::vector<int> order;

    auto compact = [](std::vector<LinRow>& rs) -> bool {
        std::map<std::vector<Rat>, std::pair<Rat, bool>> best;  // coeffs -> (c, strict), tightest kept
        for (auto& r : rs) {
            if (!normalize_row(r)) return false;
            if (r.a.empty() || std::all_of(r.a.begin(), r.a.end(), [](const Rat& q) { return q == 0; }))
                continue;  // tautology
            auto it = best.find(r.a);
            if (it == best.end()) {
                best.emplace(r.a, std::make_pair(r.c, r.strict));
            } else {
                auto& [c, st] = it->second;
                if (r.c > c) { c = r.c; st = r.strict; }
                else if (r.c == c) st = st || r.strict;
            }
        }
        rs.clear();
        for (auto& [a, cs] : best) rs.push_back(LinRow{a, cs.first, cs.second});
        return true;
    };

    if (!compact(rows)) return res;
    std::vector<bool> done(static_cast<std::size_t>(std::max(nvars, 0)), false);
    for (int step = 0; step < nvars; ++step) {
        int v = -1;
        unsigned long long best_score = ~0ULL;
        for (int cand = 0; cand < nvars; ++cand) {
            if (done[cand]) continue;
            if (cand == last_var && step + 1 < nvars) continue;
            unsigned long long pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.a[cand] > 0) ++pos;
                else if (r.a[cand] < 0) ++neg;
            }
            unsigned long long score = pos * neg;
            if (score < best_score) { best_score = score; v = cand; }
        }
        if (v < 0) v = last_var;
        done[v] = true;
        order.push_back(v);
        level[v] = rows;
        std::vector<LinRow> pos, neg, rest;
        for (auto& r : rows) {
            if (r.a[v] > 0) pos.push_back(std::move(r));
            else if (r.a[v] < 0) neg.push_back(std::move(r));
            else rest.push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                LinRow nr;
                nr.a.resize(nvars, Rat(0));
                Rat alpha = -q.a[v], beta = p.a[v];
                for (int j = 0; j < nvars; ++j) nr.a[j] = alpha * p.a[j] + beta * q.a[j];
                nr.c = alpha * p.c + beta * q.c;
                nr.strict = p.strict || q.strict;
                rest.push_back(std::move(nr));
            }
        rows = std::move(rest);
        if (!compact(rows)) return res;
        if (rows.size() > 100000) throw std::runtime_error("fm::solve: resource guard (row explosion)");
    }

    res.feasible = true;
    res.witness.assign(static_cast<std::size_t>(std::max(nvars, 0)), Rat(0));
    for (int idx = nvars - 1; idx >= 0; --idx) {
        int v = order[idx];
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo(0), hi(0);
        for (const auto& r : level[v]) {
            if (r.a[v] == 0) continue;
            Rat bound = -r.c;
            for (int j = 0; j < nvars; ++j)
                if (j != v) bound -= r.a[j] * res.witness[j];
            bound /= r.a[v];
            if (r.a[v] > 0) {  // x_v <= bound
                if (!has_hi || bound < hi) { hi = bound; hi_strict = r.strict; }
                else if (bound == hi) hi_strict = hi_strict || r.strict;
                has_hi = true;
            } else {  // x_v >= bound
                if (!has_lo || bound > lo) { lo = bound; lo_strict = r.strict; }
                else if (bound == lo) lo_strict = lo_strict || r.strict;
                has_lo = true;
            }
        }
        if (idx == nvars - 1 && v == last_var && has_lo) {
            res.last_lower = lo;
            res.last_lower_strict = lo_strict;
        }
        if (has_lo && has_hi) {
            if (lo == hi) {
                if (lo_strict || hi_strict) throw std::runtime_error("fm::solve: inconsistent back-substitution");
                res.witness[v] = lo;
            } else {
                res.witness[v] = (lo + hi) / 2;
            }
        } else if (has_lo) {
            res.witness[v] = lo + 1;
        } else if (has_hi) {
            res.witness[v] = hi - 1;
        }
    }
    return res;
}

}  // namespace fm

/// Query: does a normalized nontrivial 1-PS exist with weight <= 0 (< 0 when
/// strict) on every monomial of s? `ordered` drops the a_i >= a_{i+1} rows to
/// quantify over the full torus instead of the normalized cone.
struct WeightPolytopeQuery {
    int n = 0;
    int d = 0;
    MonomialSet s;
    bool strict = false;
    bool ordered = true;

    WeightPolytopeQuery(int n, int d, MonomialSet set, bool strict, bool ordered = true)
        : n(n), d(d), s(std::move(set)), strict(strict), ordered(ordered) {
        if (s.members.empty()) throw std::invalid_argument("WeightPolytopeQuery: empty monomial set");
        if (!ordered && !strict)
            throw std::invalid_argument("WeightPolytopeQuery: unordered queries supported only in strict mode");
    }
};

namespace detail_feas {

/// Rows over the n-1 free variables a_0..a_{n-2}, with a_{n-1} = -(a_0+..+a_{n-2}).
inline std::vector<LinRow> build_rows(const WeightPolytopeQuery& q) {
    int n = q.n, k = n - 1;
    std::vector<LinRow> rows;
    for (const auto& m : q.s.members) {
        LinRow r;
        r.a.assign(k, Rat(0));
        for (int i = 0; i < k; ++i) r.a[i] = m[i] - m[n - 1];
        r.c = 0;
        r.strict = q.strict;
        rows.push_back(std::move(r));
    }
    if (q.ordered) {
        for (int i = 0; i + 1 < n; ++i) {  // a_{i+1} - a_i <= 0
            LinRow r;
            r.a.assign(k, Rat(0));
            if (i + 1 < k) {
                r.a[i + 1] += 1;
                r.a[i] -= 1;
            } else {  // a_{n-1} = -(sum)
                for (int j = 0; j < k; ++j) r.a[j] -= 1;
                r.a[i] -= 1;
            }
            r.c = 0;
            rows.push_back(std::move(r));
        }
        LinRow nt;  // 1 - a_0 <= 0
        nt.a.assign(k, Rat(0));
        nt.a[0] = -1;
        nt.c = 1;
        rows.push_back(std::move(nt));
    }
    return rows;
}

inline std::vector<long long> extend_weights(const std::vector<Rat>& partial) {
    std::vector<Rat> full = partial;
    Rat s(0);
    for (const auto& v : partial) s += v;
    full.push_back(-s);
    return OnePS::from_rational(full).a;
}

}  // namespace detail_feas

inline bool feasible(const WeightPolytopeQuery& q) {
    return fm::solve(detail_feas::build_rows(q), q.n - 1).feasible;
}

/// Any valid integer witness (not canonical).
inline std::optional<OnePS> find_any_witness(const WeightPolytopeQuery& q) {
    auto r = fm::solve(detail_feas::build_rows(q), q.n - 1);
    if (!r.feasible) return std::nullopt;
    return OnePS(detail_feas::extend_weights(r.witness));
}

/// Least possible max|a_i| over real solutions (lower bound for the integer search).
inline std::optional<Rat> min_infnorm(const WeightPolytopeQuery& q) {
    int k = q.n - 1;  // free vars, then t as variable index k
    std::vector<LinRow> rows0 = detail_feas::build_rows(q);
    std::vector<LinRow> rows;
    for (auto& r : rows0) {
        r.a.resize(k + 1, Rat(0));
        rows.push_back(std::move(r));
    }
    auto bound_pair = [&](const std::vector<Rat>& coeffs) {
        // coeffs . a - t <= 0  and  -coeffs . a - t <= 0
        for (int sgn : {1, -1}) {
            LinRow r;
            r.a.assign(k + 1, Rat(0));
            for (int j = 0; j < k; ++j) r.a[j] = sgn * coeffs[j];
            r.a[k] = -1;
            r.c = 0;
            rows.push_back(std::move(r));
        }
    };
    for (int i = 0; i < k; ++i) {
        std::vector<Rat> c(k, Rat(0));
        c[i] = 1;
        bound_pair(c);
    }
    bound_pair(std::vector<Rat>(k, Rat(-1)));  // a_{n-1}

    auto res = fm::solve(rows, k + 1, /*last_var=*/k);
    if (!res.feasible) return std::nullopt;
    if (res.last_lower) return *res.last_lower;
    return Rat(0);
}

namespace detail_feas {

/// Lexicographically least integer vector with max|a_i| <= bound satisfying the
/// query (strict rows as <= -1), or nullopt.
inline std::optional<std::vector<long long>> search_integer(const WeightPolytopeQuery& q, long long bound) {
    int n = q.n;
    const auto& mons = q.s.members;
    std::vector<long long> a(n, 0);
    std::vector<long long> partial(mons.size(), 0);
    long long limit = q.strict ? -1 : 0;

    auto rec = [&](auto&& self, int pos, long long sum) -> bool {
        if (pos == n) {
            if (sum != 0) return false;
            if (q.ordered) {
                if (a[0] < 1) return false;
            } else {
                bool nz = std::any_of(a.begin(), a.end(), [](long long v) { return v != 0; });
                if (!nz) return false;
            }
            for (std::size_t r = 0; r < mons.size(); ++r)
                if (partial[r] > limit) return false;
            return true;
        }
        long long hi = q.ordered && pos > 0 ? std::min(bound, a[pos - 1]) : bound;
        long long lo = -bound;
        if (q.ordered && pos == 0) lo = 1;
        int remain = n - pos - 1;
        for (long long v = lo; v <= hi; ++v) {
            // remaining values each within [-bound, min(bound, v)] (ordered) or [-bound, bound]
            long long rhi = q.ordered ? std::min(bound, v) : bound;
            long long s2 = sum + v;
            if (-s2 < remain * (-bound) || -s2 > remain * rhi) continue;
            bool ok = true;
            for (std::size_t r = 0; r < mons.size() && ok; ++r) {
                long long p = partial[r] + static_cast<long long>(mons[r][pos]) * v;
                long long min_rest = 0;
                for (int j = pos + 1; j < n; ++j) min_rest += static_cast<long long>(mons[r][j]) * (-bound);
                if (p + min_rest > limit) ok = false;
            }
            if (!ok) continue;
            for (std::size_t r = 0; r < mons.size(); ++r) partial[r] += static_cast<long long>(mons[r][pos]) * v;
            a[pos] = v;
            if (self(self, pos + 1, s2)) return true;
            for (std::size_t r = 0; r < mons.size(); ++r) partial[r] -= static_cast<long long>(mons[r][pos]) * v;
        }
        return false;
    };
    if (rec(rec, 0, 0)) return a;
    return std::nullopt;
}

}  // namespace detail_feas

/// Canonical destabilizing 1-PS: minimal max|a_i| over integer witnesses, ties
/// broken by lexicographic order; nullopt when the query is infeasible.
inline std::optional<OnePS> find_witness(const WeightPolytopeQuery& q) {
    auto r = fm::solve(detail_feas::build_rows(q), q.n - 1);
    if (!r.feasible) return std::nullopt;
    std::vector<long long> seed = detail_feas::extend_weights(r.witness);
    long long seed_max = 0;
    for (long long v : seed) seed_max = std::max(seed_max, v < 0 ? -v : v);

    long long start = 1;
    if (auto t = min_infnorm(q)) {
        Rat v = *t;
        Int ceil_t = (v.get_num() + v.get_den() - 1) / v.get_den();
        if (ceil_t > 0 && ceil_t.fits_slong_p()) start = std::max<long long>(1, ceil_t.get_si());
    }
    for (long long b = start; b <= seed_max; ++b) {
        if (auto a = detail_feas::search_integer(q, b)) return OnePS(*a);
    }
    // The scaled FM witness is integral, so the loop above must terminate by b = seed_max.
    return OnePS(seed);
}

/// True iff some normalized 1-PS puts all of s in M_<=0 (M_<0 when strict).
inline bool is_subset_of_some_Mle0(const MonomialSet& s, bool strict) {
    WeightPolytopeQuery q(s.n, s.d, s, strict);
    return feasible(q);
}

}  // namespace cubicgit
