#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "cubicgit/matrix.hpp"
#include "cubicgit/poly.hpp"

namespace cubicgit {

struct CurveData {
    int n;  // ambient projective dimension
    int d;  // curve degree
    int g;  // curve genus

    CurveData(int n, int d, int g) : n(n), d(d), g(g) {
        if (n < 3 || d < 1 || g < 0) throw std::invalid_argument("CurveData: out of range");
    }
};

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// chi(I_C^2(3)) = C(n+3,3) - (2n-1) d + (n+2)(g-1)
inline long long euler_char_isq3(const CurveData& c) {
    return binomial(c.n + 3, 3) - static_cast<long long>(2 * c.n - 1) * c.d +
           static_cast<long long>(c.n + 2) * (c.g - 1);
}

/// Rank of the span of the four 3x3 minors of the 3x4 catalecticant matrix
/// [[x0..x3],[x1..x4],[x2..x5]] inside the 56-dimensional space of cubics.
inline int catalecticant_minor_rank() {
    auto v = [](int i) { return Polynomial::variable(6, i); };
    std::array<std::array<Polynomial, 4>, 3> m = {{{v(0), v(1), v(2), v(3)},
                                                   {v(1), v(2), v(3), v(4)},
                                                   {v(2), v(3), v(4), v(5)}}};
    std::vector<Polynomial> minors;
    for (int drop = 0; drop < 4; ++drop) {
        std::array<int, 3> cols{};
        int c = 0;
        for (int j = 0; j < 4; ++j)
            if (j != drop) cols[c++] = j;
        Polynomial det = m[0][cols[0]] * (m[1][cols[1]] * m[2][cols[2]] - m[1][cols[2]] * m[2][cols[1]]) -
                         m[0][cols[1]] * (m[1][cols[0]] * m[2][cols[2]] - m[1][cols[2]] * m[2][cols[0]]) +
                         m[0][cols[2]] * (m[1][cols[0]] * m[2][cols[1]] - m[1][cols[1]] * m[2][cols[0]]);
        minors.push_back(det);
    }
    std::vector<Exponent> mons = all_exponents(6, 3);
    Mat mat(minors.size(), mons.size());
    for (std::size_t r = 0; r < minors.size(); ++r)
        for (std::size_t c2 = 0; c2 < mons.size(); ++c2) mat(r, c2) = minors[r].coeff(mons[c2]);
    return static_cast<int>(mat.rank());
}

// ---------------------------------------------------------------------------
// sl(3) weight combinatorics: Weyl dimension formula, Freudenthal recursion,
// and the Sym^3(Sym^2 V) decomposition check.
// ---------------------------------------------------------------------------

/// Weight in the fundamental-weight basis (p, q).
struct Weight {
    long p = 0, q = 0;
    bool operator<(const Weight& o) const { return p != o.p ? p < o.p : q < o.q; }
    bool operator==(const Weight& o) const { return p == o.p && q == o.q; }
};

using WeightMultiset = std::map<Weight, long long>;

inline long long weyl_dim_sl3(long p, long q) { return (p + 1) * (q + 1) * (p + q + 2) / 2; }

namespace detail_formulas {

/// Symmetric bilinear form on the weight lattice: (w1,w1)=(w2,w2)=2/3, (w1,w2)=1/3.
inline Rat form(const Weight& a, const Weight& b) {
    return rat(2 * a.p * b.p + a.p * b.q + a.q * b.p + 2 * a.q * b.q, 3);
}

inline const std::vector<Weight>& positive_roots() {
    static const std::vector<Weight> r = {{2, -1}, {-1, 2}, {1, 1}};  // alpha1, alpha2, alpha1+alpha2
    return r;
}

inline Weight add(const Weight& a, const Weight& b) { return {a.p + b.p, a.q + b.q}; }

inline bool dominant(const Weight& w) { return w.p >= 0 && w.q >= 0; }

/// Reflect into the dominant chamber.
inline Weight dominant_rep(Weight w) {
    for (int guard = 0; guard < 64; ++guard) {
        if (w.p < 0) w = {-w.p, w.p + w.q};
        else if (w.q < 0) w = {w.p + w.q, -w.q};
        else return w;
    }
    throw std::logic_error("dominant_rep: no convergence");
}

}  // namespace detail_formulas

/// Weight multiplicities of the irreducible sl(3)-module with highest weight
/// (p, q), by the Freudenthal recursion over exact rationals.
inline WeightMultiset freudenthal_sl3(long p, long q) {
    using namespace detail_formulas;
    Weight lam{p, q};
    const Weight rho{1, 1};
    // dominant weights below lam: lam - k1 alpha1 - k2 alpha2
    std::map<Weight, long long> mult;  // dominant representatives only
    std::vector<Weight> order;         // sorted by height descending
    std::vector<std::pair<Weight, long>> layers;
    for (long k1 = 0; k1 <= p + q; ++k1)
        for (long k2 = 0; k2 <= p + q; ++k2) {
            Weight w{p - 2 * k1 + k2, q + k1 - 2 * k2};
            if (!dominant(w)) continue;
            layers.emplace_back(w, k1 + k2);
        }
    std::sort(layers.begin(), layers.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    Rat clam = form(add(lam, rho), add(lam, rho));
    for (const auto& [w, h] : layers) {
        if (w == lam) {
            mult[w] = 1;
            continue;
        }
        Rat denom = clam - form(add(w, rho), add(w, rho));
        if (denom == 0) continue;  // not a weight of the module
        Rat sum(0);
        for (const auto& a : positive_roots()) {
            for (long k = 1;; ++k) {
                Weight wk = {w.p + k * a.p, w.q + k * a.q};
                Weight rep = dominant_rep(wk);
                auto it = mult.find(rep);
                if (it == mult.end()) break;
                sum += Rat(2) * Rat(static_cast<long>(it->second)) * form(wk, a);
            }
        }
        Rat m = sum / denom;
        if (m.get_den() != 1) throw std::logic_error("freudenthal_sl3: non-integer multiplicity");
        if (m != 0) mult[w] = m.get_num().get_si();
    }
    // expand Weyl orbits
    WeightMultiset full;
    for (const auto& [w, m] : mult) {
        // orbit of a dominant weight under W(A2)
        std::vector<Weight> orbit = {w};
        auto s1 = [](Weight x) { return Weight{-x.p, x.p + x.q}; };
        auto s2 = [](Weight x) { return Weight{x.p + x.q, -x.q}; };
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (Weight y : {s1(orbit[i]), s2(orbit[i])}) {
                bool seen = false;
                for (const auto& z : orbit)
                    if (z == y) seen = true;
                if (!seen) orbit.push_back(y);
            }
        }
        for (const auto& y : orbit) full[y] += m;
    }
    return full;
}

/// Weights of V (standard sl(3)-module) in fundamental coordinates.
inline const std::vector<Weight>& sl3_standard_weights() {
    static const std::vector<Weight> w = {{1, 0}, {-1, 1}, {0, -1}};
    return w;
}

inline WeightMultiset sym_power_weights(const WeightMultiset& base, int k) {
    // multiset of sums of k weights chosen with repetition
    std::vector<std::pair<Weight, long long>> v(base.begin(), base.end());
    WeightMultiset out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t idx, int left, Weight acc, long long ways) -> void {
        if (left == 0) {
            out[acc] += ways;
            return;
        }
        if (idx == v.size()) return;
        // choose j copies of v[idx]; multiplicity m contributes C(m+j-1, j) ways
        for (int j = 0; left - j >= 0; ++j) {
            long long w2 = ways;
            for (int t = 1; t <= j; ++t) w2 = w2 * (v[idx].second + t - 1) / t;
            Weight a = acc;
            a.p += j * v[idx].first.p;
            a.q += j * v[idx].first.q;
            self(self, idx + 1, left - j, a, w2);
        }
    };
    rec(rec, 0, k, Weight{0, 0}, 1);
    return out;
}

struct PlethysmReport {
    long long dim_sym3_sym2 = 0;
    long long dim_gamma22 = 0;
    long long dim_sym6 = 0;
    bool dimension_identity = false;
    bool weight_multisets_balance = false;
};

/// Check Sym^3(Sym^2 V) = C + Gamma_{2,2} + Sym^6 V for sl(3): dimension
/// identity 56 = 1 + 27 + 28 and exact weight-multiset balance.
inline PlethysmReport plethysm_check() {
    PlethysmReport r;
    WeightMultiset v;
    for (const auto& w : sl3_standard_weights()) v[w] += 1;
    WeightMultiset sym2 = sym_power_weights(v, 2);
    WeightMultiset sym3sym2 = sym_power_weights(sym2, 3);
    WeightMultiset sym6 = sym_power_weights(v, 6);
    WeightMultiset gamma22 = freudenthal_sl3(2, 2);

    auto total = [](const WeightMultiset& m) {
        long long t = 0;
        for (const auto& [w, c] : m) t += c;
        return t;
    };
    r.dim_sym3_sym2 = total(sym3sym2);
    r.dim_gamma22 = total(gamma22);
    r.dim_sym6 = total(sym6);
    r.dimension_identity =
        r.dim_sym3_sym2 == 1 + r.dim_gamma22 + r.dim_sym6 && r.dim_gamma22 == weyl_dim_sl3(2, 2);

    WeightMultiset rhs = gamma22;
    for (const auto& [w, c] : sym6) rhs[w] += c;
    rhs[Weight{0, 0}] += 1;  // the trivial summand
    r.weight_multisets_balance = rhs == sym3sym2;
    return r;
}

}  // namespace cubicgit
