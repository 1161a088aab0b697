#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicgit/forms.hpp"
#include "cubicgit/poly.hpp"

namespace cubicgit {

/// Quasihomogeneous weight system on the local variables (entries in (0,1]).
struct WeightSystem {
    std::vector<Rat> w;

    explicit WeightSystem(std::vector<Rat> weights) : w(std::move(weights)) {
        for (const auto& q : w)
            if (q <= 0 || q > 1) throw std::invalid_argument("WeightSystem: weights must lie in (0,1]");
    }

    /// Weight systems of the simply-elliptic classes, in m local variables
    /// (residual variables first, pivot variables weight 1/2).
    static WeightSystem etilde(int r, int m) {
        std::vector<Rat> w;
        if (r == 6) w = {rat(1, 3), rat(1, 3), rat(1, 3)};
        else if (r == 7) w = {rat(1, 4), rat(1, 4)};
        else if (r == 8) w = {rat(1, 3), rat(1, 6)};
        else throw std::invalid_argument("WeightSystem::etilde: r must be 6, 7 or 8");
        while (static_cast<int>(w.size()) < m) w.push_back(rat(1, 2));
        return WeightSystem(std::move(w));
    }

    Rat weighted_degree(const Exponent& m) const {
        if (m.n() != w.size()) throw std::invalid_argument("WeightSystem: arity mismatch");
        Rat d(0);
        for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m[i];
        return d;
    }

    /// Terms of weighted degree exactly 1.
    Polynomial leading_part(const Polynomial& f) const {
        Polynomial r(f.n());
        for (const auto& [m, c] : f.terms())
            if (weighted_degree(m) == 1) r.add_term(m, c);
        return r;
    }
};

struct SingularityClass {
    enum class Tag { A, D, E, Etilde, Ainf, Dinf, Smooth, NotSingular, Unresolved };

    Tag tag = Tag::Unresolved;
    int index = 0;        // the k of A_k / D_k, or the r of E_r / Etilde_r
    bool at_least = false;
    int corank = -1;
    std::string reason;   // Unresolved diagnostics
    std::optional<Rat> modulus;  // j-invariant for the simply-elliptic classes

    // normal-form data after the exact quadratic split
    std::vector<Rat> pivots;
    Polynomial residual;  // polynomial in the corank null variables

    static SingularityClass make(Tag t, int idx) {
        SingularityClass c;
        c.tag = t;
        c.index = idx;
        return c;
    }
    static SingularityClass a(int k) { return make(Tag::A, k); }
    static SingularityClass d(int k) { return make(Tag::D, k); }
    static SingularityClass e(int r) { return make(Tag::E, r); }
    static SingularityClass etilde(int r) { return make(Tag::Etilde, r); }

    bool is(Tag t, int idx) const { return tag == t && index == idx && !at_least; }

    std::string str() const {
        std::string base;
        switch (tag) {
            case Tag::A: base = "A" + std::to_string(index); break;
            case Tag::D: base = "D" + std::to_string(index); break;
            case Tag::E: base = "E" + std::to_string(index); break;
            case Tag::Etilde: base = "Etilde" + std::to_string(index); break;
            case Tag::Ainf: base = "Ainf"; break;
            case Tag::Dinf: base = "Dinf"; break;
            case Tag::Smooth: base = "Smooth"; break;
            case Tag::NotSingular: base = "NotSingular"; break;
            case Tag::Unresolved: return "Unresolved(" + reason + ")";
        }
        return at_least ? "AtLeast(" + base + ")" : base;
    }
};

// ---------------------------------------------------------------------------
// Exact splitting lemma on jets.
// ---------------------------------------------------------------------------

struct SplitGerm {
    int m = 0;      // local variable count
    int rank = 0, corank = 0;
    std::vector<Rat> pivots;   // f ~ sum pivots[i] z_i^2 + residual(null vars)
    Polynomial residual;       // in corank variables
    Mat coord_change;          // x = L y with pivot coordinates first
};

namespace detail_sing {

/// Congruence diagonalization of a symmetric matrix: returns L with L^T Q L
/// diagonal, nonzero entries first.
inline std::pair<Mat, std::vector<Rat>> diagonalize_symmetric(Mat q) {
    std::size_t m = q.rows();
    Mat l = Mat::identity(m);
    auto apply = [&](const Mat& e) {  // x = E y acting on the quadratic form
        Mat et(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) et(i, j) = e(j, i);
        q = et * q * e;
        l = l * e;
    };
    for (std::size_t s = 0; s < m; ++s) {
        std::size_t piv = m;
        for (std::size_t i = s; i < m && piv == m; ++i)
            if (q(i, i) != 0) piv = i;
        if (piv == m) {
            std::size_t bi = m, bj = m;
            for (std::size_t i = s; i < m && bi == m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    if (q(i, j) != 0) { bi = i; bj = j; break; }
            if (bi == m) break;  // remaining block zero
            Mat e = Mat::identity(m);
            e(bj, bi) = 1;  // x_bj = y_bj + contribution: x = E y adds col
            apply(e);
            piv = bi;
        }
        if (piv != s) {
            Mat e(m, m);
            for (std::size_t i = 0; i < m; ++i) e(i, i) = 1;
            e(piv, piv) = e(s, s) = 0;
            e(piv, s) = e(s, piv) = 1;
            apply(e);
        }
        Mat e = Mat::identity(m);
        for (std::size_t i = s + 1; i < m; ++i)
            if (q(s, i) != 0) e(s, i) = -q(s, i) / q(s, s);
        apply(e);
    }
    std::vector<Rat> diag;
    std::vector<std::size_t> nonzero, zero;
    for (std::size_t i = 0; i < m; ++i) (q(i, i) != 0 ? nonzero : zero).push_back(i);
    Mat perm(m, m);
    std::size_t col = 0;
    for (std::size_t i : nonzero) {
        perm(i, col++) = 1;
        diag.push_back(q(i, i));
    }
    for (std::size_t i : zero) perm(i, col++) = 1;
    return {l * perm, diag};
}

}  // namespace detail_sing

/// Split a local jet (no constant or linear part) as sum c_i z_i^2 + residual
/// in the null variables, exactly, modulo degree > jet_order.
inline SplitGerm split_germ(const Polynomial& local_jet, int jet_order) {
    int m = local_jet.n();
    if (!local_jet.homogeneous_part(0).is_zero() || !local_jet.homogeneous_part(1).is_zero())
        throw std::invalid_argument("split_germ: jet has constant or linear part");
    Polynomial q2 = local_jet.homogeneous_part(2);
    Mat q(m, m);
    for (const auto& [mon, c] : q2.terms()) {
        int i = -1, j = -1;
        for (int t = 0; t < m; ++t) {
            if (mon[t] == 2) { i = j = t; break; }
            if (mon[t] == 1) { (i < 0 ? i : j) = t; }
        }
        if (i == j) q(i, i) = c;
        else { q(i, j) = c / 2; q(j, i) = c / 2; }
    }
    auto [l, diag] = detail_sing::diagonalize_symmetric(q);
    SplitGerm g;
    g.m = m;
    g.rank = static_cast<int>(diag.size());
    g.corank = m - g.rank;
    g.pivots = diag;
    g.coord_change = l;

    Polynomial f = substitute(local_jet, LinearChange(l)).truncated(jet_order);

    // Iteratively remove every term involving a pivot variable except the pure
    // squares: substituting z_i -> z_i - t/(2 c_i z_i) raises all defects, so
    // batching all minimal-degree offenders of one pivot per round terminates.
    for (;;) {
        int min_deg = jet_order + 1, pv = -1;
        for (const auto& [mon, c] : f.terms()) {
            if (mon.degree() < 3 || mon.degree() >= min_deg) continue;
            for (int i = 0; i < g.rank; ++i)
                if (mon[i] > 0) {
                    min_deg = mon.degree();
                    pv = i;
                    break;
                }
        }
        if (pv < 0) break;
        Polynomial delta(m);
        for (const auto& [mon, c] : f.terms()) {
            if (mon.degree() != min_deg || mon[pv] == 0) continue;
            Exponent dm = mon;
            dm[pv] -= 1;
            delta.add_term(dm, -c / (2 * g.pivots[pv]));
        }
        f = f.substitute_shift(pv, delta, jet_order);
    }

    // residual: terms purely in the null variables, compressed
    Polynomial res(g.corank);
    for (const auto& [mon, c] : f.terms()) {
        if (mon.degree() < 3) continue;
        Exponent e(static_cast<std::size_t>(g.corank));
        bool pure = true;
        for (int i = 0; i < g.rank && pure; ++i)
            if (mon[i] > 0) pure = false;
        if (!pure) continue;
        for (int i = 0; i < g.corank; ++i) e[i] = mon[g.rank + i];
        res.add_term(e, c);
    }
    g.residual = res;
    return g;
}

// ---------------------------------------------------------------------------
// Corank-2 normal-form analysis.
// ---------------------------------------------------------------------------

namespace detail_sing {

/// D-series reduction: residual with cubic part exactly g*U^2*V; returns the
/// normalized B(V) tail (terms in V alone) modulo jet_order, plus gamma.
inline std::pair<Rat, Polynomial> d_series_tail(Polynomial r, int jet_order) {
    Rat gamma = r.coeff(Exponent{2, 1});
    for (;;) {
        const Exponent* bad = nullptr;
        Rat coef;
        bool is_linear_u = false;
        for (const auto& [mon, c] : r.terms()) {
            if (mon.degree() < 4 || mon[0] == 0) continue;
            if (!bad || mon.degree() < bad->degree()) {
                bad = &mon;
                coef = c;
                is_linear_u = mon[0] == 1;
            }
        }
        if (!bad) break;
        if (is_linear_u) {
            // kill c * U V^b via U -> U + delta, 2 gamma delta U V = -term
            Exponent dm{0, bad->e[1] - 1};
            r = r.substitute_shift(0, Polynomial::monomial(2, dm, -coef / (2 * gamma)), jet_order);
        } else {
            // kill c * U^a V^b (a >= 2) via V -> V + eps, gamma U^2 eps = -term
            Exponent dm{bad->e[0] - 2, bad->e[1]};
            r = r.substitute_shift(1, Polynomial::monomial(2, dm, -coef / gamma), jet_order);
        }
    }
    Polynomial tail(2);
    for (const auto& [mon, c] : r.terms())
        if (mon[0] == 0) tail.add_term(mon, c);
    return {gamma, tail};
}

/// E-branch reduction: residual with cubic part exactly g*U^3; removes the
/// U^2-terms, returns (gamma, A, B) with f ~ g U^3 + U A(V) + B(V).
struct ECurveData {
    Rat gamma;
    Polynomial a, b;  // univariate in V, stored in 2 variables with U-degree 0
};

inline ECurveData e_series_normal(Polynomial r, int jet_order) {
    Rat gamma = r.coeff(Exponent{3, 0});
    for (;;) {
        const Exponent* bad = nullptr;
        Rat coef;
        for (const auto& [mon, c] : r.terms()) {
            if (mon.degree() < 4 || mon[0] != 2) continue;
            if (!bad || mon.degree() < bad->degree()) { bad = &mon; coef = c; }
        }
        if (!bad) break;
        // Tschirnhaus: U -> U + delta with 3 gamma delta U^2 = -term
        Exponent dm{0, bad->e[1]};
        r = r.substitute_shift(0, Polynomial::monomial(2, dm, -coef / (3 * gamma)), jet_order);
    }
    ECurveData out;
    out.gamma = gamma;
    out.a = Polynomial(2);
    out.b = Polynomial(2);
    for (const auto& [mon, c] : r.terms()) {
        if (mon[0] == 1) out.a.add_term(Exponent{0, mon.e[1]}, c);
        else if (mon[0] == 0) out.b.add_term(mon, c);
    }
    return out;
}

inline int v_order(const Polynomial& p) {  // order in V of a U-free polynomial
    int o = 1 << 20;
    for (const auto& [mon, c] : p.terms()) o = std::min(o, mon[1]);
    return o;
}

}  // namespace detail_sing

/// Classify a corank-2 residual (two null variables) up to the jet cap.
inline SingularityClass classify_corank2_residual(const Polynomial& residual, int jet_order) {
    Polynomial b3 = residual.homogeneous_part(3);
    SingularityClass out;
    out.corank = 2;
    if (b3.is_zero()) {
        Polynomial b4 = residual.homogeneous_part(4);
        if (residual.is_zero()) {
            out.tag = SingularityClass::Tag::Unresolved;
            out.reason = "corank 2 residual vanishes to jet cap";
            return out;
        }
        if (!b4.is_zero()) {
            auto prof = binary_root_profile(b4);
            if (prof.distinct_roots) {
                out = SingularityClass::etilde(7);
                out.corank = 2;
                out.modulus = binary_quartic_j(b4);
                return out;
            }
        }
        out = SingularityClass::etilde(7);
        out.corank = 2;
        out.at_least = true;
        return out;
    }
    auto prof = binary_root_profile(b3);
    if (prof.max_multiplicity == 1) {
        out = SingularityClass::d(4);
        out.corank = 2;
        return out;
    }
    if (prof.max_multiplicity == 2) {
        // repeated direction U, simple direction V: cubic becomes gamma U^2 V
        auto [ra, rb] = prof.repeated_dirs.at(0);
        Polynomial rep(2);  // linear form with the repeated direction in its kernel
        rep.add_term(Exponent{1, 0}, rb);
        rep.add_term(Exponent{0, 1}, -ra);
        // solve b3 = rep^2 * (su*u + sv*v) for the simple factor
        Polynomial rep2 = rep * rep;
        Mat sys(4, 2);
        std::vector<Rat> rhs(4, Rat(0));
        for (int k = 0; k <= 3; ++k) {  // coefficient of u^{3-k} v^k
            Exponent e{3 - k, k};
            if (k <= 2) sys(k, 0) = rep2.coeff(Exponent{2 - k, k});
            if (k >= 1) sys(k, 1) = rep2.coeff(Exponent{3 - k, k - 1});
            rhs[k] = b3.coeff(e);
        }
        auto sol = sys.solve(rhs);
        if (!sol) throw std::logic_error("corank-2 cubic: inconsistent factorization");
        Mat chg(2, 2);  // rows: U = rep, V = simple factor
        chg(0, 0) = rb;
        chg(0, 1) = -ra;
        chg(1, 0) = (*sol)[0];
        chg(1, 1) = (*sol)[1];
        Polynomial nf = substitute(residual, LinearChange(*chg.inverse())).truncated(jet_order);
        auto [gamma, tail] = detail_sing::d_series_tail(nf, jet_order);
        (void)gamma;
        if (tail.is_zero()) {
            out.tag = SingularityClass::Tag::Dinf;
            return out;
        }
        int k = detail_sing::v_order(tail) + 1;
        out = SingularityClass::d(k);
        out.corank = 2;
        return out;
    }
    // triple direction: E-branch
    auto [ra, rb] = prof.repeated_dirs.at(0);
    Mat chg(2, 2);
    chg(0, 0) = rb;  chg(0, 1) = -ra;   // U = rep
    if (rb != 0) { chg(1, 0) = 0; chg(1, 1) = 1; }  // V independent coordinate
    else { chg(1, 0) = 1; chg(1, 1) = 0; }
    Polynomial nf = substitute(residual, LinearChange(*chg.inverse())).truncated(jet_order);
    auto ecd = detail_sing::e_series_normal(nf, jet_order);
    int a = ecd.a.is_zero() ? (1 << 20) : detail_sing::v_order(ecd.a);
    int b = ecd.b.is_zero() ? (1 << 20) : detail_sing::v_order(ecd.b);
    if (b == 4) {
        out = SingularityClass::e(6);
        out.corank = 2;
        return out;
    }
    if (a == 3) {
        out = SingularityClass::e(7);
        out.corank = 2;
        return out;
    }
    if (b == 5) {
        out = SingularityClass::e(8);
        out.corank = 2;
        return out;
    }
    // level of the Etilde8 weight system (1/3, 1/6)
    Rat a4 = ecd.a.coeff(Exponent{0, 4});
    Rat b6 = ecd.b.coeff(Exponent{0, 6});
    Rat disc = -4 * ecd.gamma * a4 * a4 * a4 - 27 * ecd.gamma * ecd.gamma * b6 * b6;
    if (disc != 0) {
        out = SingularityClass::etilde(8);
        out.corank = 2;
        // modulus: j of the double cover branched at the roots of
        // gamma U^3 + a4 U Z^2 + b6 Z^3 together with Z = infinity
        Polynomial quart(2);
        quart.add_term(Exponent{3, 1}, ecd.gamma);
        if (a4 != 0) quart.add_term(Exponent{1, 3}, a4);
        if (b6 != 0) quart.add_term(Exponent{0, 4}, b6);
        out.modulus = binary_quartic_j(quart);
        return out;
    }
    out = SingularityClass::etilde(8);
    out.corank = 2;
    out.at_least = true;
    return out;
}

// ---------------------------------------------------------------------------
// Main classifier.
// ---------------------------------------------------------------------------

/// Classify the singularity of f at the rational point p (projective, in the
/// given chart). Errors if p is not a singular point of f.
inline SingularityClass classify_isolated(const Polynomial& f, const std::vector<Rat>& p, int chart,
                                          int jet_order = 12) {
    Polynomial loc = jet(f, p, chart, jet_order);
    if (!loc.homogeneous_part(0).is_zero()) throw std::invalid_argument("classify_isolated: point not on hypersurface");
    if (!loc.homogeneous_part(1).is_zero()) throw std::invalid_argument("classify_isolated: point not singular");
    SplitGerm g = split_germ(loc, jet_order);
    SingularityClass out;
    out.corank = g.corank;
    out.pivots = g.pivots;
    out.residual = g.residual;

    if (g.corank == 0) {
        out.tag = SingularityClass::Tag::A;
        out.index = 1;
        return out;
    }
    if (g.corank == 1) {
        if (g.residual.is_zero()) {
            out.tag = SingularityClass::Tag::Ainf;
            return out;
        }
        out.tag = SingularityClass::Tag::A;
        out.index = g.residual.order() - 1;
        return out;
    }
    if (g.corank == 2) {
        SingularityClass c = classify_corank2_residual(g.residual, jet_order);
        c.pivots = g.pivots;
        c.residual = g.residual;
        return c;
    }
    if (g.corank == 3) {
        Polynomial c3 = g.residual.homogeneous_part(3);
        if (!c3.is_zero() && smooth_plane_cubic(c3)) {
            out.tag = SingularityClass::Tag::Etilde;
            out.index = 6;
            out.modulus = ternary_cubic_j(c3);
            return out;
        }
        out.tag = SingularityClass::Tag::Etilde;
        out.index = 6;
        out.at_least = true;
        return out;
    }
    out.tag = SingularityClass::Tag::Unresolved;
    out.reason = "corank >= 4";
    return out;
}

// ---------------------------------------------------------------------------
// Transversal type along a parametrized curve.
// ---------------------------------------------------------------------------

/// Rational curve in P^{n-1}: component polynomials in one parameter s.
struct CurveParam {
    std::vector<Polynomial> comps;  // each in 1 variable

    int ambient() const { return static_cast<int>(comps.size()); }

    std::vector<Rat> at(const Rat& s) const {
        std::vector<Rat> p;
        p.reserve(comps.size());
        for (const auto& c : comps) p.push_back(c.evaluate({s}));
        return p;
    }

    std::vector<Rat> tangent_at(const Rat& s) const {
        // derivative of the affine chart map, up to scale: P_i' P_c - P_i P_c'
        std::vector<Rat> p = at(s), d;
        d.reserve(comps.size());
        for (const auto& c : comps) d.push_back(partial(c, 0).evaluate({s}));
        return d;  // combined with p in the caller (chart-dependent)
    }
};

/// Transversal singularity type of f along the curve at parameter s: Ainf for
/// corank 1 along the curve direction, Dinf for the x1 x2^2 pattern transverse
/// to the curve, AtLeast(A2) for a transverse cubic direction.
inline SingularityClass transversal_type_on_curve(const Polynomial& f, const CurveParam& curve, const Rat& s,
                                                  int jet_order = 12) {
    std::vector<Rat> p = curve.at(s);
    int chart = default_chart(p);
    Polynomial loc = jet(f, p, chart, jet_order);
    if (!loc.homogeneous_part(0).is_zero()) throw std::invalid_argument("transversal_type: point not on hypersurface");
    if (!loc.homogeneous_part(1).is_zero()) throw std::invalid_argument("transversal_type: point not singular");

    // affine tangent direction at p in the chart
    std::vector<Rat> pn = curve.at(s), dn = curve.tangent_at(s);
    std::vector<Rat> tangent;
    for (std::size_t i = 0; i < pn.size(); ++i) {
        if (static_cast<int>(i) == chart) continue;
        tangent.push_back(dn[i] * pn[chart] - pn[i] * dn[chart]);
    }
    bool tangent_zero = std::all_of(tangent.begin(), tangent.end(), [](const Rat& q) { return q == 0; });
    SingularityClass out;
    if (tangent_zero) {
        out.reason = "degenerate curve parametrization";
        return out;
    }

    SplitGerm g = split_germ(loc, jet_order);
    out.corank = g.corank;
    out.pivots = g.pivots;
    out.residual = g.residual;

    // tangent in the split coordinates: y = L^{-1} x
    std::vector<Rat> ty = g.coord_change.inverse()->apply(tangent);
    bool pivot_component = false;
    for (int i = 0; i < g.rank; ++i)
        if (ty[i] != 0) pivot_component = true;

    if (g.corank == 1) {
        if (pivot_component) {
            out.reason = "curve tangent not in the Hessian kernel";
            return out;
        }
        if (!g.residual.is_zero()) {
            out.reason = "corank 1 residual does not vanish along the curve";
            return out;
        }
        out.tag = SingularityClass::Tag::Ainf;
        return out;
    }
    if (g.corank == 2) {
        if (pivot_component) {
            out.reason = "curve tangent not in the Hessian kernel";
            return out;
        }
        Rat tu = ty[g.rank], tv = ty[g.rank + 1];
        Polynomial b3 = g.residual.homogeneous_part(3);
        if (b3.is_zero()) {
            out.reason = "corank 2 with vanishing cubic term";
            return out;
        }
        auto prof = binary_root_profile(b3);
        if (prof.max_multiplicity == 2) {
            auto [ra, rb] = prof.repeated_dirs.at(0);
            // repeated linear form rb*u - ra*v must vanish on the tangent,
            // the residual simple factor must not
            Rat rep_val = rb * tu - ra * tv;
            if (rep_val == 0) {
                out.tag = SingularityClass::Tag::Dinf;
                return out;
            }
            out.reason = "repeated cubic factor not transverse to the curve";
            return out;
        }
        if (prof.max_multiplicity == 3) {
            auto [ra, rb] = prof.repeated_dirs.at(0);
            Rat rep_val = rb * tu - ra * tv;
            if (rep_val == 0) {
                out.tag = SingularityClass::Tag::A;
                out.index = 2;
                out.at_least = true;
                return out;
            }
            out.reason = "triple cubic factor not transverse to the curve";
            return out;
        }
        out.reason = "corank 2 cubic with simple roots along a singular curve";
        return out;
    }
    out.reason = "corank " + std::to_string(g.corank) + " along curve";
    return out;
}

// ---------------------------------------------------------------------------
// Binary discriminant profile (pencil analysis entry point).
// ---------------------------------------------------------------------------

struct BinaryDiscriminant {
    bool vanishes = false;
    bool distinct_roots = false;
    int max_multiplicity = 0;
};

/// Square-free multiplicity profile of a binary form via exact gcds.
inline BinaryDiscriminant discriminant_binary(const Polynomial& form) {
    auto prof = binary_root_profile(form);
    BinaryDiscriminant out;
    out.vanishes = prof.vanishes;
    out.distinct_roots = prof.distinct_roots;
    out.max_multiplicity = prof.max_multiplicity;
    return out;
}

}  // namespace cubicgit
