#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cubicgit/formulas.hpp"
#include "cubicgit/strata.hpp"

namespace cubicgit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline CheckResult check(const std::string& name, bool pass, const std::string& detail = "") {
    return CheckResult{name, pass, detail};
}

// ---------------------------------------------------------------------------
// Small helpers shared by the batteries.
// ---------------------------------------------------------------------------

namespace detail_verify {

inline Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial d(m[0][0].n());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det_poly(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

/// Compress a polynomial supported on a variable subset into its own ring.
inline Polynomial restrict_vars(const Polynomial& f, const std::vector<int>& vars) {
    Polynomial r(static_cast<int>(vars.size()));
    for (const auto& [m, c] : f.terms()) {
        Exponent e(vars.size());
        int seen = 0;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            e[k] = m[vars[k]];
            seen += e[k];
        }
        if (seen != m.degree()) throw std::invalid_argument("restrict_vars: support outside subset");
        r.add_term(e, c);
    }
    return r;
}

/// Sylvester resultant of two quadratics in variable v, coefficients in the
/// remaining variables of the same ring.
inline Polynomial resultant_quadratics_in_var(const Polynomial& f, const Polynomial& g, int v) {
    int n = f.n();
    auto coeffs = [&](const Polynomial& p) {
        std::vector<Polynomial> c(3, Polynomial(n));
        for (const auto& [m, k] : p.terms()) {
            Exponent e = m;
            int d = e[v];
            if (d > 2) throw std::invalid_argument("resultant: degree > 2 in variable");
            e[v] = 0;
            c[d].add_term(e, k);
        }
        return c;
    };
    auto a = coeffs(f), b = coeffs(g);
    Polynomial z(n);
    std::vector<std::vector<Polynomial>> s = {{a[2], a[1], a[0], z},
                                              {z, a[2], a[1], a[0]},
                                              {b[2], b[1], b[0], z},
                                              {z, b[2], b[1], b[0]}};
    return det_poly(s);
}

/// Exact transversality test for two conics in the plane (x3,x4,x5) of the
/// 6-variable ring: the intersection consists of 4 distinct points.
inline bool conics_meet_transversally(const Polynomial& q, const Polynomial& q2, std::uint64_t seed = 2024) {
    Polynomial a = restrict_vars(q, {3, 4, 5});
    Polynomial b = restrict_vars(q2, {3, 4, 5});
    if (a.is_zero() || b.is_zero()) return false;
    Rng rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
        Mat t(3, 3);
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) t(i, j) = rat(rng.uniform(-4, 4));
        } while (t.det() == 0);
        Polynomial at = substitute(a, LinearChange(t)), bt = substitute(b, LinearChange(t));
        Exponent top{2, 0, 0};
        if (at.coeff(top) == 0 || bt.coeff(top) == 0) continue;
        Polynomial res = resultant_quadratics_in_var(at, bt, 0);
        if (res.is_zero()) return false;  // common component
        Polynomial bin = restrict_vars(res, {1, 2});
        if (bin.degree() != 4) continue;
        auto prof = binary_root_profile(bin);
        if (prof.distinct_roots) return true;
    }
    return false;
}

/// Discriminant (binary quartic in the pencil parameters x0, x1) of the pencil
/// of quadrics q(x2..x5) swept by an alpha form x0 q1 + x1 q2.
inline Polynomial alpha_pencil_discriminant(const Polynomial& alpha_form) {
    // symmetric matrices of the two quadrics
    auto quad_part = [&](int var) {
        Polynomial q(6);
        for (const auto& [m, c] : alpha_form.terms())
            if (m[var] == 1) {
                Exponent e = m;
                e[var] = 0;
                q.add_term(e, c);
            }
        return q;
    };
    Polynomial q1 = quad_part(0), q2 = quad_part(1);
    std::vector<std::vector<Polynomial>> pencil(4, std::vector<Polynomial>(4, Polynomial(2)));
    Polynomial s = Polynomial::variable(2, 0), t = Polynomial::variable(2, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto entry = [&](const Polynomial& q) {
                Exponent e = Exponent(std::size_t(6));
                e[2 + i] += 1;
                e[2 + j] += 1;
                Rat c = q.coeff(e);
                return i == j ? c : c / 2;
            };
            pencil[i][j] = entry(q1) * s + entry(q2) * t;
        }
    return det_poly(pencil);
}

inline Polynomial random_form(Rng& rng, int n, int d, const std::vector<int>& vars, long lo = -9, long hi = 9) {
    Polynomial f(n);
    std::vector<int> sub = vars;
    Polynomial probe(static_cast<int>(sub.size()));
    for (const auto& m : all_exponents(static_cast<int>(sub.size()), d)) {
        Exponent e = Exponent(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < sub.size(); ++k) e[sub[k]] = m[k];
        f.add_term(e, rat(rng.uniform(lo, hi)));
    }
    return f;
}

inline OnePS random_normalized(Rng& rng, long bound = 50) {
    for (;;) {
        std::vector<long long> a(6, 0);
        long long sum = 0;
        for (int i = 0; i < 5; ++i) {
            a[i] = rng.uniform(-bound, bound);
            sum += a[i];
        }
        a[5] = -sum;
        if (a[5] < -bound || a[5] > bound) continue;
        std::sort(a.begin(), a.end(), std::greater<long long>());
        OnePS lam(a);
        if (!lam.is_zero()) return lam;
    }
}

}  // namespace detail_verify

// ---------------------------------------------------------------------------
// Stabilizer dimensions (acceptance 5 + genericity battery).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_stabilizers(std::uint64_t seed) {
    using namespace detail_verify;
    std::vector<CheckResult> out;
    out.push_back(check("stabilizer_dim(zeta) == 4", stabilizer_dim(gen::zeta()) == 4));
    out.push_back(check("stabilizer_dim(omega) == 8", stabilizer_dim(gen::omega()) == 8));
    out.push_back(check("stabilizer_dim(chi generic) == 3", stabilizer_dim(gen::chi(rat(2), rat(3))) == 3));
    out.push_back(check("stabilizer_dim(tau generic) == 2", stabilizer_dim(gen::tau(rat(3))) == 2));

    Rng rng(seed);
    struct FamilyCase {
        std::string id;
        int expected;
        std::function<Polynomial(Rng&)> sample;
    };
    std::vector<FamilyCase> fams = {
        {"alpha", 1, [](Rng& r) { return gen::alpha(random_form(r, 6, 2, {2, 3, 4, 5}), random_form(r, 6, 2, {2, 3, 4, 5})); }},
        {"beta", 1,
         [](Rng& r) {
             return gen::beta(rat(r.uniform_nonzero(-9, 9)), rat(r.uniform_nonzero(-9, 9)),
                              random_form(r, 6, 1, {2, 3}), random_form(r, 6, 1, {2, 3}),
                              random_form(r, 6, 3, {2, 3}));
         }},
        {"gamma", 1,
         [](Rng& r) {
             return gen::gamma(random_form(r, 6, 2, {3, 4, 5}), random_form(r, 6, 1, {3, 4, 5}),
                               random_form(r, 6, 1, {3, 4, 5}), random_form(r, 6, 1, {3, 4, 5}));
         }},
        {"delta", 2, [](Rng& r) { return gen::delta(random_form(r, 6, 2, {4, 5}), random_form(r, 6, 3, {1, 2, 3})); }},
        {"epsilon", 0,
         [](Rng& r) {
             return gen::epsilon(rat(r.uniform_nonzero(-9, 9)), rat(r.uniform_nonzero(-9, 9)),
                                 random_form(r, 6, 1, {0, 1, 2, 3, 4}));
         }},
        {"sigma", 1,
         [](Rng& r) {
             return gen::sigma(rat(r.uniform_nonzero(-9, 9)), rat(r.uniform_nonzero(-9, 9)),
                               rat(r.uniform_nonzero(-9, 9)));
         }},
        {"tau", 2,
         [](Rng& r) {
             long a = r.uniform(2, 9);
             return gen::tau(rat(a));
         }},
        {"chi", 3,
         [](Rng& r) { return gen::chi(rat(r.uniform_nonzero(-9, 9)), rat(r.uniform_nonzero(-9, 9))); }},
    };
    for (const auto& fam : fams) {
        int trials = 20, equal = 0;
        bool lower_ok = true;
        for (int t = 0; t < trials; ++t) {
            int d = stabilizer_dim(fam.sample(rng));
            if (d < fam.expected) lower_ok = false;
            if (d == fam.expected) ++equal;
        }
        std::ostringstream os;
        os << equal << "/" << trials << " exact";
        out.push_back(check("stabilizer_dim(" + fam.id + ") >= " + std::to_string(fam.expected) +
                                ", generically equal",
                            lower_ok && equal * 100 >= trials * 95, os.str()));
    }
    // stable strata have finite stabilizers
    Rng rng2(seed + 1);
    std::array<std::array<Polynomial, 3>, 3> lin;
    for (auto& row : lin)
        for (auto& l : row) l = random_form(rng2, 6, 1, {0, 1, 2, 3, 4, 5}, -5, 5);
    out.push_back(check("stabilizer_dim(phi generic) == 0", stabilizer_dim(gen::phi(lin)) == 0));
    return out;
}

// ---------------------------------------------------------------------------
// zeta semistability (acceptance 6).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_zeta(std::uint64_t seed, int samples = 10000) {
    using namespace detail_verify;
    std::vector<CheckResult> out;
    out.push_back(check("torus_semistable(zeta)", torus_semistable(gen::zeta()).semistable));
    Rng rng(seed);
    Polynomial z = gen::zeta();
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
        OnePS lam = random_normalized(rng);
        long long s045 = lam.a[0] + lam.a[4] + lam.a[5];
        long long s123 = lam.a[1] + lam.a[2] + lam.a[3];
        if (!(s045 >= 0 || s123 >= 0)) ++bad;
        if (mu(z, lam) != std::max(s045, s123)) ++bad;
        if (mu(z, lam) < 0) ++bad;
    }
    out.push_back(check("zeta weight disjunction on " + std::to_string(samples) + " random 1-PS", bad == 0,
                        std::to_string(bad) + " counterexamples"));
    return out;
}

// ---------------------------------------------------------------------------
// Singular-locus identities (acceptance 7).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_singular_loci(std::uint64_t seed, int draws = 50) {
    using namespace detail_verify;
    std::vector<CheckResult> out;
    out.push_back(check("omega singular along the Veronese surface",
                        verify_singular_on_param(gen::omega(), Parametrization::veronese())));
    Rng rng(seed);
    bool eps_ok = true;
    for (int i = 0; i < draws; ++i) {
        Polynomial e = gen::epsilon(rat(rng.uniform(-9, 9)), rat(rng.uniform(-9, 9)),
                                    random_form(rng, 6, 1, {0, 1, 2, 3, 4}));
        if (!verify_singular_on_param(e, Parametrization::rational_normal_quartic())) eps_ok = false;
    }
    out.push_back(check("epsilon singular along the rational normal quartic (" + std::to_string(draws) +
                            " parameter draws)",
                        eps_ok));
    Polynomial fermat = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6);
    Parametrization line;
    line.source_vars = 2;
    line.comps = {Polynomial::variable(2, 0), Polynomial::variable(2, 1), Polynomial(2),
                  Polynomial(2),              Polynomial(2),              Polynomial(2)};
    out.push_back(check("negative control: Fermat not singular along a line",
                        !verify_singular_on_param(fermat, line)));
    return out;
}

// ---------------------------------------------------------------------------
// Classifier anchors (acceptance 10).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_classifier() {
    std::vector<CheckResult> out;
    auto p0 = std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    auto d4 = classify_isolated(parse_polynomial("x0*x4^2 - x0*x3*x5 + x1^3 + x2^3", 6), p0, 0);
    out.push_back(check("D4 at the corank-2 transversal germ", d4.is(SingularityClass::Tag::D, 4), d4.str()));
    auto e6 = classify_isolated(parse_polynomial("x0*x4^2 + x0*x5^2 + x1^3 + x2^3 + x3^3", 6), p0, 0);
    out.push_back(check("Etilde6 at the Fermat-type corank-3 germ", e6.is(SingularityClass::Tag::Etilde, 6), e6.str()));
    auto e7 = classify_isolated(gen::gamma_diag(2 * gen::var(4) - gen::var(5)), p0, 0);
    out.push_back(check("Etilde7 at the gamma normal form's corank-2 point",
                        e7.is(SingularityClass::Tag::Etilde, 7), e7.str()));
    auto a1 = classify_isolated(
        parse_polynomial("x0*x1^2 + x0*x2^2 + x0*x3^2 + x0*x4^2 + x0*x5^2 + x1^3", 6), p0, 0);
    out.push_back(check("A1 at a node", a1.is(SingularityClass::Tag::A, 1), a1.str()));

    // the 16 monomials excluded by the double-line class
    OnePS s1({2, 2, -1, -1, -1, -1});
    auto sp = sign_partition(s1, 3);
    bool sixteen = sp.pos.size() == 16 && sp.zero.size() == 20;
    for (const auto& m : sp.pos.members)
        if (m[2] + m[3] + m[4] + m[5] >= 2) sixteen = false;  // excluded monomials avoid the square of <x2..x5>
    out.push_back(check("16 monomials excluded from the double-line support", sixteen));
    return out;
}

// ---------------------------------------------------------------------------
// Property suite (acceptance 11).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_properties(std::uint64_t seed) {
    using namespace detail_verify;
    std::vector<CheckResult> out;
    Rng rng(seed);
    const auto mons = all_exponents(6, 3);

    std::vector<OnePS> lams;
    for (int i = 0; i < 100; ++i) lams.push_back(random_normalized(rng));

    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const Exponent& m1 = mons[rng.uniform(0, static_cast<long>(mons.size()) - 1)];
        const Exponent& m2 = mons[rng.uniform(0, static_cast<long>(mons.size()) - 1)];
        bool dom = dominates(m1, m2);
        if (!dom) continue;
        for (const auto& lam : lams)
            if (weight(m1, lam) < weight(m2, lam)) ++bad;
    }
    out.push_back(check("dominance never contradicts weight order (10^4 pairs x 10^2 1-PS)", bad == 0));

    bool dual_ok = true;
    for (int i = 0; i < 100; ++i) {
        OnePS lam = random_normalized(rng);
        auto sp = sign_partition(lam, 3);
        auto spd = sign_partition(lam.dual(), 3);
        if (!(reverse_indices(spd.zero) == sp.zero)) dual_ok = false;
        if (!(reverse_indices(spd.pos) == sp.neg)) dual_ok = false;
        if (sp.neg.size() + sp.zero.size() + sp.pos.size() != mons.size()) dual_ok = false;
    }
    out.push_back(check("sign-partition duality and counting", dual_ok));

    bool lim_ok = true;
    for (int i = 0; i < 50; ++i) {
        OnePS lam = random_normalized(rng, 9);
        auto sp = sign_partition(lam, 3);
        Polynomial f(6);
        for (const auto& m : sp.nonpos().members)
            if (rng.uniform(0, 2)) f.add_term(m, rat(rng.uniform_nonzero(-9, 9)));
        if (f.is_zero()) continue;
        auto l = limit(f, lam);
        if (!l) { lim_ok = false; continue; }
        if (!l->is_zero()) {
            for (const auto& [m, c] : l->terms())
                if (weight(m, lam) != 0) lim_ok = false;
            auto l2 = limit(*l, lam);
            if (!l2 || !(*l2 == *l)) lim_ok = false;
        }
        // mu scaling: sign invariance and value linearity
        OnePS lam3(std::vector<long long>{3 * lam.a[0], 3 * lam.a[1], 3 * lam.a[2], 3 * lam.a[3], 3 * lam.a[4],
                                          3 * lam.a[5]});
        if (mu(f, lam3) != 3 * mu(f, lam)) lim_ok = false;
    }
    out.push_back(check("limits are invariant parts, idempotent; mu scales linearly", lim_ok));

    bool euler_ok = true, group_ok = true;
    for (int i = 0; i < 25; ++i) {
        Polynomial f(6);
        for (const auto& m : mons)
            if (rng.uniform(0, 3) == 0) f.add_term(m, rat(rng.uniform(-9, 9)));
        Polynomial euler(6);
        for (int v = 0; v < 6; ++v) euler += gen::var(v) * partial(f, v);
        if (!(euler == Rat(3) * f)) euler_ok = false;

        Mat a(6, 6), b(6, 6);
        do {
            for (int r = 0; r < 6; ++r)
                for (int c = 0; c < 6; ++c) a(r, c) = rat(rng.uniform(-3, 3));
        } while (a.det() == 0);
        do {
            for (int r = 0; r < 6; ++r)
                for (int c = 0; c < 6; ++c) b(r, c) = rat(rng.uniform(-3, 3));
        } while (b.det() == 0);
        LinearChange ta(a), tb(b);
        if (!(substitute(substitute(f, ta), tb) == substitute(f, ta.compose(tb)))) group_ok = false;
        if (!f.is_zero() && substitute(f, ta).degree() != f.degree()) group_ok = false;
    }
    out.push_back(check("Euler identity sum x_i df/dx_i = 3 f", euler_ok));
    out.push_back(check("substitution is a right action preserving degree", group_ok));

    // monotonicity of mu under support inclusion
    bool mono_ok = true;
    for (int i = 0; i < 50; ++i) {
        OnePS lam = random_normalized(rng, 20);
        Polynomial g(6);
        for (const auto& m : mons)
            if (rng.uniform(0, 2) == 0) g.add_term(m, rat(rng.uniform_nonzero(-9, 9)));
        if (g.is_zero()) continue;
        Polynomial f(6);
        for (const auto& [m, c] : g.terms())
            if (rng.uniform(0, 1)) f.add_term(m, c);
        if (f.is_zero()) continue;
        if (mu(f, lam) > mu(g, lam)) mono_ok = false;
    }
    out.push_back(check("mu monotone under support inclusion", mono_ok));
    return out;
}

// ---------------------------------------------------------------------------
// Per-family verification batteries (alpha/beta/gamma/delta and special loci).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_strata_families(std::uint64_t seed) {
    using namespace detail_verify;
    std::vector<CheckResult> out;
    Rng rng(seed);
    auto p0 = std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};

    // --- alpha family: pencil discriminant drives three branches ---
    {
        Polynomial a = gen::alpha_diag(rat(-5), rat(-8));
        auto disc = discriminant_binary(detail_verify::alpha_pencil_discriminant(a));
        bool branch_i = disc.distinct_roots && !disc.vanishes;
        CurveParam line{{Polynomial::constant(1, Rat(1)), Polynomial::variable(1, 0), Polynomial(1), Polynomial(1),
                         Polynomial(1), Polynomial(1)}};
        auto generic = transversal_type_on_curve(a, line, rat(2));
        auto special0 = transversal_type_on_curve(a, line, rat(0));
        auto special1 = transversal_type_on_curve(a, line, rat(1));
        auto special2 = transversal_type_on_curve(a, line, rat(5, 8));
        branch_i = branch_i && generic.tag == SingularityClass::Tag::Ainf &&
                   special0.tag == SingularityClass::Tag::Dinf && special1.tag == SingularityClass::Tag::Dinf &&
                   special2.tag == SingularityClass::Tag::Dinf;
        // base-locus sample point of the two quadrics
        std::vector<Rat> ep = {Rat(0), Rat(0), Rat(2), Rat(1), Rat(2), Rat(1)};
        branch_i = branch_i && singular_at_point(a, ep) && hessian_corank(a, ep, 2).corank == 1;
        out.push_back(check("alpha: distinct discriminant roots give A_inf/D_inf along the line", branch_i));

        Polynomial x2 = gen::var(2), x3 = gen::var(3), x4 = gen::var(4), x5 = gen::var(5);
        Polynomial adbl = gen::alpha(x2 * x3 + x4 * x5, x2 * x3 + x4 * x4);
        auto disc2 = discriminant_binary(detail_verify::alpha_pencil_discriminant(adbl));
        auto found = search_degeneration(adbl, {"zeta"});
        out.push_back(check("alpha: double discriminant root degenerates to zeta",
                            disc2.max_multiplicity == 2 && found.has_value(),
                            found ? "1-PS found by bounded search" : "no 1-PS found"));

        Polynomial atrp = gen::alpha(x3 * x5 + x4 * x4, x2 * x5 + x3 * x3);
        auto disc3 = discriminant_binary(detail_verify::alpha_pencil_discriminant(atrp));
        MonomialSet supp(6, 3, atrp.support());
        bool unstable = is_subset_of_some_Mle0(supp, true);
        out.push_back(check("alpha: triple discriminant root is unstable", disc3.max_multiplicity >= 3 && unstable));
    }

    // --- delta family trichotomy ---
    {
        Polynomial x1 = gen::var(1), x2 = gen::var(2), x3 = gen::var(3), x4 = gen::var(4), x5 = gen::var(5);
        // i) q with a double root: support fits the M_<0 class of the corank-4 row
        Polynomial d1 = gen::delta(x5 * x5, random_form(rng, 6, 3, {1, 2, 3}));
        OnePS u6({11, -1, -1, -1, -1, -7});
        MonomialSet u6set = sign_partition(u6, 3).neg;
        MonomialSet s1(6, 3, d1.support());
        out.push_back(check("delta: double root in q fits the U6 class",
                            s1.subset_of(u6set) && is_subset_of_some_Mle0(s1, true)));
        // ii) cuspidal f fits the U5 class
        Polynomial d2 = gen::delta(x4 * x5, x1 * x3 * x3 - x2 * x2 * x2);
        OnePS u5({47, 11, -1, -7, -25, -25});
        MonomialSet u5set = sign_partition(u5, 3).neg;
        MonomialSet s2(6, 3, d2.support());
        out.push_back(check("delta: cuspidal f fits the U5 class", s2.subset_of(u5set) && is_subset_of_some_Mle0(s2, true)));
        // iii) nodal f degenerates to zeta
        Polynomial d3 = gen::delta(x4 * x5, x1 * x1 * x1 + x1 * x2 * x3);
        auto found = search_degeneration(d3, {"zeta"});
        out.push_back(check("delta: nodal f degenerates to zeta", found.has_value()));
        // iv) smooth f: three Etilde6 points of equal modulus, semistable
        Polynomial f = x1 * x1 * x1 + x2 * x2 * x2 + x3 * x3 * x3 + x1 * x2 * x3;
        Polynomial d4 = gen::delta(x4 * x5, f);
        auto c1 = classify_isolated(d4, p0, 0);
        auto c2 = classify_isolated(d4, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}, 4);
        auto c3 = classify_isolated(d4, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}, 5);
        bool et6 = c1.is(SingularityClass::Tag::Etilde, 6) && c2.is(SingularityClass::Tag::Etilde, 6) &&
                   c3.is(SingularityClass::Tag::Etilde, 6);
        bool same = c1.modulus && c2.modulus && c3.modulus && *c1.modulus == *c2.modulus && *c2.modulus == *c3.modulus;
        out.push_back(check("delta: three Etilde6 singularities of the same modulus", et6 && same));
        out.push_back(check("delta: generic member torus-semistable", torus_semistable(d4).semistable));
    }

    // --- beta family degeneracy conditions ---
    {
        Polynomial x2 = gen::var(2), x3 = gen::var(3);
        auto evidence = [&](const Polynomial& f) -> std::string {
            MonomialSet supp(6, 3, f.support());
            WeightPolytopeQuery q(6, 3, supp, true, false);
            if (feasible(q)) return "unstable";
            auto found = search_degeneration(f, {"tau", "omega", "zeta"});
            if (found) return "degenerates to " + found->second.matched->family;
            return "";
        };
        struct Case {
            std::string name;
            Polynomial form;
        };
        // samples taken with l1, l2 rotated onto coordinate directions; the
        // reduced group acting on (x2, x3) makes this loss-free per condition
        Polynomial fcube = x2 * x2 * x2 + x3 * x3 * x3;
        std::vector<Case> cases = {
            {"a = 0", gen::beta(Rat(0), rat(1), x2, x3, fcube)},
            {"b = 0", gen::beta(rat(1), Rat(0), x2, x3, fcube)},
            {"l1 = 0", gen::beta(rat(1), rat(1), Polynomial(6), x2 - x3, random_form(rng, 6, 3, {2, 3}))},
            {"f = 0", gen::beta(rat(1), rat(1), x2, x3, Polynomial(6))},
            {"l1 | f", gen::beta(rat(1), rat(1), x2, x2 + 3 * x3, x2 * (x2 * x2 + x2 * x3 - 2 * (x3 * x3)))},
            {"l2^2 | f", gen::beta(rat(1), rat(1), x2 + 9 * x3, x2, x2 * x2 * (x2 - 2 * x3))},
        };
        for (const auto& c : cases) {
            std::string ev = evidence(c.form);
            out.push_back(check("beta degeneracy (" + c.name + ") gives non-closed-orbit evidence", !ev.empty(), ev));
        }
        // generic beta: two Etilde8 of the same modulus
        Polynomial bgen = gen::beta(rat(1), rat(1), x2 + 2 * x3, x2 - 2 * x3,
                                    x2 * x2 * x2 + x2 * x3 * x3 + 3 * (x3 * x3 * x3));
        auto b1 = classify_isolated(bgen, p0, 0);
        auto b2 = classify_isolated(bgen, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}, 5);
        bool both = b1.is(SingularityClass::Tag::Etilde, 8) && b2.is(SingularityClass::Tag::Etilde, 8);
        bool same = b1.modulus && b2.modulus && *b1.modulus == *b2.modulus;
        out.push_back(check("beta: two Etilde8 singularities of the same modulus", both && same));
    }

    // --- gamma family transversality ---
    {
        Polynomial x1 = gen::var(1), x2 = gen::var(2), x3 = gen::var(3), x4 = gen::var(4), x5 = gen::var(5);
        Polynomial l = 2 * x4 - x5;
        Polynomial q = x3 * x3 - x4 * x5;
        Polynomial q2 = x4 * x5 - l * l;
        bool trans = detail_verify::conics_meet_transversally(q, q2, seed);
        Polynomial g = gen::gamma_diag(l);
        auto cls = classify_isolated(g, p0, 0);
        // singular along the conic (x0=x1=x2=0, x3^2 = x4 x5), parametrized by (0,0,0,t,1,t^2)
        CurveParam conic{{Polynomial(1), Polynomial(1), Polynomial(1), Polynomial::variable(1, 0),
                          Polynomial::constant(1, Rat(1)),
                          Polynomial::variable(1, 0) * Polynomial::variable(1, 0)}};
        auto generic = transversal_type_on_curve(g, conic, rat(3));
        bool special_ok = true;
        for (long t : {1, -2, 2, -1})
            if (transversal_type_on_curve(g, conic, rat(t)).tag != SingularityClass::Tag::Dinf) special_ok = false;
        out.push_back(check("gamma branch i: transversal conics, Etilde7 vertex, A_inf/D_inf along the conic",
                            trans && cls.is(SingularityClass::Tag::Etilde, 7) &&
                                generic.tag == SingularityClass::Tag::Ainf && special_ok));
        out.push_back(check("gamma branch i: member torus-semistable", torus_semistable(g).semistable));

        Polynomial g2 = gen::gamma(q, x4, x4, -1 * x5);  // q2 = l1*l3 - l2^2 = -x4*(x5+x4): tangent to q
        Polynomial q2b = -1 * (x4 * x5) - x4 * x4;
        bool trans2 = detail_verify::conics_meet_transversally(q, q2b, seed);
        auto found = search_degeneration(g2, {"tau", "omega", "zeta"});
        out.push_back(check("gamma branch ii: non-transversal conics degenerate to tau",
                            !trans2 && found.has_value() && found->second.matched->family == "tau",
                            found ? "lands at tau" : "no degeneration found"));
        // the omega member: l3 = x5, l2 = x3 gives tau(1)
        out.push_back(check("gamma branch ii: tangent configuration contains omega",
                            gen::gamma_diag(x3) == gen::omega()));
    }

    // --- sigma / chi transversal types along the rational normal quartic ---
    {
        CurveParam rnc{{Polynomial::constant(1, Rat(1)), Polynomial::variable(1, 0),
                        Polynomial::variable(1, 0) * Polynomial::variable(1, 0),
                        Polynomial::variable(1, 0) * Polynomial::variable(1, 0) * Polynomial::variable(1, 0),
                        Polynomial::variable(1, 0) * Polynomial::variable(1, 0) * Polynomial::variable(1, 0) *
                            Polynomial::variable(1, 0),
                        Polynomial(1)}};
        auto chi_t = transversal_type_on_curve(gen::chi(rat(2), rat(5)), rnc, rat(1));
        out.push_back(check("chi: transversal type along the quartic curve is at least A2",
                            chi_t.tag == SingularityClass::Tag::A && chi_t.index == 2 && chi_t.at_least,
                            chi_t.str()));
        auto sigma_t = transversal_type_on_curve(gen::sigma(rat(2), rat(5), rat(3)), rnc, rat(1));
        out.push_back(check("sigma: transversal type along the quartic curve is A_inf (A1 slice)",
                            sigma_t.tag == SingularityClass::Tag::Ainf, sigma_t.str()));
    }

    // --- corank semicontinuity probe for the corank-3 class ---
    {
        bool ok = true;
        for (int i = 0; i < 10; ++i) {
            Polynomial f = gen::var(0) * random_form(rng, 6, 2, {4, 5});
            for (const auto& m : all_exponents(6, 3)) {
                if (m[0] > 0) continue;
                if (rng.uniform(0, 2) == 0) f.add_term(m, rat(rng.uniform(-9, 9)));
            }
            if (f.is_zero()) continue;
            auto h = hessian_corank(f, p0, 0);
            if (h.corank < 3) ok = false;
        }
        out.push_back(check("corank >= 3 across the corank-3 support class", ok));
    }

    // --- simple singularities leave no destabilizing support ---
    {
        Rng rng3(seed + 2);
        Polynomial fermat = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6);
        Polynomial node = parse_polynomial(
            "x0*x1*x5 + x0*x2*x4 + x0*x3^2 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", 6);
        Polynomial a2 = parse_polynomial("x0*x1*x5 + x0*x2*x4 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", 6);
        bool ok = classify_isolated(node, p0, 0).is(SingularityClass::Tag::A, 1) &&
                  classify_isolated(a2, p0, 0).is(SingularityClass::Tag::A, 2);
        for (const Polynomial* f : {&fermat, &node, &a2}) {
            for (int t = 0; t < 5 && ok; ++t) {
                Polynomial g = *f;
                if (t > 0) {
                    Mat a(6, 6);
                    do {
                        for (int r = 0; r < 6; ++r)
                            for (int c = 0; c < 6; ++c) a(r, c) = rat(rng3.uniform(-3, 3));
                    } while (a.det() == 0);
                    g = substitute(*f, LinearChange(a));
                }
                MonomialSet supp(6, 3, g.support());
                if (is_subset_of_some_Mle0(supp, false)) ok = false;
            }
        }
        out.push_back(check("at-worst-simple fixtures admit no destabilizing 1-PS in sampled coordinates", ok));
    }

    // --- simply-elliptic recognition soundness on the classified germs ---
    {
        auto e6 = classify_isolated(gen::delta(gen::var(4) * gen::var(5),
                                               parse_polynomial("x1^3+x2^3+x3^3+x1*x2*x3", 6)),
                                    p0, 0);
        bool ok = e6.is(SingularityClass::Tag::Etilde, 6) && smooth_plane_cubic(e6.residual.homogeneous_part(3));
        auto e7 = classify_isolated(gen::gamma_diag(2 * gen::var(4) - gen::var(5)), p0, 0);
        ok = ok && e7.is(SingularityClass::Tag::Etilde, 7) &&
             binary_root_profile(e7.residual.homogeneous_part(4)).distinct_roots;
        // the defining quartic of the Etilde7 leading part is reconstructed in the classifier;
        // soundness = its recognition data had distinct roots, re-derive through the split
        SplitGerm g = split_germ(jet(gen::gamma_diag(2 * gen::var(4) - gen::var(5)), p0, 0, 12), 12);
        auto cls2 = classify_corank2_residual(g.residual, 12);
        ok = ok && cls2.is(SingularityClass::Tag::Etilde, 7);
        out.push_back(check("simply-elliptic leading forms define isolated singularities", ok));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Formulas (acceptance 8, 9).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_formulas() {
    std::vector<CheckResult> out;
    out.push_back(check("euler characteristic (5,6,1) == 2", euler_char_isq3(CurveData(5, 6, 1)) == 2));
    out.push_back(check("euler characteristic (5,5,0) == 4", euler_char_isq3(CurveData(5, 5, 0)) == 4));
    out.push_back(check("catalecticant 3x3 minors span rank 4", catalecticant_minor_rank() == 4));
    auto rep = plethysm_check();
    out.push_back(check("plethysm dimensions 56 = 1 + 27 + 28", rep.dimension_identity,
                        std::to_string(rep.dim_sym3_sym2) + " = 1 + " + std::to_string(rep.dim_gamma22) + " + " +
                            std::to_string(rep.dim_sym6)));
    out.push_back(check("plethysm weight multisets balance exactly", rep.weight_multisets_balance));
    return out;
}

// ---------------------------------------------------------------------------
// Incidence graph (acceptance 12).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_incidence() {
    std::vector<CheckResult> out;
    const std::vector<std::pair<std::string, int>> dims = {
        {"alpha", 1}, {"beta", 3}, {"gamma", 2}, {"delta", 1}, {"epsilon", 3}, {"phi", 2},
        {"sigma", 2}, {"tau", 1},  {"chi", 1},   {"zeta", 0},  {"omega", 0}};
    bool dims_ok = true;
    for (const auto& [id, d] : dims)
        if (catalog_entry(id).dim != d) dims_ok = false;
    out.push_back(check("boundary stratum dimensions", dims_ok));

    auto edges = incidence_edges();
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"beta", "sigma"}, {"epsilon", "sigma"}, {"sigma", "chi"}, {"sigma", "tau"},
        {"gamma", "tau"},  {"phi", "tau"},       {"tau", "omega"}, {"chi", "omega"},
        {"alpha", "zeta"}, {"delta", "zeta"},    {"tau", "zeta"}};
    bool all_present = edges.size() == expected.size();
    bool all_verified = true;
    for (const auto& [f, t] : expected) {
        bool found = false;
        for (const auto& e : edges)
            if (e.edge.from == f && e.edge.to == t) {
                found = true;
                if (!e.verified) all_verified = false;
            }
        if (!found) all_present = false;
    }
    out.push_back(check("all specialization edges present", all_present));
    out.push_back(check("every edge carries a verified witness", all_verified));
    return out;
}

// ---------------------------------------------------------------------------
// Tables (acceptance 1, 2, 4) and the sampling oracle (acceptance 3).
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_tables(const std::vector<GoldenRow>& golden1,
                                              const std::vector<GoldenRow>& golden2) {
    std::vector<CheckResult> out;
    auto recs1 = enumerate_maximal(6, 3, false);
    out.push_back(check("8 maximal nonstrict classes", recs1.size() == 8, std::to_string(recs1.size())));
    try {
        auto labeled = match_labels(recs1, golden1, 3);
        out.push_back(check("nonstrict classes match the S-series golden rows", true));
    } catch (const LabelMatchError& e) {
        out.push_back(check("nonstrict classes match the S-series golden rows", false, e.what()));
    }
    auto recs2 = enumerate_maximal(6, 3, true);
    out.push_back(check("10 maximal strict classes", recs2.size() == 10, std::to_string(recs2.size())));
    try {
        auto labeled = match_labels(recs2, golden2, 3);
        out.push_back(check("strict classes match the U-series golden rows", true));
    } catch (const LabelMatchError& e) {
        out.push_back(check("strict classes match the U-series golden rows", false, e.what()));
    }
    bool witness_ok = true;
    for (const auto* rs : {&recs1, &recs2})
        for (const auto& r : *rs) {
            for (const auto& m : r.members.members) {
                long long w = weight(m, r.witness);
                if (r.strict ? w >= 0 : w > 0) witness_ok = false;
            }
            if (!r.witness.normalized() || r.witness.is_zero()) witness_ok = false;
        }
    out.push_back(check("every witness re-verifies its sign condition on all members", witness_ok));
    return out;
}

inline std::vector<CheckResult> verify_oracle(long long bound = 61) {
    std::vector<CheckResult> out;
    auto recs1 = enumerate_maximal(6, 3, false);
    auto recs2 = enumerate_maximal(6, 3, true);
    auto o1 = sampling_oracle(6, 3, bound, false);
    out.push_back(check("sampling oracle (nonstrict, bound " + std::to_string(bound) + ") agrees",
                        oracle_agrees(recs1, o1),
                        std::to_string(o1.maximal.size()) + " maximal sets from " + std::to_string(o1.sampled) +
                            " 1-PS"));
    auto o2 = sampling_oracle(6, 3, bound, true);
    out.push_back(check("sampling oracle (strict, bound " + std::to_string(bound) + ") agrees",
                        oracle_agrees(recs2, o2),
                        std::to_string(o2.maximal.size()) + " maximal sets from " + std::to_string(o2.sampled) +
                            " 1-PS"));
    return out;
}

}  // namespace cubicgit
