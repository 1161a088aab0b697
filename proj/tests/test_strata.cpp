#include <catch2/catch.hpp>

#include "cubicgit/formulas.hpp"
#include "cubicgit/jsonio.hpp"
#include "cubicgit/strata.hpp"

using namespace cubicgit;

#ifndef CUBICGIT_DATA_DIR
#define CUBICGIT_DATA_DIR "data"
#endif

static const std::string kData = CUBICGIT_DATA_DIR;

TEST_CASE("normal-form generators") {
    SECTION("coordinate-product point") {
        REQUIRE(gen::zeta() == parse_polynomial("x0*x4*x5 + x1*x2*x3", 6));
    }
    SECTION("secant-of-Veronese point") {
        REQUIRE(gen::omega() ==
                parse_polynomial("x0*x3^2 - x0*x4*x5 + x1^2*x4 - 2*x1*x2*x3 + x2^2*x5", 6));
    }
    SECTION("tau family: determinant equals the expanded form; a=1 is omega") {
        for (long a : {-3L, 0L, 1L, 2L, 5L}) REQUIRE(gen::tau(rat(a)) == tau_form(rat(a)));
        REQUIRE(gen::tau(Rat(1)) == gen::omega());
    }
    SECTION("sigma specializations") {
        REQUIRE(gen::sigma(rat(2), rat(3), Rat(0)) == gen::chi(rat(2), rat(3)));
        REQUIRE(gen::epsilon(rat(2), rat(3), rat(7) * gen::var(2)) == gen::sigma(rat(2), rat(3), rat(7)));
    }
    SECTION("malformed parameters are rejected") {
        REQUIRE_THROWS_AS(gen::alpha(gen::var(0) * gen::var(2), gen::var(2) * gen::var(3)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(gen::delta(gen::var(4) * gen::var(5), gen::var(0) * gen::var(1) * gen::var(2)),
                          std::invalid_argument);
    }
}

TEST_CASE("tau torus and shape matching") {
    SECTION("the recorded two-torus stabilizes every tau member") {
        for (long a : {-3L, 0L, 2L, 7L}) {
            Polynomial t = gen::tau(rat(a));
            for (const OnePS& lam : {OnePS({2, 1, 0, -1, -2, 0}), OnePS({4, 1, 1, -2, -2, -2}),
                                     OnePS({6, 2, 1, -3, -4, -2})}) {
                for (const auto& [m, c] : t.terms()) REQUIRE(weight(m, lam) == 0);
            }
        }
    }
    SECTION("matcher recovers the parameter through permutation and scaling") {
        Polynomial t2 = tau_form(rat(2)) * rat(5);
        Polynomial shuffled = substitute(t2, LinearChange::permutation({3, 0, 5, 2, 1, 4}).inverse());
        auto m = match_tau(shuffled);
        REQUIRE(m);
        REQUIRE(m->family == "tau");
        REQUIRE((*m->param == rat(2) || *m->param == rat(1, 2)));
        auto m0 = match_tau(tau_form(Rat(0)) * rat(-3));
        REQUIRE(m0);
        REQUIRE(*m0->param == 0);
        auto mo = match_tau(gen::omega());
        REQUIRE(mo);
        REQUIRE(mo->family == "omega");
        REQUIRE(!match_tau(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6)));
    }
    SECTION("zeta matcher accepts exactly the disjoint product pairs") {
        REQUIRE(match_zeta(parse_polynomial("7*x2*x3*x5 - 2*x0*x1*x4", 6)));
        REQUIRE(!match_zeta(parse_polynomial("x0*x1*x2 + x2*x3*x4", 6)));
        REQUIRE(!match_zeta(parse_polynomial("x0*x1^2 + x2*x3*x4", 6)));
    }
}

TEST_CASE("stabilizer dimensions") {
    REQUIRE(stabilizer_dim(gen::zeta()) == 4);
    REQUIRE(stabilizer_dim(gen::omega()) == 8);
    REQUIRE(stabilizer_dim(gen::chi(rat(2), rat(3))) == 3);
    REQUIRE(stabilizer_dim(gen::tau(rat(2))) == 2);
    REQUIRE(stabilizer_dim(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6)) == 0);
    REQUIRE(stabilizer_dim(gen::sigma(rat(2), rat(5), rat(3))) == 1);
}

TEST_CASE("singular loci on parametrizations") {
    SECTION("omega along the Veronese surface") {
        REQUIRE(verify_singular_on_param(gen::omega(), Parametrization::veronese()));
    }
    SECTION("epsilon along the rational normal quartic, cofactor identity") {
        Polynomial l = parse_polynomial("3*x0 - x1 + 2*x2 + 5*x3 - 4*x4", 6);
        REQUIRE(verify_singular_on_param(gen::epsilon(rat(2), rat(-7), l),
                                         Parametrization::rational_normal_quartic()));
    }
    SECTION("smooth form fails on any line") {
        Parametrization line;
        line.source_vars = 2;
        line.comps = {Polynomial::variable(2, 0), Polynomial::variable(2, 1), Polynomial(2),
                      Polynomial(2),              Polynomial(2),              Polynomial(2)};
        REQUIRE(!verify_singular_on_param(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6), line));
    }
    SECTION("determinantal member built through rank-one anchors") {
        // A(x) = R1 * x0 + R2 * x5 + generic filling: singular at the anchors
        Rng rng(21);
        std::array<std::array<Polynomial, 3>, 3> lin;
        std::vector<std::vector<Rat>> r1(3, std::vector<Rat>(3)), r2(3, std::vector<Rat>(3));
        std::array<Rat, 3> u1 = {rat(1), rat(2), rat(-1)}, v1 = {rat(3), rat(1), rat(2)};
        std::array<Rat, 3> u2 = {rat(2), rat(-1), rat(1)}, v2 = {rat(1), rat(-2), rat(1)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                r1[i][j] = u1[i] * v1[j];
                r2[i][j] = u2[i] * v2[j];
            }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Polynomial e = r1[i][j] * gen::var(0) + r2[i][j] * gen::var(5);
                for (int k = 1; k <= 4; ++k) e += rat(rng.uniform(-3, 3)) * gen::var(k);
                lin[i][j] = e;
            }
        Polynomial f = gen::phi(lin);
        REQUIRE(singular_at_point(f, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}));
        REQUIRE(singular_at_point(f, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    }
    SECTION("pencil normal form: singular along the line and at base-locus points") {
        Polynomial a = gen::alpha_diag(rat(-5), rat(-8));
        Parametrization line;
        line.source_vars = 2;
        line.comps = {Polynomial::variable(2, 0), Polynomial::variable(2, 1), Polynomial(2),
                      Polynomial(2),              Polynomial(2),              Polynomial(2)};
        REQUIRE(verify_singular_on_param(a, line));
        REQUIRE(singular_at_point(a, {Rat(0), Rat(0), Rat(2), Rat(1), Rat(2), Rat(1)}));
    }
}

TEST_CASE("torus semistability") {
    SECTION("coordinate-product point is semistable") {
        REQUIRE(torus_semistable(gen::zeta()).semistable);
    }
    SECTION("generic tau members are semistable") {
        REQUIRE(torus_semistable(gen::tau(rat(2))).semistable);
        REQUIRE(torus_semistable(gen::tau(rat(-7))).semistable);
    }
    SECTION("a cone over a threefold is unstable with a certificate") {
        Polynomial cone = parse_polynomial("x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x1*x2*x3 + x3*x4*x5", 6);
        auto t = torus_semistable(cone);
        REQUIRE(!t.semistable);
        REQUIRE(t.certificate);
        for (const auto& [m, c] : cone.terms()) REQUIRE(weight(m, *t.certificate) < 0);
    }
}

TEST_CASE("degeneration limits") {
    SECTION("recorded 1-PS sends tau(0) to a zeta form") {
        OnePS lam({4, 0, 3, -3, -2, -2});
        auto dl = degeneration_limit(tau_form(Rat(0)), lam);
        REQUIRE(dl);
        REQUIRE(dl->matched);
        REQUIRE(dl->matched->family == "zeta");
        REQUIRE(dl->limit == parse_polynomial("-1*x0*x4*x5 - x1*x2*x3", 6));
    }
    SECTION("generic double-line-supported form limits to the alpha shape") {
        Rng rng(19);
        OnePS s1({2, 2, -1, -1, -1, -1});
        auto sp = sign_partition(s1, 3);
        Polynomial f(6);
        for (const auto& m : sp.nonpos().members) f.add_term(m, rat(rng.uniform_nonzero(-9, 9)));
        auto dl = degeneration_limit(f, s1);
        REQUIRE(dl);
        REQUIRE(dl->matched);
        REQUIRE(dl->matched->family == "alpha");
    }
    SECTION("invariant forms match themselves") {
        OnePS lam({2, 1, 0, -1, -2, 0});
        auto dl = degeneration_limit(gen::tau(rat(3)), lam);
        REQUIRE(dl);
        REQUIRE(dl->matched);
        REQUIRE(dl->matched->family == "self");
    }
    SECTION("positive weight yields no limit") {
        REQUIRE(!degeneration_limit(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6),
                                    OnePS({1, 0, 0, 0, 0, -1})));
    }
    SECTION("sigma member lands on a generic tau point") {
        OnePS lam({2, 0, -2, -1, 0, 1});
        auto dl = degeneration_limit(gen::sigma(Rat(0), Rat(0), Rat(4)), lam);
        REQUIRE(dl);
        REQUIRE(dl->matched);
        REQUIRE(dl->matched->family == "tau");
        REQUIRE(dl->matched->param);
        REQUIRE(*dl->matched->param == Rat(-1));
    }
}

TEST_CASE("incidence graph") {
    auto edges = incidence_edges();
    REQUIRE(edges.size() == 11);
    for (const auto& e : edges) {
        INFO(e.edge.from << " -> " << e.edge.to);
        REQUIRE(e.verified);
    }
    SECTION("catalog and shipped data file agree") {
        for (const auto& c : verify_strata_file(kData + "/strata.json")) {
            INFO(c.name << " " << c.detail);
            REQUIRE(c.pass);
        }
    }
    SECTION("DOT output lists every stratum") {
        std::string dot = graph_to_dot();
        for (const auto& e : strata_catalog()) REQUIRE_THAT(dot, Catch::Contains(e.id));
    }
}

TEST_CASE("closed-form identities") {
    SECTION("euler characteristics") {
        REQUIRE(euler_char_isq3(CurveData(5, 6, 1)) == 2);
        REQUIRE(euler_char_isq3(CurveData(5, 5, 0)) == 4);
        REQUIRE(euler_char_isq3(CurveData(4, 3, 0)) == 8);
        REQUIRE_THROWS_AS(CurveData(2, 1, 0), std::invalid_argument);
    }
    SECTION("catalecticant minors are independent") {
        REQUIRE(catalecticant_minor_rank() == 4);
    }
    SECTION("brute-force count for cubics singular along a twisted cubic") {
        // (n,d,g) = (4,3,0): cubics in five variables whose five partials all
        // vanish along (s^3, s^2 t, s t^2, t^3, 0); kernel dimension must hit
        // the formula value 8
        std::vector<Polynomial> param = {
            Polynomial::variable(2, 0) * Polynomial::variable(2, 0) * Polynomial::variable(2, 0),
            Polynomial::variable(2, 0) * Polynomial::variable(2, 0) * Polynomial::variable(2, 1),
            Polynomial::variable(2, 0) * Polynomial::variable(2, 1) * Polynomial::variable(2, 1),
            Polynomial::variable(2, 1) * Polynomial::variable(2, 1) * Polynomial::variable(2, 1),
            Polynomial(2)};
        auto mons = all_exponents(5, 3);
        std::vector<std::vector<Rat>> rows;
        for (int i = 0; i < 5; ++i) {
            // partial of each basis monomial, composed with the parametrization
            std::vector<Polynomial> per_mon;
            for (const auto& m : mons)
                per_mon.push_back(partial(Polynomial::monomial(5, m), i).compose(param));
            for (const auto& bm : all_exponents(2, 6)) {
                std::vector<Rat> row;
                for (const auto& p : per_mon) row.push_back(p.coeff(bm));
                rows.push_back(std::move(row));
            }
        }
        Mat sys(rows.size(), mons.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < mons.size(); ++c) sys(r, c) = rows[r][c];
        REQUIRE(static_cast<long long>(mons.size()) - static_cast<long long>(sys.rank()) ==
                euler_char_isq3(CurveData(4, 3, 0)));
    }
    SECTION("Weyl dimension and Freudenthal multiplicities") {
        REQUIRE(weyl_dim_sl3(2, 2) == 27);
        REQUIRE(weyl_dim_sl3(6, 0) == 28);
        auto g22 = freudenthal_sl3(2, 2);
        long long total = 0;
        for (const auto& [w, m] : g22) total += m;
        REQUIRE(total == 27);
        REQUIRE(g22.at(Weight{0, 0}) == 3);
        REQUIRE(g22.at(Weight{1, 1}) == 2);
        REQUIRE(g22.at(Weight{2, 2}) == 1);
        REQUIRE(g22.at(Weight{3, 0}) == 1);
    }
    SECTION("plethysm decomposition balances") {
        auto rep = plethysm_check();
        REQUIRE(rep.dim_sym3_sym2 == 56);
        REQUIRE(rep.dim_gamma22 == 27);
        REQUIRE(rep.dim_sym6 == 28);
        REQUIRE(rep.dimension_identity);
        REQUIRE(rep.weight_multisets_balance);
    }
}
