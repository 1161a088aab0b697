#include <catch2/catch.hpp>

#include "cubicgit/sing.hpp"
#include "cubicgit/strata.hpp"

using namespace cubicgit;

static std::vector<Rat> pt(std::initializer_list<long> l) {
    std::vector<Rat> p;
    for (long v : l) p.push_back(rat(v));
    return p;
}

static const std::vector<Rat> kOrigin = pt({1, 0, 0, 0, 0, 0});

TEST_CASE("classifier anchors") {
    SECTION("nondegenerate quadratic cone is A1") {
        auto c = classify_isolated(
            parse_polynomial("x0*x1^2 + x0*x2^2 + x0*x3^2 + x0*x4^2 + x0*x5^2 + x1^3", 6), kOrigin, 0);
        REQUIRE(c.str() == "A1");
        REQUIRE(c.corank == 0);
    }
    SECTION("transversal corank-2 germ is D4") {
        auto c = classify_isolated(parse_polynomial("x0*x4^2 - x0*x3*x5 + x1^3 + x2^3", 6), kOrigin, 0);
        REQUIRE(c.str() == "D4");
    }
    SECTION("smooth corank-3 cubic residual is Etilde6") {
        auto c = classify_isolated(parse_polynomial("x0*x4^2 + x0*x5^2 + x1^3 + x2^3 + x3^3", 6), kOrigin, 0);
        REQUIRE(c.str() == "Etilde6");
        REQUIRE(c.modulus);
    }
    SECTION("gamma minimal-orbit form has an Etilde7 point") {
        auto c = classify_isolated(gen::gamma_diag(2 * gen::var(4) - gen::var(5)), kOrigin, 0);
        REQUIRE(c.str() == "Etilde7");
        REQUIRE(c.corank == 2);
    }
    SECTION("A-series orders from the one-variable residual") {
        auto a2 = classify_isolated(
            parse_polynomial("x0*x2^2 + x0*x3^2 + x0*x4^2 + x0*x5^2 + x1^3", 6), kOrigin, 0);
        REQUIRE(a2.str() == "A2");
        // mixed term eliminated by the split: still A2
        auto a2b = classify_isolated(
            parse_polynomial("x0*x2^2 + x0*x3^2 + x0*x4^2 + x0*x5^2 - x1^2*x2 + x1^3", 6), kOrigin, 0);
        REQUIRE(a2b.str() == "A2");
        // residual x1^3 + (x2-elimination tail): order 4 in the killed direction
        auto e6like = classify_isolated(
            parse_polynomial("x0*x4^2 - x0*x3*x5 + x1^3 + x2^2*x4", 6), kOrigin, 0);
        REQUIRE(e6like.str() == "E6");
    }
    SECTION("E7 from a triple line with cubic xA(y)") {
        auto c = classify_isolated(parse_polynomial("x0*x4^2 - x0*x3*x5 + x1^3 + x1*x2^3", 6), kOrigin, 0);
        REQUIRE(c.str() == "E7");
    }
    SECTION("A3 from a corank-1 split chain") {
        auto c = classify_isolated(
            parse_polynomial("x0*x2^2 + x0*x3^2 + x0*x4^2 + x0*x5^2 + x1^2*x2", 6), kOrigin, 0);
        REQUIRE(c.str() == "A3");
        REQUIRE(c.corank == 1);
    }
    SECTION("A_inf when the corank-1 residual vanishes") {
        // singular along the x1-axis of the chart
        auto c = classify_isolated(
            parse_polynomial("x0*x2^2 + x0*x3^2 + x0*x4^2 + x0*x5^2 + x2*x3*x4", 6), kOrigin, 0);
        REQUIRE(c.str() == "Ainf");
    }
    SECTION("non-isolated corank-2 germ is flagged beyond the simply-elliptic range") {
        auto c = classify_isolated(parse_polynomial("x0*x4^2 - x0*x3*x5 + x1^3 + x2^2*x3", 6), kOrigin, 0);
        REQUIRE(c.str() == "AtLeast(Etilde8)");
    }
    SECTION("corank >= 4 is never classified") {
        auto c = classify_isolated(parse_polynomial("x0*x5^2 + x1^3 + x2^3 + x3^3 + x2*x3*x4", 6), kOrigin, 0);
        REQUIRE(c.tag == SingularityClass::Tag::Unresolved);
        REQUIRE_THAT(c.str(), Catch::Contains("corank"));
    }
    SECTION("misuse errors") {
        Polynomial fermat = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6);
        REQUIRE_THROWS_AS(classify_isolated(fermat, pt({1, 0, 0, 0, 0, -1}), 0), std::invalid_argument);
        REQUIRE_THROWS_AS(classify_isolated(fermat, pt({1, 1, 1, 1, 1, 1}), 0), std::invalid_argument);
    }
}

TEST_CASE("corank-2 residual recognition on direct germs") {
    auto classify2 = [](const Polynomial& r) { return classify_corank2_residual(r, 12); };
    Polynomial u = Polynomial::variable(2, 0), v = Polynomial::variable(2, 1);
    SECTION("E8 from U^3 + V^5") {
        REQUIRE(classify2(u * u * u + v * v * v * v * v).str() == "E8");
    }
    SECTION("D-series orders") {
        REQUIRE(classify2(u * u * v + v * v * v * v).str() == "D5");
        REQUIRE(classify2(u * u * v + v * v * v * v * v * v).str() == "D7");
        REQUIRE(classify2(u * u * v).str() == "Dinf");
        // repeated factor along the second variable, mixed tail
        REQUIRE(classify2(u * v * v + u * u * u * u).str() == "D5");
        REQUIRE(classify2((u + v) * (u + v) * v + u * u * u * u * u).str() == "D6");
    }
    SECTION("simply-elliptic J10 level") {
        Polynomial j10 = u * u * u + 3 * (u * v * v * v * v) - 2 * (v * v * v * v * v * v);
        auto c = classify2(j10);
        REQUIRE(c.str() == "Etilde8");
        REQUIRE(c.modulus);
        // degenerate level form: 4 a^3 + 27 b^2 = 0 pattern
        Polynomial degen = u * u * u - 3 * (u * v * v * v * v) + 2 * (v * v * v * v * v * v);
        REQUIRE(classify2(degen).str() == "AtLeast(Etilde8)");
    }
    SECTION("X9 level: square-free quartic") {
        REQUIRE(classify2(u * u * u * u + v * v * v * v).str() == "Etilde7");
        REQUIRE(classify2(u * u * (u * u + v * v)).str() == "AtLeast(Etilde7)");
    }
}

TEST_CASE("generic members of the nonstable classes carry simply-elliptic points") {
    // the classes with witnesses (2,1,0,0,-1,-2), (4,1,1,-2,-2,-2), (2,0,0,0,-1,-1)
    // have a singular point at (1:0:...:0) whose generic type is Etilde 8, 7, 6
    Rng rng(61);
    auto expect = [&](const OnePS& lam, int r) {
        auto sp = sign_partition(lam, 3);
        for (int trial = 0; trial < 5; ++trial) {
            Polynomial f(6);
            for (const auto& m : sp.nonpos().members) f.add_term(m, rat(rng.uniform_nonzero(-9, 9)));
            // recognition resolves by weighted level 6; jet order 8 keeps the
            // dense split small
            auto c = classify_isolated(f, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}, 0, 8);
            INFO("class with a0 = " << lam.a[0] << ", trial " << trial << " -> " << c.str());
            REQUIRE(c.is(SingularityClass::Tag::Etilde, r));
        }
    };
    expect(OnePS({2, 1, 0, 0, -1, -2}), 8);
    expect(OnePS({4, 1, 1, -2, -2, -2}), 7);
    expect(OnePS({2, 0, 0, 0, -1, -1}), 6);
}

TEST_CASE("classification at a translated point") {
    // move the D4 vertex to (1:2:0:0:0:0) by a unipotent change
    Polynomial f = parse_polynomial("x0*x4^2 - x0*x3*x5 + x1^3 + x2^3", 6);
    Mat t = Mat::identity(6);
    t(1, 0) = 2;  // x1 -> x1 + 2 x0
    Polynomial g = substitute(f, LinearChange(t).inverse());
    std::vector<Rat> p = {Rat(1), Rat(2), Rat(0), Rat(0), Rat(0), Rat(0)};
    REQUIRE(singular_at_point(g, p));
    REQUIRE(classify_isolated(g, p, 0).str() == "D4");
}

TEST_CASE("classification is invariant under exact linear changes") {
    Rng rng(41);
    std::vector<Polynomial> germs = {
        parse_polynomial("x0*x4^2 - x0*x3*x5 + x1^3 + x2^3", 6),
        parse_polynomial("x0*x4^2 + x0*x5^2 + x1^3 + x2^3 + x3^3", 6),
        gen::gamma_diag(2 * gen::var(4) - gen::var(5)),
    };
    for (const auto& f : germs) {
        auto base = classify_isolated(f, kOrigin, 0);
        for (int trial = 0; trial < 3; ++trial) {
            // block change fixing (1:0:...:0)
            Mat t = Mat::identity(6);
            for (int i = 1; i < 6; ++i)
                for (int j = 1; j < 6; ++j) t(i, j) = rat(rng.uniform(-2, 2));
            t(0, 0) = 1;
            if (t.det() == 0) continue;
            auto conj = classify_isolated(substitute(f, LinearChange(t)), kOrigin, 0);
            REQUIRE(conj.str() == base.str());
            if (base.modulus) {
                REQUIRE(conj.modulus);
                REQUIRE(*conj.modulus == *base.modulus);
            }
        }
    }
}

TEST_CASE("transversal types along curves") {
    Polynomial a = gen::alpha_diag(rat(-5), rat(-8));
    CurveParam line{{Polynomial::constant(1, Rat(1)), Polynomial::variable(1, 0), Polynomial(1), Polynomial(1),
                     Polynomial(1), Polynomial(1)}};
    SECTION("A_inf at generic points of the double line") {
        REQUIRE(transversal_type_on_curve(a, line, rat(2)).str() == "Ainf");
        REQUIRE(transversal_type_on_curve(a, line, rat(-3)).str() == "Ainf");
    }
    SECTION("D_inf at the four discriminant roots") {
        REQUIRE(transversal_type_on_curve(a, line, rat(0)).str() == "Dinf");
        REQUIRE(transversal_type_on_curve(a, line, rat(1)).str() == "Dinf");
        REQUIRE(transversal_type_on_curve(a, line, rat(5, 8)).str() == "Dinf");
    }
    SECTION("errors off the singular locus") {
        Polynomial fermat = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6);
        REQUIRE_THROWS_AS(transversal_type_on_curve(fermat, line, rat(2)), std::invalid_argument);
    }
}

TEST_CASE("simply-elliptic weight systems") {
    SECTION("weights lie in (0,1] and pad with 1/2") {
        auto w6 = WeightSystem::etilde(6, 5);
        REQUIRE(w6.w == std::vector<Rat>{rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 2), rat(1, 2)});
        auto w7 = WeightSystem::etilde(7, 5);
        REQUIRE(w7.w == std::vector<Rat>{rat(1, 4), rat(1, 4), rat(1, 2), rat(1, 2), rat(1, 2)});
        auto w8 = WeightSystem::etilde(8, 5);
        REQUIRE(w8.w == std::vector<Rat>{rat(1, 3), rat(1, 6), rat(1, 2), rat(1, 2), rat(1, 2)});
        REQUIRE_THROWS_AS(WeightSystem({rat(3, 2)}), std::invalid_argument);
    }
    SECTION("leading parts of the recognized germs are quasihomogeneous of degree 1") {
        // Etilde7 model germ: residual quartic in the first two variables plus
        // pivot squares; its weight-1 part under (1/4,1/4,1/2,1/2,1/2) is the
        // whole normal form, and isolatedness is the square-free quartic test.
        auto g = split_germ(jet(gen::gamma_diag(2 * gen::var(4) - gen::var(5)), kOrigin, 0, 12), 12);
        REQUIRE(g.corank == 2);
        Polynomial model(5);
        for (const auto& [m, c] : g.residual.terms())
            model.add_term(Exponent{m[0], m[1], 0, 0, 0}, c);
        for (int i = 0; i < g.rank; ++i) {
            Exponent e = Exponent(std::size_t(5));
            e[2 + i] = 2;
            model.add_term(e, g.pivots[i]);
        }
        auto ws = WeightSystem::etilde(7, 5);
        Polynomial lead = ws.leading_part(model);
        for (const auto& [m, c] : lead.terms()) REQUIRE(ws.weighted_degree(m) == 1);
        // the two-variable part of the leading form is the recognition quartic
        Polynomial quart(2);
        for (const auto& [m, c] : lead.terms())
            if (m[2] == 0 && m[3] == 0 && m[4] == 0) quart.add_term(Exponent{m[0], m[1]}, c);
        REQUIRE(quart == g.residual.homogeneous_part(4));
        REQUIRE(binary_root_profile(quart).distinct_roots);
    }
}

TEST_CASE("simply-elliptic moduli") {
    SECTION("three Etilde6 points share the modulus of the residual cubic") {
        Polynomial f = parse_polynomial("x1^3 + x2^3 + x3^3 + x1*x2*x3", 6);
        Polynomial d = gen::delta(gen::var(4) * gen::var(5), f);
        auto c1 = classify_isolated(d, kOrigin, 0);
        auto c2 = classify_isolated(d, pt({0, 0, 0, 0, 1, 0}), 4);
        REQUIRE(c1.modulus);
        REQUIRE(c2.modulus);
        REQUIRE(*c1.modulus == *c2.modulus);
    }
    SECTION("the two beta vertices share their Etilde8 modulus") {
        Polynomial x2 = gen::var(2), x3 = gen::var(3);
        Polynomial b = gen::beta(rat(1), rat(1), x2 + 2 * x3, x2 - 2 * x3,
                                 x2 * x2 * x2 + x2 * x3 * x3 + 3 * (x3 * x3 * x3));
        auto c1 = classify_isolated(b, kOrigin, 0);
        auto c2 = classify_isolated(b, pt({0, 0, 0, 0, 0, 1}), 5);
        REQUIRE(c1.str() == "Etilde8");
        REQUIRE(c2.str() == "Etilde8");
        REQUIRE(c1.modulus);
        REQUIRE(*c1.modulus == *c2.modulus);
    }
}
