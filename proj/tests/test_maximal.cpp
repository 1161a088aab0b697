#include <catch2/catch.hpp>

#include "cubicgit/jsonio.hpp"
#include "cubicgit/maximal.hpp"

using namespace cubicgit;

#ifndef CUBICGIT_DATA_DIR
#define CUBICGIT_DATA_DIR "data"
#endif

static const std::string kData = CUBICGIT_DATA_DIR;

TEST_CASE("dominance order") {
    SECTION("top element") {
        Exponent top{3, 0, 0, 0, 0, 0};
        for (const auto& m : all_exponents(6, 3)) REQUIRE(dominates(top, m));
    }
    SECTION("prefix-sum comparisons") {
        REQUIRE(dominates(Exponent{1, 0, 2, 0, 0, 0}, Exponent{0, 1, 1, 1, 0, 0}));
        REQUIRE(!dominates(Exponent{1, 0, 0, 0, 2, 0}, Exponent{0, 2, 0, 0, 0, 1}));
        REQUIRE(!dominates(Exponent{0, 2, 0, 0, 0, 1}, Exponent{1, 0, 0, 0, 2, 0}));
    }
    SECTION("degree mismatch is an error") {
        REQUIRE_THROWS_AS(dominates(Exponent{1, 0, 0, 0, 0, 0}, Exponent{2, 0, 0, 0, 0, 0}),
                          std::invalid_argument);
    }
    SECTION("agrees with the universal weight test on comparable pairs") {
        Rng rng(13);
        auto mons = all_exponents(6, 3);
        for (int trial = 0; trial < 500; ++trial) {
            const Exponent& m1 = mons[rng.uniform(0, static_cast<long>(mons.size()) - 1)];
            const Exponent& m2 = mons[rng.uniform(0, static_cast<long>(mons.size()) - 1)];
            if (!dominates(m1, m2)) continue;
            std::vector<long long> a(6, 0);
            long long s = 0;
            for (int k = 0; k < 5; ++k) {
                a[k] = rng.uniform(-30, 30);
                s += a[k];
            }
            a[5] = -s;
            std::sort(a.begin(), a.end(), std::greater<long long>());
            OnePS lam(a);
            REQUIRE(weight(m1, lam) >= weight(m2, lam));
        }
    }
}

TEST_CASE("maximal class enumeration") {
    SECTION("eight nonstrict classes with matching golden rows") {
        auto recs = enumerate_maximal(6, 3, false);
        REQUIRE(recs.size() == 8);
        auto golden = load_golden_rows(kData + "/table1.json", 6, 3);
        auto labeled = match_labels(recs, golden, 3);
        std::set<std::string> labels;
        for (const auto& r : labeled) labels.insert(r.label);
        REQUIRE(labels == std::set<std::string>{"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"});
    }
    SECTION("ten strict classes with matching golden rows") {
        auto recs = enumerate_maximal(6, 3, true);
        REQUIRE(recs.size() == 10);
        auto golden = load_golden_rows(kData + "/table2.json", 6, 3);
        auto labeled = match_labels(recs, golden, 3);
        REQUIRE(labeled.size() == 10);
    }
    SECTION("members are inclusion-maximal: adding any excluded monomial breaks feasibility") {
        auto recs = enumerate_maximal(6, 3, false);
        auto mons = all_exponents(6, 3);
        for (const auto& r : recs) {
            for (const auto& m : mons) {
                if (r.members.contains(m)) continue;
                std::vector<Exponent> ext = r.generators.members;
                ext.push_back(m);
                REQUIRE(!is_subset_of_some_Mle0(MonomialSet(6, 3, ext), false));
            }
        }
    }
    SECTION("generator antichains reconstruct the members") {
        for (bool strict : {false, true}) {
            auto recs = enumerate_maximal(6, 3, strict);
            for (const auto& r : recs) {
                for (std::size_t i = 0; i < r.generators.members.size(); ++i)
                    for (std::size_t j = 0; j < r.generators.members.size(); ++j)
                        if (i != j)
                            REQUIRE(!dominates(r.generators.members[i], r.generators.members[j]));
                for (const auto& m : r.members.members) {
                    bool below = false;
                    for (const auto& g : r.generators.members)
                        if (dominates(g, m)) below = true;
                    REQUIRE(below);
                }
            }
        }
    }
    SECTION("negative control: a row removed from the golden data is reported") {
        auto recs = enumerate_maximal(6, 3, false);
        auto golden = load_golden_rows(kData + "/table1.json", 6, 3);
        golden.pop_back();
        REQUIRE_THROWS_WITH(match_labels(recs, golden, 3), Catch::Contains("extra computed record"));
    }
    SECTION("negative control: a foreign golden row is reported missing") {
        auto recs = enumerate_maximal(6, 3, false);
        auto golden = load_golden_rows(kData + "/table1.json", 6, 3);
        GoldenRow fake;
        fake.label = "S9";
        fake.lambda = OnePS({3, 1, 1, -1, -2, -2});
        fake.generators = MonomialSet(6, 3, {Exponent{0, 3, 0, 0, 0, 0}});
        golden.push_back(fake);
        REQUIRE_THROWS_WITH(match_labels(recs, golden, 3), Catch::Contains("missing row"));
    }
    SECTION("negative control: corrupted golden weights are reported as a named failure") {
        auto golden1 = load_golden_rows(kData + "/table1.json", 6, 3);
        auto golden2 = load_golden_rows(kData + "/table2.json", 6, 3);
        golden1[2].lambda = OnePS({3, 1, 0, 0, -1, -3});  // wrong class for S3
        auto checks = verify_tables(golden1, golden2);
        bool named_failure = false;
        for (const auto& c : checks)
            if (!c.pass && c.name.find("S-series") != std::string::npos) named_failure = true;
        REQUIRE(named_failure);
    }
    SECTION("degree-one smoke case") {
        auto recs = enumerate_maximal(6, 1, false);
        REQUIRE(recs.size() == 1);
        REQUIRE(recs[0].members.size() == 5);  // every variable except the leading one
        REQUIRE(recs[0].generators.members.size() == 1);
        REQUIRE(recs[0].generators.members[0] == Exponent{0, 1, 0, 0, 0, 0});
        REQUIRE(oracle_agrees(recs, sampling_oracle(6, 1, 5, false)));
    }
}

TEST_CASE("sampling oracle agreement at desk scale") {
    SECTION("five variables, small bound") {
        auto recs = enumerate_maximal(5, 3, false);
        auto oracle = sampling_oracle(5, 3, 61, false);
        REQUIRE(oracle_agrees(recs, oracle));
        auto recs_s = enumerate_maximal(5, 3, true);
        auto oracle_s = sampling_oracle(5, 3, 61, true);
        REQUIRE(oracle_agrees(recs_s, oracle_s));
        // canonical witnesses stay inside the sampled box
        for (const auto* rs : {&recs, &recs_s})
            for (const auto& r : *rs)
                for (auto v : r.witness.a) REQUIRE(std::abs(v) <= 61);
    }
    SECTION("six variables at a reduced bound reproduces the nonstrict classes") {
        auto recs = enumerate_maximal(6, 3, false);
        auto oracle = sampling_oracle(6, 3, 21, false);
        REQUIRE(oracle_agrees(recs, oracle));
    }
}
