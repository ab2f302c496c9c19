#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <scrolldiv/scrolldiv.hpp>

using namespace scrolldiv;

TEST_CASE("the Rees generating set has the closed-form cardinality") {
    ScrollData s({2, 1}, 2);
    std::vector<ReesGenerator> gens = rees_generating_set(s);
    REQUIRE(gens.size() == 4);
    std::set<std::pair<std::pair<int, int>, int>> got;
    for (const ReesGenerator& g : gens) got.insert({{g.var.block, g.var.slot}, g.power});
    std::set<std::pair<std::pair<int, int>, int>> want = {
        {{1, 1}, 1}, {{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 1}};
    REQUIRE(got == want);

    REQUIRE(rees_generating_set(ScrollData({1}, 2)).size() == 1);
    REQUIRE(rees_generating_set(ScrollData({3, 2, 1}, 2)).size() == 10);

    for (const auto& sigma : {std::vector<int>{2, 2}, {3, 1}, {3, 2}}) {
        ScrollData t(sigma, 2);
        long long expected = 0;
        for (int x : sigma) expected += static_cast<long long>(x) * (x + 1) / 2;
        REQUIRE(static_cast<long long>(rees_generating_set(t).size()) == expected);
    }
}

TEST_CASE("generators of S lie in the matching symbolic power") {
    for (const auto& sigma : {std::vector<int>{2, 1}, {3, 2, 1}}) {
        ScrollData s(sigma, 2);
        for (const ReesGenerator& g : rees_generating_set(s)) {
            // Deg T_{i,j} = sigma_i + 1 - j >= k
            REQUIRE(s.sigma(g.var.block) + 1 - g.var.slot >= g.power);
        }
    }
}

TEST_CASE("factorization of the worked generators") {
    ScrollData s3({2, 1}, 3);
    // g = T21^3 factors as (T21 u)^2 (T21 u)
    for (const LGenerator& g : l_generators(s3)) {
        if (!(g.tuple.a == std::vector<int>{0})) continue;
        ReesFactorization f = factor_over_S(s3, g);
        REQUIRE(f.u_sum() == 3);
        REQUIRE(f.product(s3) == g.mono);
        REQUIRE(f.factors.size() == 2);
        REQUIRE(f.factors[0].gen == ReesGenerator{VarId{2, 1}, 1});
        REQUIRE(f.factors[0].multiplicity == 2);
        REQUIRE(f.factors[1].gen == ReesGenerator{VarId{2, 1}, 1});
    }

    ScrollData s2({2, 1}, 2);
    for (const LGenerator& g : l_generators(s2)) {
        if (!g.tuple.a.empty()) continue;
        // g = T11 with f=0, r=1: single factor T11 u^2
        ReesFactorization f = factor_over_S(s2, g);
        REQUIRE(f.factors.size() == 1);
        REQUIRE(f.factors[0].gen == ReesGenerator{VarId{1, 1}, 2});
        REQUIRE(f.u_sum() == 2);
    }

    for (const LGenerator& g : l_generators(s3)) {
        if (!(g.tuple.a == std::vector<int>{1})) continue;
        // g = T11*T21: (T11 u^2)(T21 u)
        ReesFactorization f = factor_over_S(s3, g);
        REQUIRE(f.factors.size() == 2);
        REQUIRE(f.factors[0].gen == ReesGenerator{VarId{1, 1}, 2});
        REQUIRE(f.factors[1].gen == ReesGenerator{VarId{2, 1}, 1});
        REQUIRE(f.u_sum() == 3);
    }
}

TEST_CASE("every L generator factors over S with u-sum n", "[property]") {
    for (const auto& sigma : {std::vector<int>{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 2, 1}}) {
        for (int n = 2; n <= 6; ++n) {
            ScrollData s(sigma, n);
            std::set<std::pair<std::pair<int, int>, int>> pool;
            for (const ReesGenerator& g : rees_generating_set(s))
                pool.insert({{g.var.block, g.var.slot}, g.power});
            for (const LGenerator& g : l_generators(s)) {
                ReesFactorization f = factor_over_S(s, g);
                REQUIRE(f.u_sum() == n);
                REQUIRE(f.product(s) == g.mono);
                for (const ReesFactor& factor : f.factors) {
                    REQUIRE(pool.count({{factor.gen.var.block, factor.gen.var.slot},
                                        factor.gen.power}) == 1);
                    REQUIRE(factor.multiplicity >= 1);
                }
            }
        }
    }
}

TEST_CASE("factor_over_S rejects monomials off the L shape") {
    ScrollData s({2, 1}, 2);
    LGenerator bogus;
    bogus.mono = Monomial::variable(s, VarId{1, 2});
    bogus.tuple = enumerate_eligible(s)[0];
    bogus.u = 1;
    REQUIRE_THROWS_AS(factor_over_S(s, bogus), domain_error);

    LGenerator bad_u = l_generators(s)[0];
    bad_u.u = bad_u.tuple.r + 1;
    REQUIRE_THROWS_AS(factor_over_S(s, bad_u), domain_error);
}
