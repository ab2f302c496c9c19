#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <scrolldiv/scrolldiv.hpp>

using namespace scrolldiv;

namespace {

Monomial vars(const ScrollData& s, std::initializer_list<VarId> list) {
    Monomial m = Monomial::one(s);
    for (const VarId& v : list) m.exp[s.flat(v)] += 1;
    return m;
}

} // namespace

TEST_CASE("psi blocks are catalecticant windows") {
    ScrollData s({2, 1}, 2);
    ScrollMatrix psi = build_psi(s);
    REQUIRE(psi.blocks.size() == 2);
    REQUIRE(psi.blocks[0].size() == 2);
    REQUIRE(psi.blocks[0][0].top == VarId{1, 1});
    REQUIRE(psi.blocks[0][0].bottom == VarId{1, 2});
    REQUIRE(psi.blocks[0][1].top == VarId{1, 2});
    REQUIRE(psi.blocks[0][1].bottom == VarId{1, 3});
    REQUIRE(psi.blocks[1].size() == 1);
    REQUIRE(psi.blocks[1][0].top == VarId{2, 1});
    REQUIRE(psi.blocks[1][0].bottom == VarId{2, 2});

    ScrollMatrix single = build_psi(ScrollData({1}, 2));
    REQUIRE(single.num_columns() == 1);

    ScrollMatrix big = build_psi(ScrollData({3, 2, 1}, 2));
    REQUIRE(big.num_columns() == 6);
    REQUIRE(big.blocks[0].size() == 3);
    REQUIRE(big.blocks[1].size() == 2);
    REQUIRE(big.blocks[2].size() == 1);
}

TEST_CASE("minors of the scroll matrix with the lead convention") {
    ScrollData s({2, 1}, 2);
    Gf k = s.field();
    std::vector<Polynomial> H = minors_H(s);
    REQUIRE(H.size() == 3);
    REQUIRE(H[0] == poly_binomial(k, vars(s, {{1, 2}, {1, 2}}), vars(s, {{1, 1}, {1, 3}})));
    REQUIRE(H[1] == poly_binomial(k, vars(s, {{1, 2}, {2, 1}}), vars(s, {{1, 1}, {2, 2}})));
    REQUIRE(H[2] == poly_binomial(k, vars(s, {{1, 3}, {2, 1}}), vars(s, {{1, 2}, {2, 2}})));

    ScrollData s11({1, 1}, 2);
    std::vector<Polynomial> H11 = minors_H(s11);
    REQUIRE(H11.size() == 1);
    REQUIRE(H11[0] == poly_binomial(s11.field(), vars(s11, {{1, 2}, {2, 1}}),
                                    vars(s11, {{1, 1}, {2, 2}})));

    REQUIRE(minors_H(ScrollData({1}, 2)).empty());
}

TEST_CASE("minor leads are lower-left times upper-right, coefficient one", "[property]") {
    for (const auto& sigma : {std::vector<int>{2, 1}, {2, 2}, {3, 2, 1}}) {
        ScrollData s(sigma, 2);
        ScrollMatrix psi = build_psi(s);
        auto cols = psi.columns();
        std::vector<Polynomial> H = minors_H(s, psi);
        std::size_t idx = 0;
        for (std::size_t a = 0; a < cols.size(); ++a)
            for (std::size_t b = a + 1; b < cols.size(); ++b, ++idx) {
                REQUIRE(H[idx].leading().coeff == 1);
                REQUIRE(H[idx].leading_monomial() == vars(s, {cols[a].bottom, cols[b].top}));
            }
    }
}

TEST_CASE("pi images: single variables, minor cancellation, identity") {
    ScrollData s({2, 1}, 2);
    REQUIRE(pi_image(s, vars(s, {{1, 2}})) == FineDegree{1, 1, {1, 0}});
    REQUIRE(pi_image(s, vars(s, {{1, 2}, {2, 1}})) == pi_image(s, vars(s, {{1, 1}, {2, 2}})));
    REQUIRE(pi_image(s, vars(s, {{1, 2}, {2, 1}})) == FineDegree{2, 1, {1, 1}});
    REQUIRE(pi_image(s, Monomial::one(s)) == FineDegree{0, 0, {0, 0}});
}

TEST_CASE("every minor maps to zero under pi", "[property]") {
    for (const auto& sigma : {std::vector<int>{2, 1}, {3, 1}, {3, 2, 1}, {2, 2}}) {
        ScrollData s(sigma, 2);
        for (const Polynomial& h : minors_H(s)) {
            REQUIRE(h.terms.size() == 2);
            REQUIRE(pi_image(s, h.terms[0].mono) == pi_image(s, h.terms[1].mono));
        }
    }
}

TEST_CASE("pi is injective on A-monomials: equal image iff congruent mod H") {
    ScrollData s({2, 1}, 2);
    Gf k = s.field();
    std::vector<Polynomial> H = minors_H(s);
    std::vector<Monomial> all;
    Monomial m(s.num_vars());
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == s.num_vars() - 1) {
            m.exp[pos] = left;
            all.push_back(m);
            m.exp[pos] = 0;
            return;
        }
        for (int c = 0; c <= left; ++c) {
            m.exp[pos] = c;
            self(self, pos + 1, left - c);
        }
        m.exp[pos] = 0;
    };
    for (int d = 0; d <= 3; ++d) rec(rec, 0, d);
    for (const Monomial& x : all)
        for (const Monomial& y : all) {
            bool same_image = pi_image(s, x) == pi_image(s, y);
            bool congruent = normal_form(k, poly_sub(k, poly_monomial(x), poly_monomial(y)), H)
                                 .is_zero();
            REQUIRE(same_image == congruent);
        }
}

TEST_CASE("A_monomial_basis counts components of A") {
    ScrollData s({2, 1}, 2);
    REQUIRE(A_monomial_basis(s, 0).size() == 1);
    REQUIRE(A_monomial_basis(s, 1).size() == 5);
    REQUIRE(A_monomial_basis(s, 2).size() == 12);
    for (const FineDegree& f : A_monomial_basis(s, 2)) {
        REQUIRE(f.total_degree() == 2);
        REQUIRE(f.alpha >= 0);
        REQUIRE(f.beta >= 0);
        REQUIRE(f.alpha + f.beta == s.sigma_dot(f.e));
    }
    REQUIRE(dim_A(s, 2) == 12);
}

TEST_CASE("dim A_d equals standard monomial count of in(H)") {
    for (const auto& sigma : {std::vector<int>{2, 1}, {2, 2}, {3, 2, 1}}) {
        ScrollData s(sigma, 2);
        GroebnerBasis gb = buchberger(s, minors_H(s));
        std::vector<long long> counts = initial_ideal_counts(s, gb, 5);
        for (int d = 0; d <= 5; ++d) REQUIRE(counts[d] == dim_A(s, d));
    }
}
