#pragma once

#include <utility>
#include <vector>

#include "symbolic_power.hpp"

namespace scrolldiv {

// An algebra generator T_{i,j} u^k of the symbolic Rees algebra, with
// j <= sigma_i and 1 <= k <= sigma_i + 1 - j.
struct ReesGenerator {
    VarId var;
    int power = 1;

    friend bool operator==(const ReesGenerator&, const ReesGenerator&) = default;
};

inline std::string to_string(const ReesGenerator& g) {
    std::string s = to_string(g.var) + "*u";
    if (g.power > 1) s += "^" + std::to_string(g.power);
    return s;
}

// The full set S of algebra generators; its size is sum_i sigma_i (sigma_i + 1) / 2.
inline std::vector<ReesGenerator> rees_generating_set(const ScrollData& s) {
    std::vector<ReesGenerator> out;
    for (int i = 1; i <= s.ell(); ++i)
        for (int j = 1; j <= s.sigma(i); ++j)
            for (int k = 1; k <= s.sigma(i) + 1 - j; ++k)
                out.push_back({VarId{i, j}, k});
    return out;
}

struct ReesFactor {
    ReesGenerator gen;
    int multiplicity = 1;
};

struct ReesFactorization {
    std::vector<ReesFactor> factors;

    int u_sum() const {
        int total = 0;
        for (const ReesFactor& f : factors) total += f.gen.power * f.multiplicity;
        return total;
    }

    Monomial product(const ScrollData& s) const {
        Monomial m = Monomial::one(s);
        for (const ReesFactor& f : factors) m.exp[s.flat(f.gen.var)] += f.multiplicity;
        return m;
    }
};

// Closed-form factorization of the generator g = T^a T_{k+1,1}^{f(a)} T_{k+1,u}
// over S:
//   g u^n = prod_i (T_{i,1} u^{sigma_i})^{a_i} (T_{k+1,1} u^{sigma_{k+1}})^{f(a)}
//           T_{k+1,u} u^{sigma_{k+1}+1-r(a)};
// the u-exponents add up to exactly n.
inline ReesFactorization factor_over_S(const ScrollData& s, const LGenerator& g) {
    const EligibleTuple& t = g.tuple;
    int k = t.k();
    if (g.u < 1 || g.u > t.r) throw domain_error("factor_over_S: slot index outside 1..r(a)");
    // validate that the monomial really is T^a T_{k+1,1}^{f} T_{k+1,u}
    Monomial expected = tuple_monomial(s, t);
    expected.exp[s.flat(k + 1, 1)] += t.f;
    expected.exp[s.flat(k + 1, g.u)] += 1;
    if (!(expected == g.mono)) throw domain_error("factor_over_S: monomial is not of L-shape");

    ReesFactorization out;
    for (int i = 1; i <= k; ++i)
        if (t.a[i - 1] > 0) out.factors.push_back({{VarId{i, 1}, s.sigma(i)}, t.a[i - 1]});
    if (t.f > 0) out.factors.push_back({{VarId{k + 1, 1}, s.sigma(k + 1)}, t.f});
    out.factors.push_back({{VarId{k + 1, g.u}, s.sigma(k + 1) + 1 - t.r}, 1});
    return out;
}

} // namespace scrolldiv
