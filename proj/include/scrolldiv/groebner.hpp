#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symbolic_power.hpp"

namespace scrolldiv {

struct GroebnerOptions {
    // hard cap on the number of S-pair reductions; desk configurations stay
    // far below it
    std::size_t max_pair_reductions = 100000;
};

struct GroebnerBasis {
    std::vector<Polynomial> generators;
    bool certified = false;
};

namespace detail {

struct SPair {
    std::size_t i, j;
    int lcm_degree;
};

inline void push_pairs(const std::vector<Polynomial>& basis, std::size_t fresh,
                       std::vector<SPair>& pairs) {
    for (std::size_t i = 0; i < fresh; ++i) {
        const Monomial& a = basis[i].leading_monomial();
        const Monomial& b = basis[fresh].leading_monomial();
        if (coprime(a, b)) continue;  // Buchberger's first criterion
        pairs.push_back({i, fresh, lcm(a, b).total_degree()});
    }
}

} // namespace detail

// Buchberger completion with normal pair selection (minimal lcm degree
// first).  The result is auto-reduced and certified.
inline GroebnerBasis buchberger(const ScrollData& s, std::vector<Polynomial> gens,
                                const GroebnerOptions& opt = {}) {
    Gf k = s.field();
    std::vector<Polynomial> basis;
    for (Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(poly_monic(k, std::move(g)));
    if (basis.empty()) throw domain_error("buchberger: no nonzero generators");

    std::vector<detail::SPair> pairs;
    for (std::size_t t = 1; t < basis.size(); ++t) detail::push_pairs(basis, t, pairs);

    std::size_t reductions = 0;
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [](const detail::SPair& x, const detail::SPair& y) {
                                       if (x.lcm_degree != y.lcm_degree) return x.lcm_degree < y.lcm_degree;
                                       if (x.j != y.j) return x.j < y.j;
                                       return x.i < y.i;
                                   });
        detail::SPair p = *it;
        pairs.erase(it);
        if (++reductions > opt.max_pair_reductions)
            throw capacity_error("buchberger: pair reduction budget exceeded");
        Polynomial r = normal_form(k, s_polynomial(k, basis[p.i], basis[p.j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(poly_monic(k, std::move(r)));
        detail::push_pairs(basis, basis.size() - 1, pairs);
    }

    // auto-reduce: drop generators whose lead is divisible by another lead,
    // then fully reduce every tail
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!basis[j].leading_monomial().divides(basis[i].leading_monomial())) continue;
            // on equal leads keep the earlier one
            if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = poly_monic(k, normal_form(k, reduced[i], others));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return revlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return {std::move(reduced), true};
}

struct VerifyResult {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    Polynomial failing_remainder;
};

// Buchberger criterion: every S-polynomial of a pair of candidates reduces
// to zero against the candidate list.
inline VerifyResult verify_gb(const ScrollData& s, const std::vector<Polynomial>& candidate) {
    if (candidate.empty()) throw domain_error("verify_gb: empty candidate");
    Gf k = s.field();
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        for (std::size_t j = i + 1; j < candidate.size(); ++j) {
            if (coprime(candidate[i].leading_monomial(), candidate[j].leading_monomial()))
                continue;
            Polynomial r = normal_form(k, s_polynomial(k, candidate[i], candidate[j]), candidate);
            if (!r.is_zero()) return {false, std::make_pair(i, j), std::move(r)};
        }
    }
    return {};
}

// Number of standard monomials (monomials divisible by no lead) per total
// degree d <= through_degree; equals dim (S/I)_d.
inline std::vector<long long> initial_ideal_counts(const ScrollData& s, const GroebnerBasis& gb,
                                                   int through_degree) {
    if (!gb.certified) throw domain_error("initial_ideal_counts: basis not certified");
    std::vector<Monomial> leads;
    leads.reserve(gb.generators.size());
    for (const Polynomial& g : gb.generators) leads.push_back(g.leading_monomial());
    std::vector<long long> counts(std::max(0, through_degree) + 1, 0);
    Monomial m(s.num_vars());
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == s.num_vars() - 1) {
            m.exp[pos] = left;
            bool standard = std::none_of(leads.begin(), leads.end(),
                                         [&](const Monomial& l) { return l.divides(m); });
            if (standard) counts[m.total_degree()] += 1;
            m.exp[pos] = 0;
            return;
        }
        for (int c = 0; c <= left; ++c) {
            m.exp[pos] = c;
            self(self, pos + 1, left - c);
        }
        m.exp[pos] = 0;
    };
    for (int d = 0; d <= through_degree; ++d) rec(rec, 0, d);
    return counts;
}

// The preimage ideal kappa of K^(n) in S is generated by the minors together
// with the list L; by the Groebner property of that union the certificate
// below witnesses depth A/K^(n) = 1.
struct DepthCertificate {
    VarId regular_var;        // T_{ell, sigma_ell + 1}
    bool regular_ok = false;  // divides no lead of the Groebner basis of kappa
    VarId socle_witness;      // T_{ell, sigma_ell}
    bool witness_nonzero = false;  // witness not in kappa + (regular_var)
    bool socle_ok = false;    // every variable multiplies the witness into kappa + (regular_var)
    bool passed() const { return regular_ok && witness_nonzero && socle_ok; }
};

inline DepthCertificate depth_certificate(const ScrollData& s, const GroebnerOptions& opt = {}) {
    Gf k = s.field();
    std::vector<Polynomial> kappa;
    for (const Polynomial& h : minors_H(s)) kappa.push_back(h);
    for (const Monomial& m : generating_set_L(s)) kappa.push_back(poly_monomial(m));
    VerifyResult cert = verify_gb(s, kappa);
    if (!cert.ok) throw invariant_error("depth_certificate: G union L failed certification");

    DepthCertificate out;
    out.regular_var = VarId{s.ell(), s.sigma_last() + 1};
    out.socle_witness = VarId{s.ell(), s.sigma_last()};
    int t_flat = s.flat(out.regular_var);
    out.regular_ok = std::all_of(kappa.begin(), kappa.end(), [&](const Polynomial& g) {
        return g.leading_monomial().exp[t_flat] == 0;
    });

    std::vector<Polynomial> enlarged = kappa;
    enlarged.push_back(poly_monomial(Monomial::variable(s, out.regular_var)));
    GroebnerBasis gb = buchberger(s, enlarged, opt);

    Monomial w = Monomial::variable(s, out.socle_witness);
    out.witness_nonzero = !normal_form(k, poly_monomial(w), gb.generators).is_zero();
    out.socle_ok = true;
    for (int v = 0; v < s.num_vars(); ++v) {
        Monomial vw = w * Monomial::variable(s, s.var(v));
        if (!normal_form(k, poly_monomial(vw), gb.generators).is_zero()) {
            out.socle_ok = false;
            break;
        }
    }
    if (!out.passed()) throw invariant_error("depth_certificate: a sub-check failed");
    return out;
}

} // namespace scrolldiv
