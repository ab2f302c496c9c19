#pragma once

#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace scrolldiv {

// The two-row scroll matrix: block u is the 2 x sigma_u catalecticant whose
// column c holds T_{u,c} over T_{u,c+1}.
struct ScrollMatrix {
    struct Column {
        VarId top;
        VarId bottom;
    };
    std::vector<std::vector<Column>> blocks;

    int num_columns() const {
        int c = 0;
        for (const auto& b : blocks) c += static_cast<int>(b.size());
        return c;
    }

    // columns flattened across blocks, in block order
    std::vector<Column> columns() const {
        std::vector<Column> out;
        for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
        return out;
    }
};

inline ScrollMatrix build_psi(const ScrollData& s) {
    ScrollMatrix psi;
    psi.blocks.resize(s.ell());
    for (int u = 1; u <= s.ell(); ++u)
        for (int c = 1; c <= s.sigma(u); ++c)
            psi.blocks[u - 1].push_back({VarId{u, c}, VarId{u, c + 1}});
    return psi;
}

// All 2x2 minors of psi, one per ordered column pair, normalized so the
// revlex leading coefficient is +1.  For columns with top entries T_i < T_j
// in the flat order the minor is T_{i+1} T_j - T_i T_{j+1}, lead first.
inline std::vector<Polynomial> minors_H(const ScrollData& s, const ScrollMatrix& psi) {
    Gf k = s.field();
    std::vector<Polynomial> out;
    auto cols = psi.columns();
    for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            Monomial lead = Monomial::variable(s, cols[a].bottom) * Monomial::variable(s, cols[b].top);
            Monomial tail = Monomial::variable(s, cols[a].top) * Monomial::variable(s, cols[b].bottom);
            out.push_back(poly_binomial(k, lead, tail));
        }
    }
    return out;
}

inline std::vector<Polynomial> minors_H(const ScrollData& s) { return minors_H(s, build_psi(s)); }

// Top-row entries of psi as degree-one monomials: the generators of K.
inline std::vector<Monomial> K_generators(const ScrollData& s) {
    std::vector<Monomial> out;
    for (int u = 1; u <= s.ell(); ++u)
        for (int c = 1; c <= s.sigma(u); ++c)
            out.push_back(Monomial::variable(s, VarId{u, c}));
    return out;
}

// Exponent triple of the image of m under T_{i,j} |-> x^{sigma_i-j+1} y^{j-1} t_i.
inline FineDegree pi_image(const ScrollData& s, const Monomial& m) { return grade(s, m).fdeg; }

// Basis of the given total-degree component of A: all (alpha, beta; e) with
// |e| = d, alpha, beta >= 0 and alpha + beta = sigma.e.  Each fine component
// of A is at most one-dimensional, so these triples are the basis.
inline std::vector<FineDegree> A_monomial_basis(const ScrollData& s, int total_degree) {
    if (total_degree < 0) throw domain_error("A_monomial_basis: negative degree");
    std::vector<FineDegree> out;
    std::vector<int> e(s.ell(), 0);
    // enumerate e with |e| = d in descending lexicographic order
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == s.ell() - 1) {
            e[pos] = left;
            int cap = s.sigma_dot(e);
            for (int alpha = cap; alpha >= 0; --alpha) {
                FineDegree f;
                f.alpha = alpha;
                f.beta = cap - alpha;
                f.e = e;
                out.push_back(std::move(f));
            }
            return;
        }
        for (int c = left; c >= 0; --c) {
            e[pos] = c;
            self(self, pos + 1, left - c);
        }
    };
    rec(rec, 0, total_degree);
    return out;
}

inline long long dim_A(const ScrollData& s, int total_degree) {
    long long count = 0;
    std::vector<int> e(s.ell(), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == s.ell() - 1) {
            e[pos] = left;
            count += s.sigma_dot(e) + 1;
            return;
        }
        for (int c = left; c >= 0; --c) {
            e[pos] = c;
            self(self, pos + 1, left - c);
        }
    };
    if (total_degree < 0) return 0;
    rec(rec, 0, total_degree);
    return count;
}

} // namespace scrolldiv
