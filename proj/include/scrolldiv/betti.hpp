#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resolution.hpp"

namespace scrolldiv {

namespace detail {

inline int thread_budget() {
    if (const char* env = std::getenv("SCROLLDIV_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class F>
void parallel_for(std::size_t count, F&& body) {
    int threads = std::min<std::size_t>(thread_budget(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

// Rank over GF(p) of a sparse matrix given as rows of (column, value) pairs.
// Pivots chosen by Markowitz cost (fillin estimate), eliminating on the fly.
inline int sparse_rank(const Gf& k, std::vector<std::map<int, std::uint32_t>> rows) {
    int rank = 0;
    std::vector<bool> done(rows.size(), false);
    for (;;) {
        std::map<int, int> col_nnz;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!done[r])
                for (const auto& [c, v] : rows[r]) col_nnz[c] += 1;
        long long best = -1;
        std::size_t pr = 0;
        int pc = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            for (const auto& [c, v] : rows[r]) {
                long long cost = static_cast<long long>(rows[r].size() - 1) * (col_nnz[c] - 1);
                if (best < 0 || cost < best) {
                    best = cost;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pc < 0) return rank;
        ++rank;
        done[pr] = true;
        std::uint32_t pivot_inv = k.inv(rows[pr].at(pc));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (done[r]) continue;
            auto it = rows[r].find(pc);
            if (it == rows[r].end()) continue;
            std::uint32_t factor = k.mul(it->second, pivot_inv);
            for (const auto& [c, v] : rows[pr]) {
                auto jt = rows[r].find(c);
                std::uint32_t nv = k.sub(jt == rows[r].end() ? 0 : jt->second, k.mul(factor, v));
                if (nv == 0) {
                    if (jt != rows[r].end()) rows[r].erase(jt);
                } else if (jt == rows[r].end()) {
                    rows[r].emplace(c, nv);
                } else {
                    jt->second = nv;
                }
            }
        }
    }
}

} // namespace detail

// Minimal Betti numbers of K^(n) as an S-module.
struct BettiTable {
    int degree_bound = 0;
    bool complete = false;
    std::map<std::pair<int, int>, long long> by_degree;        // (i, total degree) -> beta
    std::map<std::pair<int, FineDegree>, long long> fine;      // fine refinement

    long long beta(int i, int d) const {
        auto it = by_degree.find({i, d});
        return it == by_degree.end() ? 0 : it->second;
    }

    int max_homological_index() const {
        int pd = 0;
        for (const auto& [key, v] : by_degree)
            if (v != 0) pd = std::max(pd, key.first);
        return pd;
    }

    int max_regularity() const {
        int reg = 0;
        for (const auto& [key, v] : by_degree)
            if (v != 0) reg = std::max(reg, key.second - key.first);
        return reg;
    }
};

inline int regularity_formula(const ScrollData& s) {
    return static_cast<int>((s.n() - 2) / s.sigma_last()) + 2;  // ceil((n-1)/sigma_ell) + 1
}

inline int projective_dimension_formula(const ScrollData& s) {
    return s.sigma_sum() + s.ell() - 2;
}

inline int default_betti_bound(const ScrollData& s) {
    return regularity_formula(s) + projective_dimension_formula(s) + 1;
}

// beta_{i,d} = dim H_i(Koszul(all variables) (x) K^(n))_d, computed strand by
// strand over the fine grading.  Each fine component of K^(n) is 0- or
// 1-dimensional, so the Koszul differentials restrict to signed incidence
// matrices whose ranks are taken over GF(p).  The table is flagged complete
// when the top two total-degree rows are empty.
inline BettiTable koszul_betti(const ScrollData& s, int degree_bound = -1) {
    if (degree_bound < 0) degree_bound = default_betti_bound(s);
    const int nv = s.num_vars();
    if (nv > 25) throw capacity_error("koszul_betti: too many variables for mask enumeration");
    Gf field = s.field();

    // fine degrees of all wedge masks
    const std::uint32_t num_masks = 1u << nv;
    std::vector<FineDegree> mask_fdeg(num_masks);
    mask_fdeg[0] = detail::zero_fdeg(s.ell());
    std::vector<FineDegree> var_fdeg(nv);
    for (int v = 0; v < nv; ++v) var_fdeg[v] = s.fdeg_of_var(v);
    for (std::uint32_t m = 1; m < num_masks; ++m) {
        int low = std::countr_zero(m);
        mask_fdeg[m] = mask_fdeg[m & (m - 1)] + var_fdeg[low];
    }

    // support of the module through the degree bound
    auto in_module = [&](const FineDegree& f) {
        return f.alpha >= s.n() && f.beta >= 0 && f.alpha + f.beta == s.sigma_dot(f.e);
    };
    std::vector<FineDegree> supp;
    for (int d = 1; d <= degree_bound; ++d)
        for (const FineDegree& f : A_monomial_basis(s, d))
            if (f.alpha >= s.n()) supp.push_back(f);

    // strands: per fine degree x, the wedges w (grouped by |w|) with a
    // module element at x - fdeg(w); keys packed into 64-bit integers
    if (s.ell() > 7) throw capacity_error("koszul_betti: too many blocks for key packing");
    auto pack = [&](const FineDegree& f) {
        std::uint64_t key = static_cast<std::uint32_t>(f.alpha) |
                            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.beta)) << 10);
        for (int u = 0; u < s.ell(); ++u)
            key |= static_cast<std::uint64_t>(f.e[u]) << (20 + 6 * u);
        return key;
    };
    struct Strand {
        FineDegree x;
        std::vector<std::vector<std::uint32_t>> by_q;
    };
    std::unordered_map<std::uint64_t, Strand> strands;
    for (const FineDegree& m : supp) {
        int room = degree_bound - m.total_degree();
        for (std::uint32_t w = 0; w < num_masks; ++w) {
            int q = std::popcount(w);
            if (q > room) continue;
            FineDegree x = m + mask_fdeg[w];
            Strand& st = strands[pack(x)];
            if (st.by_q.empty()) st.x = x;
            if (static_cast<int>(st.by_q.size()) <= q) st.by_q.resize(q + 1);
            st.by_q[q].push_back(w);
        }
    }

    std::vector<const Strand*> work;
    work.reserve(strands.size());
    for (auto& [key, st] : strands) work.push_back(&st);

    // homology dimensions per strand; betas[i] collects (q, beta_q) for strand i
    std::vector<std::vector<std::pair<int, long long>>> betas(work.size());
    detail::parallel_for(work.size(), [&](std::size_t wi) {
        const Strand& st = *work[wi];
        int max_q = static_cast<int>(st.by_q.size()) - 1;
        // rank of d_q : C_q -> C_{q-1} for each q
        std::vector<int> rank(max_q + 2, 0);
        for (int q = 1; q <= max_q; ++q) {
            const auto& cols = st.by_q[q];
            const auto& rows_masks = st.by_q[q - 1];
            if (cols.empty() || rows_masks.empty()) continue;
            std::unordered_map<std::uint32_t, int> row_index;
            row_index.reserve(rows_masks.size());
            for (std::size_t r = 0; r < rows_masks.size(); ++r) row_index[rows_masks[r]] = static_cast<int>(r);
            // transpose orientation: build rows over column index
            std::vector<std::map<int, std::uint32_t>> rows(rows_masks.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::uint32_t w = cols[c];
                int sign_pos = 0;
                for (std::uint32_t rest = w; rest; rest &= rest - 1, ++sign_pos) {
                    std::uint32_t v = rest & (~rest + 1);
                    auto it = row_index.find(w ^ v);
                    if (it != row_index.end()) {
                        std::uint32_t val = (sign_pos % 2 == 0) ? 1 : field.p() - 1;
                        rows[it->second].emplace(static_cast<int>(c), val);
                    }
                }
            }
            rank[q] = detail::sparse_rank(field, std::move(rows));
        }
        for (int q = 0; q <= max_q; ++q) {
            long long dim_q = static_cast<long long>(st.by_q[q].size());
            long long beta = dim_q - rank[q] - rank[q + 1];
            if (beta != 0) betas[wi].push_back({q, beta});
        }
    });

    BettiTable table;
    table.degree_bound = degree_bound;
    for (std::size_t wi = 0; wi < work.size(); ++wi) {
        const FineDegree& x = work[wi]->x;
        for (const auto& [q, beta] : betas[wi]) {
            table.fine[{q, x}] += beta;
            table.by_degree[{q, x.total_degree()}] += beta;
        }
    }
    bool top_rows_clear = true;
    for (const auto& [key, v] : table.by_degree)
        if (v != 0 && key.second >= degree_bound - 1) top_rows_clear = false;
    table.complete = top_rows_clear;
    return table;
}

struct BettiInvariants {
    int pd = 0;
    int depth = 0;
    int reg = 0;
    int pd_expected = 0;
    int depth_expected = 2;
    int reg_expected = 0;
    bool agrees() const { return pd == pd_expected && depth == depth_expected && reg == reg_expected; }
};

// pd = top nonzero row, depth via Auslander-Buchsbaum, reg = max(d - i);
// expected values are the closed formulas these must reproduce.
inline BettiInvariants invariants_from_betti(const BettiTable& t, const ScrollData& s) {
    if (!t.complete)
        throw domain_error("invariants_from_betti: table not certified complete; raise the degree bound");
    BettiInvariants inv;
    inv.pd = t.max_homological_index();
    inv.depth = s.num_vars() - inv.pd;
    inv.reg = t.max_regularity();
    inv.pd_expected = projective_dimension_formula(s);
    inv.reg_expected = regularity_formula(s);
    return inv;
}

} // namespace scrolldiv
