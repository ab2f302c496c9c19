#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "symbolic_power.hpp"

namespace scrolldiv {

// ---- fine Hilbert function of S ----

// dim_k of the fine component of S at (alpha, beta; e): the number of
// monomials with e_u factors from block u and x-weight alpha in total.
class SFineHilbert {
public:
    explicit SFineHilbert(const ScrollData& s) : s_(&s) {}

    long long dim(const FineDegree& f) const {
        if (static_cast<int>(f.e.size()) != s_->ell()) return 0;
        if (f.alpha < 0 || f.beta < 0) return 0;
        for (int c : f.e)
            if (c < 0) return 0;
        if (f.alpha + f.beta != s_->sigma_dot(f.e)) return 0;
        const std::vector<long long>& by_alpha = profile(f.e);
        if (f.alpha >= static_cast<int>(by_alpha.size())) return 0;
        return by_alpha[f.alpha];
    }

private:
    // number of size-`count` multisets of weights {0..max_weight} with sum `total`
    long long multisets(int max_weight, int count, int total) const {
        if (total < 0 || total > max_weight * count) return 0;
        if (count == 0) return total == 0 ? 1 : 0;
        if (max_weight == 0) return total == 0 ? 1 : 0;
        auto key = std::make_tuple(max_weight, count, total);
        auto it = multiset_cache_.find(key);
        if (it != multiset_cache_.end()) return it->second;
        long long n = 0;
        for (int t = 0; t <= count && t * max_weight <= total; ++t)
            n += multisets(max_weight - 1, count - t, total - t * max_weight);
        multiset_cache_.emplace(key, n);
        return n;
    }

    const std::vector<long long>& profile(const std::vector<int>& e) const {
        auto it = profile_cache_.find(e);
        if (it != profile_cache_.end()) return it->second;
        std::vector<long long> conv{1};
        for (int u = 1; u <= s_->ell(); ++u) {
            int cap = s_->sigma(u) * e[u - 1];
            std::vector<long long> next(conv.size() + cap, 0);
            for (std::size_t a = 0; a < conv.size(); ++a) {
                if (conv[a] == 0) continue;
                for (int b = 0; b <= cap; ++b)
                    next[a + b] += conv[a] * multisets(s_->sigma(u), e[u - 1], b);
            }
            conv = std::move(next);
        }
        return profile_cache_.emplace(e, std::move(conv)).first->second;
    }

    const ScrollData* s_;
    mutable std::map<std::tuple<int, int, int>, long long> multiset_cache_;
    mutable std::map<std::vector<int>, std::vector<long long>> profile_cache_;
};

// ---- graded free modules and complexes (rank/shift data only) ----

struct GradedFreeModule {
    // generator fine degrees; S(-g) contributes the entry g
    std::vector<FineDegree> shifts;
    long long rank() const { return static_cast<long long>(shifts.size()); }
};

inline bool shift_order(const FineDegree& a, const FineDegree& b) {
    return std::make_tuple(a.total_degree(), a.alpha, a.e, a.beta) <
           std::make_tuple(b.total_degree(), b.alpha, b.e, b.beta);
}

struct ComplexRanks {
    std::vector<GradedFreeModule> modules;

    int length() const { return static_cast<int>(modules.size()) - 1; }

    std::vector<long long> ranks() const {
        std::vector<long long> r;
        r.reserve(modules.size());
        for (const auto& m : modules) r.push_back(m.rank());
        return r;
    }

    void sort_shifts() {
        for (auto& m : modules) std::sort(m.shifts.begin(), m.shifts.end(), shift_order);
    }

    // alternating rank sum of the fine component at x, i.e. the fine Hilbert
    // function of the resolved module when the complex is a resolution
    long long euler_at(const SFineHilbert& hs, const FineDegree& x) const {
        long long v = 0;
        int sign = 1;
        for (const auto& m : modules) {
            for (const FineDegree& g : m.shifts) v += sign * hs.dim(x - g);
            sign = -sign;
        }
        return v;
    }
};

namespace detail {

inline std::vector<FineDegree> wedge_shifts(const std::vector<FineDegree>& gens, int p, int ell) {
    std::vector<FineDegree> out;
    if (p < 0 || p > static_cast<int>(gens.size())) return out;
    FineDegree acc;
    acc.e.assign(ell, 0);
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = from; i + left <= gens.size() + 0u; ++i) {
            acc += gens[i];
            self(self, i + 1, left - 1);
            acc -= gens[i];
        }
    };
    rec(rec, 0, p);
    return out;
}

inline FineDegree zero_fdeg(int ell) {
    FineDegree f;
    f.e.assign(ell, 0);
    return f;
}

// generators of Sym_d E: (-a, a; 0) for 0 <= a <= d, where E = S(1,-1;0) + S(0,0;0)
inline std::vector<FineDegree> sym_E_shifts(int d, int ell) {
    std::vector<FineDegree> out;
    for (int a = 0; a <= d; ++a) {
        FineDegree f = zero_fdeg(ell);
        f.alpha = -a;
        f.beta = a;
        out.push_back(std::move(f));
    }
    return out;
}

// generators of the divided power D_d E^*: (a, -a; 0) for 0 <= a <= d
inline std::vector<FineDegree> div_Estar_shifts(int d, int ell) {
    std::vector<FineDegree> out;
    for (int a = 0; a <= d; ++a) {
        FineDegree f = zero_fdeg(ell);
        f.alpha = a;
        f.beta = -a;
        out.push_back(std::move(f));
    }
    return out;
}

// generators of F_{>k}: (sigma_u - c, c; e_u) for k+1 <= u <= ell, 1 <= c <= sigma_u
inline std::vector<FineDegree> F_gt_shifts(const ScrollData& s, int k) {
    std::vector<FineDegree> out;
    for (int u = k + 1; u <= s.ell(); ++u)
        for (int c = 1; c <= s.sigma(u); ++c) {
            FineDegree f = zero_fdeg(s.ell());
            f.alpha = s.sigma(u) - c;
            f.beta = c;
            f.e[u - 1] = 1;
            out.push_back(std::move(f));
        }
    return out;
}

// generators of G_{<=k}: the fdeg of T_{u,j} for u <= k, 1 <= j <= sigma_u + 1
inline std::vector<FineDegree> G_le_shifts(const ScrollData& s, int k) {
    std::vector<FineDegree> out;
    for (int u = 1; u <= k; ++u)
        for (int j = 1; j <= s.sigma(u) + 1; ++j) {
            FineDegree f = zero_fdeg(s.ell());
            f.alpha = s.sigma(u) + 1 - j;
            f.beta = j - 1;
            f.e[u - 1] = 1;
            out.push_back(std::move(f));
        }
    return out;
}

inline GradedFreeModule product_module(const std::vector<FineDegree>& a,
                                       const std::vector<FineDegree>& b) {
    GradedFreeModule m;
    m.shifts.reserve(a.size() * b.size());
    for (const FineDegree& x : a)
        for (const FineDegree& y : b) m.shifts.push_back(x + y);
    return m;
}

} // namespace detail

// Koszul complex on the variables of the first k blocks, resolving S/P_k.
// Position q has rank C(sum_{u<=k}(sigma_u + 1), q).
inline ComplexRanks koszul_ranks(const ScrollData& s, int k) {
    if (k < 0 || k > s.ell() - 1) throw domain_error("koszul_ranks: k out of range");
    std::vector<FineDegree> gens = detail::G_le_shifts(s, k);
    ComplexRanks c;
    for (int q = 0; q <= static_cast<int>(gens.size()); ++q)
        c.modules.push_back({detail::wedge_shifts(gens, q, s.ell())});
    c.sort_shifts();
    return c;
}

// Eagon-Northcott-type complex resolving Sym_{r-1}(cok psi_{>k}) for the
// eligible tuple a with cutoff k and r = r(a):
//   position p:  Sym_{r-1-p} E (x) Wedge^p F_{>k}        for 0 <= p <= r-1,
//                D_{p-r} E^* (x) Wedge^{p+1} F_{>k}      for r <= p <= m-1,
// with m = rank F_{>k}; the tail is empty when r = m.
inline ComplexRanks en_ranks(const ScrollData& s, const EligibleTuple& a) {
    int k = a.k();
    int r = a.r;
    std::vector<FineDegree> F = detail::F_gt_shifts(s, k);
    int m = static_cast<int>(F.size());
    ComplexRanks c;
    int length = std::max(r - 1, m - 1);
    for (int p = 0; p <= length; ++p) {
        if (p <= r - 1)
            c.modules.push_back(detail::product_module(detail::sym_E_shifts(r - 1 - p, s.ell()),
                                                       detail::wedge_shifts(F, p, s.ell())));
        else
            c.modules.push_back(detail::product_module(detail::div_Estar_shifts(p - r, s.ell()),
                                                       detail::wedge_shifts(F, p + 1, s.ell())));
    }
    c.sort_shifts();
    return c;
}

// The complex with position p = D_p E^* (x) Wedge^{p+1} F_{>k}, resolving the
// ideal of first-row entries of psi_{>k} over S/I_2(psi_{>k}), twisted by (1,-1;0).
inline ComplexRanks first_row_complex_ranks(const ScrollData& s, int k) {
    if (k < 0 || k > s.ell() - 1) throw domain_error("first_row_complex_ranks: k out of range");
    std::vector<FineDegree> F = detail::F_gt_shifts(s, k);
    int m = static_cast<int>(F.size());
    ComplexRanks c;
    for (int p = 0; p <= m - 1; ++p)
        c.modules.push_back(detail::product_module(detail::div_Estar_shifts(p, s.ell()),
                                                   detail::wedge_shifts(F, p + 1, s.ell())));
    c.sort_shifts();
    return c;
}

inline ComplexRanks tensor(const ComplexRanks& a, const ComplexRanks& b) {
    ComplexRanks c;
    c.modules.resize(a.modules.size() + b.modules.size() - 1);
    for (std::size_t p = 0; p < a.modules.size(); ++p)
        for (std::size_t q = 0; q < b.modules.size(); ++q)
            for (const FineDegree& x : a.modules[p].shifts)
                for (const FineDegree& y : b.modules[q].shifts)
                    c.modules[p + q].shifts.push_back(x + y);
    c.sort_shifts();
    return c;
}

inline ComplexRanks shifted(ComplexRanks c, const FineDegree& offset) {
    for (auto& m : c.modules)
        for (FineDegree& g : m.shifts) g += offset;
    return c;
}

// ---- filtrations ----

enum class FactorKind { symmetric_power, first_row };
enum class Filtration { fine, coarse };

struct FactorDescriptor {
    EligibleTuple tuple;
    FactorKind kind = FactorKind::symmetric_power;
    FineDegree shift;   // generator-degree offset of the factor's resolution
    int j_index = -1;   // block cutoff for first-row factors, else -1
};

namespace detail {

inline FineDegree symmetric_shift(const ScrollData& s, const EligibleTuple& t) {
    FineDegree f = zero_fdeg(s.ell());
    for (int u = 1; u <= t.k(); ++u) f.e[u - 1] += t.a[u - 1];
    f.e[t.k()] += t.f + 1;
    f.alpha = s.sigma_dot(f.e);
    return f;
}

inline FineDegree first_row_shift(const ScrollData& s, const EligibleTuple& t) {
    FineDegree f = zero_fdeg(s.ell());
    for (int u = 1; u <= t.k(); ++u) f.e[u - 1] += t.a[u - 1];
    f.e[t.k()] += t.f;
    f.alpha = s.sigma_dot(f.e) + 1;
    f.beta = -1;
    return f;
}

// largest s such that a = N^s(b) for an eligible b with r(b) = sigma_{ell-s};
// returns the cutoff j = ell - 1 - s
inline int first_row_cutoff(const ScrollData& s, const EligibleTuple& t) {
    EligibleTuple b = t;
    int steps = 0;
    while (b.k() > 0) {
        std::vector<int> shorter(b.a.begin(), b.a.end() - 1);
        EligibleTuple candidate = make_eligible(s, shorter);
        if (candidate.f != b.a.back()) break;                       // N(candidate) != b
        if (candidate.r != s.sigma(s.ell() - steps - 1)) break;     // chain condition fails
        b = candidate;
        ++steps;
    }
    return s.ell() - 1 - steps;
}

} // namespace detail

// One symmetric-power descriptor per eligible tuple, in descending order;
// the position-0 shifts of the factors reproduce L grouped by tuple.
inline std::vector<FactorDescriptor> filtration_fine(const ScrollData& s) {
    std::vector<FactorDescriptor> out;
    for (const EligibleTuple& t : enumerate_eligible(s)) {
        FactorDescriptor d;
        d.tuple = t;
        d.kind = FactorKind::symmetric_power;
        d.shift = detail::symmetric_shift(s, t);
        out.push_back(std::move(d));
    }
    return out;
}

// One descriptor per eligible' tuple (eligible with k = ell-1 or r < sigma_{k+1}).
// Tuples with r = sigma_{k+1} get a first-row factor, except the last tuple
// 0^{ell-1}, whose coarse and fine factors coincide.
inline std::vector<FactorDescriptor> filtration_coarse(const ScrollData& s) {
    std::vector<EligibleTuple> all = enumerate_eligible(s);
    std::vector<FactorDescriptor> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const EligibleTuple& t = all[i];
        bool last = i + 1 == all.size();
        if (!(t.k() == s.ell() - 1 || t.r < s.sigma(t.k() + 1))) continue;  // not eligible'
        FactorDescriptor d;
        d.tuple = t;
        if (t.r == s.sigma(t.k() + 1) && !last) {
            d.kind = FactorKind::first_row;
            d.j_index = detail::first_row_cutoff(s, t);
            d.shift = detail::first_row_shift(s, t);
        } else {
            d.kind = FactorKind::symmetric_power;
            d.shift = detail::symmetric_shift(s, t);
        }
        out.push_back(std::move(d));
    }
    return out;
}

inline std::vector<FactorDescriptor> filtration(const ScrollData& s, Filtration which) {
    return which == Filtration::fine ? filtration_fine(s) : filtration_coarse(s);
}

// Minimal resolution of one filtration factor: the tensor product of its
// Eagon-Northcott-type complex with the Koszul complex on the leading
// blocks, globally shifted.
inline ComplexRanks factor_resolution(const ScrollData& s, const FactorDescriptor& d) {
    if (d.kind == FactorKind::symmetric_power) {
        ComplexRanks c = tensor(en_ranks(s, d.tuple), koszul_ranks(s, d.tuple.k()));
        return shifted(std::move(c), d.shift);
    }
    ComplexRanks c = tensor(first_row_complex_ranks(s, d.j_index), koszul_ranks(s, d.j_index));
    return shifted(std::move(c), d.shift);
}

// Positionwise direct sum of the factor resolutions: the modules of a
// resolution of K^(n), of length sum sigma_u + ell - 2.  The differentials
// are not materialized; exactness is certified through the Euler
// characteristic against the fine Hilbert function of K^(n).
inline ComplexRanks total_resolution(const ScrollData& s, Filtration which) {
    ComplexRanks total;
    for (const FactorDescriptor& d : filtration(s, which)) {
        ComplexRanks c = factor_resolution(s, d);
        if (c.modules.size() > total.modules.size()) total.modules.resize(c.modules.size());
        for (std::size_t p = 0; p < c.modules.size(); ++p)
            total.modules[p].shifts.insert(total.modules[p].shifts.end(),
                                           c.modules[p].shifts.begin(), c.modules[p].shifts.end());
    }
    total.sort_shifts();
    return total;
}

// ---- Hilbert functions ----

struct HilbertTable {
    std::map<FineDegree, long long> fine;   // nonzero fine components only
    std::vector<long long> total;           // aggregated by total degree
};

namespace detail {

inline void aggregate(HilbertTable& t, int bound) {
    t.total.assign(bound + 1, 0);
    for (const auto& [f, v] : t.fine) {
        int d = f.total_degree();
        if (0 <= d && d <= bound) t.total[d] += v;
    }
}

} // namespace detail

// Fine Hilbert function of A (alpha >= 0) or of K^(n) (alpha >= n): every
// fine component is 0- or 1-dimensional.
inline HilbertTable hilbert_function_A(const ScrollData& s, int through_total_degree,
                                       int min_alpha = 0) {
    if (through_total_degree < 0) throw domain_error("hilbert_function: negative bound");
    HilbertTable t;
    for (int d = 0; d <= through_total_degree; ++d)
        for (const FineDegree& f : A_monomial_basis(s, d))
            if (f.alpha >= min_alpha) t.fine[f] = 1;
    detail::aggregate(t, through_total_degree);
    return t;
}

inline HilbertTable hilbert_function_K(const ScrollData& s, int through_total_degree) {
    return hilbert_function_A(s, through_total_degree, s.n());
}

// Hilbert function of a filtration factor, read off as the alternating sum
// over its resolution's shifts.
inline HilbertTable hilbert_function_factor(const ScrollData& s, const FactorDescriptor& d,
                                            int through_total_degree) {
    SFineHilbert hs(s);
    ComplexRanks c = factor_resolution(s, d);
    HilbertTable t;
    for (int deg = 0; deg <= through_total_degree; ++deg)
        for (const FineDegree& f : A_monomial_basis(s, deg)) {
            long long v = c.euler_at(hs, f);
            if (v != 0) t.fine[f] = v;
        }
    detail::aggregate(t, through_total_degree);
    return t;
}

} // namespace scrolldiv
