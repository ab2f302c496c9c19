#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "scroll_model.hpp"

namespace scrolldiv {

// A k-tuple a = (a_1,...,a_k) with 0 <= k <= ell-1 and sum a_u sigma_u < n,
// together with the derived quantities f(a) and r(a).
struct EligibleTuple {
    std::vector<int> a;
    int f = 0;
    int r = 0;

    int k() const { return static_cast<int>(a.size()); }

    friend bool operator==(const EligibleTuple& x, const EligibleTuple& y) { return x.a == y.a; }
};

inline std::string to_string(const EligibleTuple& t) {
    if (t.a.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < t.a.size(); ++i) s += (i ? "," : "") + std::to_string(t.a[i]);
    return s + ")";
}

// The total order on eligible tuples: pad on the right with +infinity and
// compare lexicographically.  The empty tuple is the largest.
inline std::strong_ordering compare_tuples(const std::vector<int>& b, const std::vector<int>& a) {
    std::size_t m = std::min(b.size(), a.size());
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] != a[i]) return b[i] <=> a[i];
    // shorter means padded with infinity, hence larger
    return a.size() <=> b.size();
}

inline bool tuple_greater(const EligibleTuple& b, const EligibleTuple& a) {
    return compare_tuples(b.a, a.a) == std::strong_ordering::greater;
}

inline long long weighted_sum(const ScrollData& s, const std::vector<int>& a) {
    long long w = 0;
    for (std::size_t u = 0; u < a.size(); ++u) w += static_cast<long long>(a[u]) * s.sigma(static_cast<int>(u) + 1);
    return w;
}

// f(a) is the unique integer with
//   sum a_u sigma_u + f sigma_{k+1} < n <= sum a_u sigma_u + (f+1) sigma_{k+1},
// and r(a) = sum a_u sigma_u + (f+1) sigma_{k+1} - n + 1, with 1 <= r <= sigma_{k+1}.
inline EligibleTuple make_eligible(const ScrollData& s, std::vector<int> a) {
    int k = static_cast<int>(a.size());
    if (k > s.ell() - 1) throw domain_error("tuple longer than ell - 1");
    long long w = weighted_sum(s, a);
    if (w >= s.n()) throw domain_error("tuple is not eligible: weighted sum >= n");
    int sk1 = s.sigma(k + 1);
    long long deficit = s.n() - w;  // >= 1
    long long f = (deficit - 1) / sk1;  // largest f with w + f*sk1 < n
    long long r = w + (f + 1) * sk1 - s.n() + 1;
    EligibleTuple t;
    t.a = std::move(a);
    t.f = static_cast<int>(f);
    t.r = static_cast<int>(r);
    return t;
}

// Every eligible tuple, sorted descending; the empty tuple comes first and
// the zero (ell-1)-tuple last.
inline std::vector<EligibleTuple> enumerate_eligible(const ScrollData& s) {
    std::vector<EligibleTuple> out;
    std::vector<int> a;
    auto rec = [&](auto&& self, int k) -> void {
        out.push_back(make_eligible(s, a));
        if (k == s.ell() - 1) return;
        int sk = s.sigma(k + 1);
        for (int v = 0; weighted_sum(s, a) + static_cast<long long>(v) * sk < s.n(); ++v) {
            a.push_back(v);
            self(self, k + 1);
            a.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const EligibleTuple& x, const EligibleTuple& y) {
        return compare_tuples(x.a, y.a) == std::strong_ordering::greater;
    });
    return out;
}

// N(a) = (a, f(a)), the immediate successor of a in the tuple order.
inline EligibleTuple neighbor_N(const ScrollData& s, const EligibleTuple& t) {
    if (t.k() >= s.ell() - 1) throw domain_error("N(a) undefined for k = ell - 1");
    std::vector<int> b = t.a;
    b.push_back(t.f);
    return make_eligible(s, std::move(b));
}

// One bundle of generators of K^(n): T^a T_{k+1,1}^{f(a)} T_{k+1,u} for 1 <= u <= r(a).
struct LGenerator {
    Monomial mono;
    EligibleTuple tuple;
    int u = 1;  // the slot index of the trailing factor, 1 <= u <= r(tuple)
};

inline Monomial tuple_monomial(const ScrollData& s, const EligibleTuple& t) {
    Monomial m = Monomial::one(s);
    for (int u = 1; u <= t.k(); ++u) m.exp[s.flat(u, 1)] += t.a[u - 1];
    return m;
}

inline std::vector<LGenerator> l_generators(const ScrollData& s) {
    std::vector<LGenerator> out;
    for (const EligibleTuple& t : enumerate_eligible(s)) {
        Monomial base = tuple_monomial(s, t);
        base.exp[s.flat(t.k() + 1, 1)] += t.f;
        for (int u = 1; u <= t.r; ++u) {
            LGenerator g;
            g.mono = base;
            g.mono.exp[s.flat(t.k() + 1, u)] += 1;
            g.tuple = t;
            g.u = u;
            out.push_back(std::move(g));
        }
    }
    return out;
}

// The list L of Definition 1.12-style generators of K^(n).
inline std::vector<Monomial> generating_set_L(const ScrollData& s) {
    std::vector<Monomial> out;
    for (const LGenerator& g : l_generators(s)) out.push_back(g.mono);
    return out;
}

// Minimality criterion for a monomial generating set of an ideal in the
// monomial subring: no pi-image may divide the pi-image of another element.
// Division of pi-images is componentwise on the fine-degree triples.
struct MinimalityResult {
    bool minimal = true;
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // (divisor, multiple)
};

inline bool fdeg_divides(const FineDegree& h, const FineDegree& g) {
    if (h.alpha > g.alpha || h.beta > g.beta) return false;
    if (h.e.size() != g.e.size()) return false;
    for (std::size_t i = 0; i < h.e.size(); ++i)
        if (h.e[i] > g.e[i]) return false;
    return true;
}

inline MinimalityResult check_minimality(const ScrollData& s, const std::vector<Monomial>& L) {
    if (L.empty()) throw domain_error("check_minimality: empty list");
    std::vector<FineDegree> images;
    images.reserve(L.size());
    for (const Monomial& m : L) images.push_back(pi_image(s, m));
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j)
            if (i != j && fdeg_divides(images[i], images[j]))
                return {false, std::make_pair(i, j)};
    return {};
}

// Canonical form modulo H: the rewriting of the monomial into the shape
//   T_{1,1}^{a_1} ... T_{k,1}^{a_k} T_{k,v} T_{k,sigma_k+1}^{b_k} ... T_{ell,sigma_ell+1}^{b_ell}.
// Strip slot-1 variables off the large end and last-slot variables off the
// small end; while the middle still has total degree >= 2, rewrite its
// largest variable T_{i,j} and smallest T_{u,v} via
//   T_{i,j} T_{u,v} -> T_{i,j-1} T_{u,v+1},
// a step that preserves Deg and fdeg and strictly decreases the monomial in
// revlex, so the loop terminates.
inline Monomial canonical_form(const ScrollData& s, const Monomial& m) {
    if (deg_weight(s, m) == 0) throw domain_error("canonical_form requires Deg > 0");
    Monomial cur = m;
    const int nv = s.num_vars();
    for (;;) {
        // slot-1 variables at the large end form the prefix, last-slot
        // variables at the small end the suffix; the middle is what remains
        int lo = 0;
        while (lo < nv && (cur.exp[lo] == 0 || s.var(lo).slot == 1)) ++lo;
        int hi = nv - 1;
        while (hi >= 0 && (cur.exp[hi] == 0 || s.var(hi).slot == s.sigma(s.var(hi).block) + 1)) --hi;
        if (lo > hi) return cur;  // middle factor is empty
        int middle_degree = 0;
        for (int i = lo; i <= hi; ++i) middle_degree += cur.exp[i];
        if (middle_degree <= 1) return cur;
        VarId big = s.var(lo), small = s.var(hi);
        cur.exp[lo] -= 1;
        cur.exp[hi] -= 1;
        cur.exp[s.flat(big.block, big.slot - 1)] += 1;
        cur.exp[s.flat(small.block, small.slot + 1)] += 1;
    }
}

// Membership of an A-monomial in K^(n) = A_{>= n}: Deg >= n.
inline bool in_symbolic_power(const ScrollData& s, const Monomial& m) {
    return deg_weight(s, m) >= s.n();
}

} // namespace scrolldiv
