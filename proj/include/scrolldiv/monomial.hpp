#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "scroll.hpp"

namespace scrolldiv {

// Monomial of S as a dense exponent vector over the flat variable order.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(int num_vars) : exp(num_vars, 0) {}

    static Monomial one(const ScrollData& s) { return Monomial(s.num_vars()); }

    static Monomial variable(const ScrollData& s, const VarId& v, int power = 1) {
        Monomial m(s.num_vars());
        m.exp[s.flat(v)] = power;
        return m;
    }

    int total_degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

    bool is_one() const {
        return std::all_of(exp.begin(), exp.end(), [](int a) { return a == 0; });
    }

    Monomial& operator*=(const Monomial& o) {
        check_universe(o);
        for (std::size_t i = 0; i < exp.size(); ++i) exp[i] += o.exp[i];
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    bool divides(const Monomial& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }

    // this / o; requires o | this
    Monomial divided_by(const Monomial& o) const {
        check_universe(o);
        Monomial q(static_cast<int>(exp.size()));
        for (std::size_t i = 0; i < exp.size(); ++i) {
            q.exp[i] = exp[i] - o.exp[i];
            if (q.exp[i] < 0) throw domain_error("Monomial::divided_by: not divisible");
        }
        return q;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_universe(b);
        Monomial m(static_cast<int>(a.exp.size()));
        for (std::size_t i = 0; i < a.exp.size(); ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
        return m;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_universe(b);
        Monomial m(static_cast<int>(a.exp.size()));
        for (std::size_t i = 0; i < a.exp.size(); ++i) m.exp[i] = std::min(a.exp[i], b.exp[i]);
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        a.check_universe(b);
        for (std::size_t i = 0; i < a.exp.size(); ++i)
            if (a.exp[i] > 0 && b.exp[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    void check_universe(const Monomial& o) const {
        if (exp.size() != o.exp.size())
            throw config_error("monomials over different variable universes");
    }
};

// Reverse lexicographic order for the variable order T_{1,1} > T_{1,2} > ...:
// m1 > m2 iff deg m1 > deg m2, or degrees tie and the right-most nonzero
// entry of exp(m1) - exp(m2) is negative.
inline std::strong_ordering compare_revlex(const Monomial& m1, const Monomial& m2) {
    m1.check_universe(m2);
    int d1 = m1.total_degree(), d2 = m2.total_degree();
    if (d1 != d2) return d1 <=> d2;
    for (std::size_t i = m1.exp.size(); i-- > 0;) {
        int diff = m1.exp[i] - m2.exp[i];
        if (diff != 0) return diff < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

inline bool revlex_less(const Monomial& a, const Monomial& b) {
    return compare_revlex(a, b) == std::strong_ordering::less;
}
inline bool revlex_greater(const Monomial& a, const Monomial& b) {
    return compare_revlex(a, b) == std::strong_ordering::greater;
}

struct Grading {
    long long deg = 0;     // weight grading
    int total = 0;         // standard grading
    FineDegree fdeg;
};

// Deg, total degree, and fdeg of a monomial, all additive.
inline Grading grade(const ScrollData& s, const Monomial& m) {
    if (static_cast<int>(m.exp.size()) != s.num_vars())
        throw config_error("monomial does not match scroll");
    Grading g;
    g.fdeg.e.assign(s.ell(), 0);
    for (int i = 0; i < s.num_vars(); ++i) {
        if (m.exp[i] == 0) continue;
        VarId v = s.var(i);
        int w = s.sigma(v.block) + 1 - v.slot;
        g.deg += static_cast<long long>(w) * m.exp[i];
        g.total += m.exp[i];
        g.fdeg.alpha += w * m.exp[i];
        g.fdeg.beta += (v.slot - 1) * m.exp[i];
        g.fdeg.e[v.block - 1] += m.exp[i];
    }
    return g;
}

inline long long deg_weight(const ScrollData& s, const Monomial& m) { return grade(s, m).deg; }

inline std::string to_string(const ScrollData& s, const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (int i = 0; i < s.num_vars(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += to_string(s.var(i));
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out;
}

// A monomial of S realizing a prescribed fine degree, or a domain error when
// the triple is not the fdeg of any monomial (needs alpha,beta >= 0, e >= 0,
// alpha + beta = sigma.e, and a per-block split of alpha into e_u weights <= sigma_u).
inline Monomial monomial_with_fdeg(const ScrollData& s, const FineDegree& f) {
    if (static_cast<int>(f.e.size()) != s.ell())
        throw domain_error("fine degree has wrong block count");
    if (f.alpha < 0 || f.beta < 0) throw domain_error("fine degree with negative x/y part");
    for (int c : f.e)
        if (c < 0) throw domain_error("fine degree with negative t part");
    if (f.alpha + f.beta != s.sigma_dot(f.e))
        throw domain_error("fine degree violates alpha + beta = sigma.e");
    // Greedy: give each block as much x-weight as it can carry, then fill the
    // block with the heaviest variables first.  Feasible because the total
    // capacity sigma.e equals alpha + beta >= alpha.
    Monomial m(s.num_vars());
    int remaining = f.alpha;
    for (int u = 1; u <= s.ell(); ++u) {
        int su = s.sigma(u);
        int block_alpha = std::min(su * f.e[u - 1], remaining);
        remaining -= block_alpha;
        for (int t = 0; t < f.e[u - 1]; ++t) {
            int w = std::min(su, block_alpha);
            m.exp[s.flat(u, su + 1 - w)] += 1;
            block_alpha -= w;
        }
    }
    if (remaining != 0) throw domain_error("fine degree not realizable");
    return m;
}

} // namespace scrolldiv
