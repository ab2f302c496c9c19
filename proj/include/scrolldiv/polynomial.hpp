#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace scrolldiv {

struct Term {
    Monomial mono;
    std::uint32_t coeff = 0;
};

// Polynomial over GF(p): terms with nonzero coefficients, strictly descending
// in revlex.  The empty term list is the zero polynomial.  Values are
// immutable by convention; every operation returns a fresh polynomial.
struct Polynomial {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& leading() const {
        if (is_zero()) throw domain_error("leading term of the zero polynomial");
        return terms.front();
    }
    const Monomial& leading_monomial() const { return leading().mono; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (std::size_t i = 0; i < a.terms.size(); ++i)
            if (a.terms[i].coeff != b.terms[i].coeff || !(a.terms[i].mono == b.terms[i].mono))
                return false;
        return true;
    }
};

inline Polynomial poly_zero() { return {}; }

inline Polynomial poly_term(const Monomial& m, std::uint32_t c) {
    Polynomial p;
    if (c != 0) p.terms.push_back({m, c});
    return p;
}

inline Polynomial poly_monomial(const Monomial& m) { return poly_term(m, 1); }

// Merge two descending term lists, combining coefficients mod p.
inline Polynomial poly_add(const Gf& k, const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        auto cmp = compare_revlex(a.terms[i].mono, b.terms[j].mono);
        if (cmp == std::strong_ordering::greater) {
            out.terms.push_back(a.terms[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.terms.push_back(b.terms[j++]);
        } else {
            std::uint32_t c = k.add(a.terms[i].coeff, b.terms[j].coeff);
            if (c != 0) out.terms.push_back({a.terms[i].mono, c});
            ++i; ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

inline Polynomial poly_scale(const Gf& k, const Polynomial& a, std::uint32_t c) {
    Polynomial out;
    if (c == 0) return out;
    out.terms.reserve(a.terms.size());
    for (const Term& t : a.terms) out.terms.push_back({t.mono, k.mul(t.coeff, c)});
    return out;
}

inline Polynomial poly_neg(const Gf& k, const Polynomial& a) {
    Polynomial out;
    out.terms.reserve(a.terms.size());
    for (const Term& t : a.terms) out.terms.push_back({t.mono, k.neg(t.coeff)});
    return out;
}

inline Polynomial poly_sub(const Gf& k, const Polynomial& a, const Polynomial& b) {
    return poly_add(k, a, poly_neg(k, b));
}

// a * (c * m); multiplying by a monomial preserves the term order.
inline Polynomial poly_mul_term(const Gf& k, const Polynomial& a, const Monomial& m,
                                std::uint32_t c) {
    Polynomial out;
    if (c == 0) return out;
    out.terms.reserve(a.terms.size());
    for (const Term& t : a.terms) out.terms.push_back({t.mono * m, k.mul(t.coeff, c)});
    return out;
}

inline Polynomial poly_mul(const Gf& k, const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const Term& t : a.terms) out = poly_add(k, out, poly_mul_term(k, b, t.mono, t.coeff));
    return out;
}

inline Polynomial poly_monic(const Gf& k, const Polynomial& a) {
    if (a.is_zero() || a.leading().coeff == 1) return a;
    return poly_scale(k, a, k.inv(a.leading().coeff));
}

inline Polynomial poly_binomial(const Gf& k, const Monomial& pos, const Monomial& neg) {
    Polynomial p = poly_add(k, poly_monomial(pos), poly_term(neg, k.neg(1)));
    return p;
}

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // aligned with the divisor list
};

// Multivariate division: repeatedly cancel the leading term of the running
// dividend against the first divisor (in list order) whose leading monomial
// divides it; otherwise the leading term moves to the remainder.  Result
// satisfies f = sum quotient_i * basis_i + remainder, and no remainder term
// is divisible by any divisor lead.
inline DivisionResult reduce(const Gf& k, const Polynomial& f,
                             const std::vector<Polynomial>& basis) {
    for (const Polynomial& g : basis)
        if (g.is_zero()) throw domain_error("reduce: zero divisor in basis");
    DivisionResult res;
    res.quotients.assign(basis.size(), Polynomial{});
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term& lt = h.leading();
        bool divided = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Term& lg = basis[i].leading();
            if (!lg.mono.divides(lt.mono)) continue;
            Monomial q = lt.mono.divided_by(lg.mono);
            std::uint32_t c = k.div(lt.coeff, lg.coeff);
            res.quotients[i] = poly_add(k, res.quotients[i], poly_term(q, c));
            h = poly_sub(k, h, poly_mul_term(k, basis[i], q, c));
            divided = true;
            break;
        }
        if (!divided) {
            res.remainder.terms.push_back(lt);
            h.terms.erase(h.terms.begin());
        }
    }
    return res;
}

inline Polynomial normal_form(const Gf& k, const Polynomial& f,
                              const std::vector<Polynomial>& basis) {
    return reduce(k, f, basis).remainder;
}

// S(f,g) = (lcm/lt f) f / lc f - (lcm/lt g) g / lc g; the leading terms cancel.
inline Polynomial s_polynomial(const Gf& k, const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw domain_error("s_polynomial of zero polynomial");
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = poly_mul_term(k, f, l.divided_by(f.leading_monomial()), k.inv(f.leading().coeff));
    Polynomial b = poly_mul_term(k, g, l.divided_by(g.leading_monomial()), k.inv(g.leading().coeff));
    return poly_sub(k, a, b);
}

inline std::string to_string(const ScrollData& s, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        const Term& t = p.terms[i];
        if (i) out += " + ";
        if (t.coeff != 1 || t.mono.is_one())
            out += std::to_string(t.coeff) + (t.mono.is_one() ? "" : "*");
        if (!t.mono.is_one()) out += to_string(s, t.mono);
    }
    return out;
}

} // namespace scrolldiv
