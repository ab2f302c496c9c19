#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "core.hpp"

namespace scrolldiv {

// Variable T_{block,slot} with 1 <= block <= ell and 1 <= slot <= sigma_block + 1.
struct VarId {
    int block = 1;
    int slot = 1;

    friend bool operator==(const VarId&, const VarId&) = default;
    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline std::string to_string(const VarId& v) {
    return "T(" + std::to_string(v.block) + "," + std::to_string(v.slot) + ")";
}

// The triple (alpha, beta; e): exponents of x, y and t_1..t_ell under the
// monomial embedding.  alpha carries the Deg weight, |e| the total degree.
struct FineDegree {
    int alpha = 0;
    int beta = 0;
    std::vector<int> e;

    int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    FineDegree& operator+=(const FineDegree& o) {
        alpha += o.alpha;
        beta += o.beta;
        if (e.size() < o.e.size()) e.resize(o.e.size(), 0);
        for (std::size_t i = 0; i < o.e.size(); ++i) e[i] += o.e[i];
        return *this;
    }

    friend FineDegree operator+(FineDegree a, const FineDegree& b) { return a += b; }

    FineDegree& operator-=(const FineDegree& o) {
        alpha -= o.alpha;
        beta -= o.beta;
        if (e.size() < o.e.size()) e.resize(o.e.size(), 0);
        for (std::size_t i = 0; i < o.e.size(); ++i) e[i] -= o.e[i];
        return *this;
    }

    friend FineDegree operator-(FineDegree a, const FineDegree& b) { return a -= b; }

    friend bool operator==(const FineDegree&, const FineDegree&) = default;
    friend auto operator<=>(const FineDegree&, const FineDegree&) = default;
};

inline std::string to_string(const FineDegree& f) {
    std::string s = "(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ";";
    for (std::size_t i = 0; i < f.e.size(); ++i) s += (i ? "," : "") + std::to_string(f.e[i]);
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const FineDegree& f) { return os << to_string(f); }

// Scroll configuration: block widths sigma_1 >= ... >= sigma_ell >= 1, the
// power n >= 2, and the coefficient prime.  Also owns the flat numbering of
// the variables T_{i,j} (T_{1,1} first, blocks in order) and their gradings.
class ScrollData {
public:
    static constexpr std::uint32_t default_prime = 32003;

    ScrollData(std::vector<int> sigma, int n, std::uint32_t prime = default_prime)
        : sigma_(std::move(sigma)), n_(n), prime_(prime) {
        if (sigma_.empty()) throw config_error("sigma must be nonempty");
        for (std::size_t i = 0; i < sigma_.size(); ++i) {
            if (sigma_[i] < 1) throw config_error("sigma entries must be >= 1");
            if (i > 0 && sigma_[i] > sigma_[i - 1])
                throw config_error("sigma must be weakly decreasing");
        }
        if (n_ < 2) throw config_error("the power n must be >= 2");
        if (!Gf::is_prime(prime_)) throw config_error("prime must be prime");
        block_start_.resize(sigma_.size());
        int flat = 0;
        for (std::size_t u = 0; u < sigma_.size(); ++u) {
            block_start_[u] = flat;
            for (int j = 1; j <= sigma_[u] + 1; ++j)
                vars_.push_back(VarId{static_cast<int>(u) + 1, j});
            flat += sigma_[u] + 1;
        }
    }

    const std::vector<int>& sigma() const { return sigma_; }
    int sigma(int block) const { return sigma_[block - 1]; }  // 1-based block
    int ell() const { return static_cast<int>(sigma_.size()); }
    int n() const { return n_; }
    std::uint32_t prime() const { return prime_; }
    Gf field() const { return Gf(prime_); }

    // number of variables of S, i.e. N + 1 = sum (sigma_u + 1)
    int num_vars() const { return static_cast<int>(vars_.size()); }
    int sigma_sum() const { return num_vars() - ell(); }
    int sigma_last() const { return sigma_.back(); }

    // flat numbering: T_{1,1} |-> 0, ..., T_{1,sigma_1+1} |-> sigma_1, T_{2,1} |-> sigma_1+1, ...
    int flat(const VarId& v) const {
        if (v.block < 1 || v.block > ell() || v.slot < 1 || v.slot > sigma_[v.block - 1] + 1)
            throw domain_error("variable " + scrolldiv::to_string(v) + " outside this scroll");
        return block_start_[v.block - 1] + v.slot - 1;
    }
    int flat(int block, int slot) const { return flat(VarId{block, slot}); }

    VarId var(int flat_index) const {
        if (flat_index < 0 || flat_index >= num_vars())
            throw domain_error("flat index out of range");
        return vars_[flat_index];
    }

    // Deg T_{i,j} = sigma_i + 1 - j
    int deg_of_var(int flat_index) const {
        VarId v = var(flat_index);
        return sigma_[v.block - 1] + 1 - v.slot;
    }

    // fdeg T_{i,j} = (sigma_i - j + 1, j - 1; e_i)
    FineDegree fdeg_of_var(int flat_index) const {
        VarId v = var(flat_index);
        FineDegree f;
        f.alpha = sigma_[v.block - 1] + 1 - v.slot;
        f.beta = v.slot - 1;
        f.e.assign(sigma_.size(), 0);
        f.e[v.block - 1] = 1;
        return f;
    }

    int sigma_dot(const std::vector<int>& e) const {
        long long s = 0;
        for (std::size_t i = 0; i < e.size() && i < sigma_.size(); ++i)
            s += static_cast<long long>(sigma_[i]) * e[i];
        return static_cast<int>(s);
    }

    bool same_universe(const ScrollData& o) const {
        return sigma_ == o.sigma_;
    }

private:
    std::vector<int> sigma_;
    int n_;
    std::uint32_t prime_;
    std::vector<VarId> vars_;
    std::vector<int> block_start_;
};

} // namespace scrolldiv
