// Command-line surface: gens | gb | resolve | betti | reg | hilbert | rees.
// Each command validates the configuration, runs the computation together
// with its internal cross-checks, and emits a report as a human table, CSV,
// or JSON.  Exit codes: 0 ok, 1 a cross-check failed, 2 bad configuration,
// 3 capacity exceeded, 4 oracle table incomplete.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <scrolldiv/scrolldiv.hpp>

using json = nlohmann::json;
using namespace scrolldiv;

namespace {

struct Options {
    std::string sigma_text;
    int n = 0;
    std::uint32_t prime = ScrollData::default_prime;
    int degree_bound = -1;
    std::string filtration = "fine";
    std::string format = "table";
    std::size_t max_pairs = 100000;
};

std::vector<int> parse_sigma(const std::string& text) {
    std::vector<int> sigma;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            sigma.push_back(v);
        } catch (const std::exception&) {
            throw config_error("--sigma expects comma-separated integers, got '" + text + "'");
        }
    }
    return sigma;
}

ScrollData make_scroll(const Options& opt) {
    if (opt.n < 2)
        throw config_error("the power n must be >= 2 (the standing hypothesis of the construction)");
    return ScrollData(parse_sigma(opt.sigma_text), opt.n, opt.prime);
}

json fdeg_json(const FineDegree& f) { return json{f.alpha, f.beta, f.e}; }

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    json result;
    std::map<std::string, bool> checks;
    Csv csv;
    std::vector<std::string> table_lines;
};

int emit(const Options& opt, const ScrollData& s, const Report& r) {
    bool ok = true;
    for (const auto& [name, value] : r.checks) ok = ok && value;
    if (opt.format == "json") {
        json out;
        out["sigma"] = s.sigma();
        out["n"] = s.n();
        out["prime"] = s.prime();
        out["result"] = r.result;
        out["checks"] = r.checks;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::string line;
        for (std::size_t i = 0; i < r.csv.header.size(); ++i)
            line += (i ? "," : "") + r.csv.header[i];
        std::cout << line << "\n";
        for (const auto& row : r.csv.rows) {
            line.clear();
            for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + row[i];
            std::cout << line << "\n";
        }
    } else {
        std::cout << "sigma = (";
        for (std::size_t i = 0; i < s.sigma().size(); ++i)
            std::cout << (i ? "," : "") << s.sigma()[i];
        std::cout << ")  n = " << s.n() << "  p = " << s.prime() << "\n";
        for (const std::string& l : r.table_lines) std::cout << l << "\n";
        for (const auto& [name, value] : r.checks)
            std::cout << "check " << name << ": " << (value ? "pass" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

// ---- gens ----

Report run_gens(const ScrollData& s) {
    Report r;
    std::vector<LGenerator> gens = l_generators(s);
    std::vector<Monomial> L;
    for (const LGenerator& g : gens) L.push_back(g.mono);
    MinimalityResult min = check_minimality(s, L);
    bool deg_ok = true;
    json rows = json::array();
    r.csv.header = {"monomial", "tuple", "Deg", "total_degree", "fdeg"};
    for (const LGenerator& g : gens) {
        Grading gr = grade(s, g.mono);
        deg_ok = deg_ok && gr.deg >= s.n();
        json row;
        row["monomial"] = to_string(s, g.mono);
        row["tuple"] = g.tuple.a;
        row["f"] = g.tuple.f;
        row["r"] = g.tuple.r;
        row["u"] = g.u;
        row["Deg"] = gr.deg;
        row["total_degree"] = gr.total;
        row["fdeg"] = fdeg_json(gr.fdeg);
        row["pi_image"] = fdeg_json(pi_image(s, g.mono));
        rows.push_back(row);
        r.csv.rows.push_back({to_string(s, g.mono), to_string(g.tuple), std::to_string(gr.deg),
                              std::to_string(gr.total), to_string(gr.fdeg)});
        r.table_lines.push_back(to_string(s, g.mono) + "  tuple " + to_string(g.tuple) +
                                "  Deg " + std::to_string(gr.deg) + "  fdeg " + to_string(gr.fdeg));
    }
    r.result["generators"] = rows;
    r.result["count"] = gens.size();
    r.table_lines.push_back("|L| = " + std::to_string(gens.size()));
    r.checks["minimal"] = min.minimal;
    r.checks["deg_at_least_n"] = deg_ok;
    return r;
}

// ---- gb ----

Report run_gb(const ScrollData& s, int degree_bound, std::size_t max_pairs) {
    Report r;
    if (degree_bound < 0) degree_bound = 5;
    Gf k = s.field();
    std::vector<Polynomial> basis = minors_H(s);
    std::size_t minor_count = basis.size();
    for (const Monomial& m : generating_set_L(s)) basis.push_back(poly_monomial(m));
    VerifyResult v = verify_gb(s, basis);

    // every (L, G) S-pair with a common factor is a monomial of Deg >= n
    bool spair_ok = true;
    for (std::size_t i = minor_count; i < basis.size(); ++i)
        for (std::size_t j = 0; j < minor_count; ++j) {
            if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
            Polynomial sp = s_polynomial(k, basis[i], basis[j]);
            spair_ok = spair_ok && sp.terms.size() == 1 &&
                       deg_weight(s, sp.leading_monomial()) >= s.n();
        }

    GroebnerBasis gb{basis, v.ok};
    std::vector<long long> counts = initial_ideal_counts(s, gb, degree_bound);
    bool counts_ok = true;
    for (int d = 0; d <= degree_bound; ++d) {
        long long expected = 0;
        for (const FineDegree& f : A_monomial_basis(s, d))
            if (f.alpha < s.n()) ++expected;
        counts_ok = counts_ok && counts[d] == expected;
    }
    (void)max_pairs;

    json rows = json::array();
    r.csv.header = {"element", "lead"};
    for (const Polynomial& g : basis) {
        json row;
        row["element"] = to_string(s, g);
        row["lead"] = to_string(s, g.leading_monomial());
        rows.push_back(row);
        r.csv.rows.push_back({to_string(s, g), to_string(s, g.leading_monomial())});
        r.table_lines.push_back(to_string(s, g) + "  (lead " + to_string(s, g.leading_monomial()) + ")");
    }
    r.result["basis"] = rows;
    r.result["size"] = basis.size();
    r.result["minors"] = minor_count;
    r.result["certified"] = v.ok;
    r.result["standard_monomial_counts"] = counts;
    r.table_lines.push_back("basis size = " + std::to_string(basis.size()) +
                            " (minors " + std::to_string(minor_count) + " + generators " +
                            std::to_string(basis.size() - minor_count) + ")");
    std::string cl = "standard monomials by degree:";
    for (long long c : counts) cl += " " + std::to_string(c);
    r.table_lines.push_back(cl);
    r.checks["certified"] = v.ok;
    r.checks["spair_deg_at_least_n"] = spair_ok;
    r.checks["standard_monomials_match_A"] = counts_ok;
    return r;
}

// ---- resolve ----

Report run_resolve(const ScrollData& s, Filtration which, int degree_bound) {
    Report r;
    if (degree_bound < 0) degree_bound = 8;
    ComplexRanks total = total_resolution(s, which);
    SFineHilbert hs(s);
    HilbertTable hk = hilbert_function_K(s, degree_bound);
    bool euler_ok = true;
    for (int d = 0; d <= degree_bound && euler_ok; ++d)
        for (const FineDegree& f : A_monomial_basis(s, d)) {
            long long expected = hk.fine.count(f) ? hk.fine.at(f) : 0;
            if (total.euler_at(hs, f) != expected) {
                euler_ok = false;
                break;
            }
        }
    bool length_ok = total.length() == s.sigma_sum() + s.ell() - 2;
    bool position0_ok = which != Filtration::fine ||
                        total.modules[0].rank() ==
                            static_cast<long long>(generating_set_L(s).size());

    json positions = json::array();
    r.csv.header = {"position", "rank", "shift"};
    for (std::size_t p = 0; p < total.modules.size(); ++p) {
        json pos;
        pos["position"] = p;
        pos["rank"] = total.modules[p].rank();
        json shifts = json::array();
        for (const FineDegree& f : total.modules[p].shifts) {
            shifts.push_back(fdeg_json(f));
            r.csv.rows.push_back({std::to_string(p), std::to_string(total.modules[p].rank()),
                                  to_string(f)});
        }
        pos["shifts"] = shifts;
        positions.push_back(pos);
        std::string line = "position " + std::to_string(p) + ": rank " +
                           std::to_string(total.modules[p].rank()) + ", shifts";
        for (const FineDegree& f : total.modules[p].shifts) line += " " + to_string(f);
        r.table_lines.push_back(line);
    }
    r.result["filtration"] = which == Filtration::fine ? "fine" : "coarse";
    r.result["positions"] = positions;
    r.result["length"] = total.length();
    json factors = json::array();
    for (const FactorDescriptor& d : filtration(s, which)) {
        json fd;
        fd["tuple"] = d.tuple.a;
        fd["f"] = d.tuple.f;
        fd["r"] = d.tuple.r;
        fd["kind"] = d.kind == FactorKind::symmetric_power ? "symmetric_power" : "first_row";
        if (d.kind == FactorKind::first_row) fd["j"] = d.j_index;
        fd["shift"] = fdeg_json(d.shift);
        factors.push_back(fd);
    }
    r.result["factors"] = factors;
    r.checks["euler_matches_hilbert"] = euler_ok;
    r.checks["length_is_sigma_sum_plus_ell_minus_2"] = length_ok;
    r.checks["position0_rank_is_L"] = position0_ok;
    return r;
}

// ---- betti / reg ----

Report run_betti(const ScrollData& s, int degree_bound) {
    Report r;
    BettiTable t = koszul_betti(s, degree_bound);
    if (!t.complete)
        throw domain_error("betti: oracle table incomplete at degree bound " +
                           std::to_string(t.degree_bound));
    BettiInvariants inv = invariants_from_betti(t, s);

    std::map<int, long long> census;
    for (const Monomial& m : generating_set_L(s)) census[m.total_degree()] += 1;
    std::map<int, long long> beta0;
    for (const auto& [key, v] : t.by_degree)
        if (key.first == 0) beta0[key.second] += v;
    bool census_ok = beta0 == census;

    json rows = json::array();
    r.csv.header = {"i", "degree", "beta"};
    for (const auto& [key, v] : t.by_degree) {
        rows.push_back(json{{"i", key.first}, {"degree", key.second}, {"beta", v}});
        r.csv.rows.push_back({std::to_string(key.first), std::to_string(key.second),
                              std::to_string(v)});
        r.table_lines.push_back("beta(" + std::to_string(key.first) + ", " +
                                std::to_string(key.second) + ") = " + std::to_string(v));
    }
    r.result["betti"] = rows;
    r.result["degree_bound"] = t.degree_bound;
    r.result["pd"] = inv.pd;
    r.result["depth"] = inv.depth;
    r.result["reg"] = inv.reg;
    r.result["pd_formula"] = inv.pd_expected;
    r.result["reg_formula"] = inv.reg_expected;
    r.table_lines.push_back("pd = " + std::to_string(inv.pd) + ", depth = " +
                            std::to_string(inv.depth) + ", reg = " + std::to_string(inv.reg));
    r.checks["complete"] = t.complete;
    r.checks["pd_matches_formula"] = inv.pd == inv.pd_expected;
    r.checks["depth_is_2"] = inv.depth == inv.depth_expected;
    r.checks["reg_matches_formula"] = inv.reg == inv.reg_expected;
    r.checks["beta0_census_matches_L"] = census_ok;
    return r;
}

Report run_reg(const ScrollData& s, int degree_bound) {
    Report r;
    BettiTable t = koszul_betti(s, degree_bound);
    if (!t.complete)
        throw domain_error("reg: oracle table incomplete at degree bound " +
                           std::to_string(t.degree_bound));
    BettiInvariants inv = invariants_from_betti(t, s);
    r.result["formula"] = inv.reg_expected;
    r.result["oracle"] = inv.reg;
    r.csv.header = {"formula", "oracle"};
    r.csv.rows.push_back({std::to_string(inv.reg_expected), std::to_string(inv.reg)});
    r.table_lines.push_back("regularity: formula " + std::to_string(inv.reg_expected) +
                            ", oracle " + std::to_string(inv.reg));
    r.checks["match"] = inv.reg == inv.reg_expected;
    return r;
}

// ---- hilbert ----

Report run_hilbert(const ScrollData& s, Filtration which, int degree_bound) {
    Report r;
    if (degree_bound < 0) degree_bound = 8;
    HilbertTable ha = hilbert_function_A(s, degree_bound);
    HilbertTable hk = hilbert_function_K(s, degree_bound);
    std::map<FineDegree, long long> sum;
    for (const FactorDescriptor& d : filtration(s, which))
        for (const auto& [f, v] : hilbert_function_factor(s, d, degree_bound).fine) sum[f] += v;
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    bool cross_ok = sum == hk.fine;

    r.csv.header = {"degree", "dim_A", "dim_K"};
    json rows = json::array();
    for (int d = 0; d <= degree_bound; ++d) {
        rows.push_back(json{{"degree", d}, {"dim_A", ha.total[d]}, {"dim_K", hk.total[d]}});
        r.csv.rows.push_back({std::to_string(d), std::to_string(ha.total[d]),
                              std::to_string(hk.total[d])});
        r.table_lines.push_back("degree " + std::to_string(d) + ": dim A = " +
                                std::to_string(ha.total[d]) + ", dim K^(n) = " +
                                std::to_string(hk.total[d]));
    }
    r.result["table"] = rows;
    r.result["filtration"] = which == Filtration::fine ? "fine" : "coarse";
    r.checks["factor_sum_matches"] = cross_ok;
    return r;
}

// ---- rees ----

Report run_rees(const ScrollData& s) {
    Report r;
    std::vector<ReesGenerator> gens = rees_generating_set(s);
    bool membership_ok = true;
    json gen_rows = json::array();
    for (const ReesGenerator& g : gens) {
        membership_ok = membership_ok && s.sigma(g.var.block) + 1 - g.var.slot >= g.power;
        gen_rows.push_back(json{{"variable", to_string(g.var)}, {"power", g.power}});
    }
    bool usum_ok = true, product_ok = true;
    json fact_rows = json::array();
    r.csv.header = {"generator", "factorization", "u_sum"};
    for (const LGenerator& g : l_generators(s)) {
        ReesFactorization f = factor_over_S(s, g);
        usum_ok = usum_ok && f.u_sum() == s.n();
        product_ok = product_ok && f.product(s) == g.mono;
        std::string text;
        for (const ReesFactor& factor : f.factors) {
            if (!text.empty()) text += " * ";
            text += "(" + to_string(factor.gen) + ")";
            if (factor.multiplicity > 1) text += "^" + std::to_string(factor.multiplicity);
        }
        fact_rows.push_back(json{{"generator", to_string(s, g.mono)},
                                 {"factorization", text},
                                 {"u_sum", f.u_sum()}});
        r.csv.rows.push_back({to_string(s, g.mono), text, std::to_string(f.u_sum())});
        r.table_lines.push_back(to_string(s, g.mono) + " = " + text);
    }
    r.result["generators"] = gen_rows;
    r.result["generator_count"] = gens.size();
    r.result["factorizations"] = fact_rows;
    r.table_lines.push_back("|S| = " + std::to_string(gens.size()));
    r.checks["u_sums_equal_n"] = usum_ok;
    r.checks["products_match"] = product_ok;
    r.checks["powers_within_deg"] = membership_ok;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisorial ideals on rational normal scrolls"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    for (const std::string& name :
         {"gens", "gb", "resolve", "betti", "reg", "hilbert", "rees"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--sigma", opt.sigma_text, "block widths, e.g. 2,1")->required();
        sub->add_option("-n,--power", opt.n, "symbolic power, n >= 2")->required();
        sub->add_option("--prime", opt.prime, "coefficient prime");
        sub->add_option("--degree-bound", opt.degree_bound, "degree bound for tables");
        sub->add_option("--filtration", opt.filtration, "fine | coarse")
            ->check(CLI::IsMember({"fine", "coarse"}));
        sub->add_option("--format", opt.format, "json | csv | table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--max-pairs", opt.max_pairs, "pair reduction budget");
        sub->callback([&command, name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        ScrollData s = make_scroll(opt);
        Filtration which = opt.filtration == "coarse" ? Filtration::coarse : Filtration::fine;
        Report r;
        if (command == "gens") r = run_gens(s);
        else if (command == "gb") r = run_gb(s, opt.degree_bound, opt.max_pairs);
        else if (command == "resolve") r = run_resolve(s, which, opt.degree_bound);
        else if (command == "betti") r = run_betti(s, opt.degree_bound);
        else if (command == "reg") r = run_reg(s, opt.degree_bound);
        else if (command == "hilbert") r = run_hilbert(s, which, opt.degree_bound);
        else r = run_rees(s);
        return emit(opt, s, r);
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    }
}
