#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cheb/closed_forms.hpp"
#include "cheb/coupon.hpp"
#include "cheb/engine.hpp"
#include "cheb/group.hpp"
#include "cheb/lattice.hpp"
#include "cheb/numtheory.hpp"
#include "cheb/simulation.hpp"
#include "cheb/sym_alt.hpp"

using nlohmann::json;

namespace {

json fraction_json(const cheb::Rational& r) {
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cheb::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cheb::LatticeOptions lattice_options(uint64_t cap) {
    cheb::LatticeOptions opt;
    opt.max_order = cap;
    if (const char* s = std::getenv("CHEB_MAX_SUBGROUPS")) opt.max_subgroups = std::stoull(s);
    return opt;
}

uint64_t default_cap() {
    if (const char* s = std::getenv("CHEB_MAX_ORDER")) return std::stoull(s);
    return cheb::kDefaultOrderCap;
}

cheb::GenerationProfile profile_for(const std::string& group_json,
                                    const std::string& profile_path, uint64_t cap) {
    if (!group_json.empty() && !profile_path.empty())
        throw cheb::Error("give either --group or --profile, not both");
    if (!group_json.empty()) {
        cheb::PermGroup G = cheb::build_group(cheb::parse_group_spec(group_json), cap);
        return cheb::group_profile(G, lattice_options(cap));
    }
    if (!profile_path.empty()) return cheb::profile_from_json(read_file(profile_path));
    throw cheb::Error("need --group or --profile");
}

std::vector<size_t> parse_index_list(const std::string& csv) {
    std::vector<size_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoul(item));
    if (out.empty()) throw cheb::Error("empty index list");
    return out;
}

int cmd_compute(const std::string& group_json, const std::string& profile_path, uint64_t cap,
                const std::string& partial, const std::string& pm_text) {
    cheb::GenerationProfile p = profile_for(group_json, profile_path, cap);
    cheb::Rational c = cheb::chebotarev(p), c2 = cheb::secondary(p);
    json out;
    out["order"] = p.group_order.get_str();
    out["maximal_classes"] = p.rows.size();
    out["chebotarev"] = fraction_json(c);
    out["decimal"] = cheb::significant_string(c);
    out["secondary"] = fraction_json(c2);
    out["secondary_decimal"] = cheb::significant_string(c2);
    if (!partial.empty()) {
        std::vector<size_t> M = parse_index_list(partial);
        cheb::Rational pm = pm_text.empty() ? cheb::outside_avoidance_density(p, M)
                                            : cheb::parse_rational(pm_text);
        cheb::PartialBounds b = cheb::partial_bounds(p, M, pm);
        json pj;
        pj["rows"] = M;
        pj["p_m"] = fraction_json(pm);
        pj["e1"] = fraction_json(b.e1);
        pj["e2"] = fraction_json(b.e2);
        pj["c_bounds"] = json::array({fraction_json(b.c_lo), fraction_json(b.c_hi)});
        pj["c2_bounds"] = json::array({fraction_json(b.c2_lo), fraction_json(b.c2_hi)});
        out["partial"] = std::move(pj);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

void print_invariant_rows(std::ostream& os, const std::string& key, const std::string& keyval,
                          const cheb::PermGroup& G, uint64_t cap) {
    cheb::GenerationProfile p = cheb::group_profile(G, lattice_options(cap));
    os << keyval << ',' << G.order() << ',' << cheb::significant_string(cheb::chebotarev(p))
       << ',' << cheb::significant_string(cheb::secondary(p)) << "\n";
    (void)key;
}

int cmd_tables(int table, long max_n, long max_p, uint64_t cap) {
    std::ostringstream os;
    switch (table) {
        case 1: {
            os << "n,order,c,c2\n";
            for (long n = 2; n <= (max_n > 0 ? max_n : 7); ++n)
                print_invariant_rows(os, "n", std::to_string(n), cheb::alternating_group(n, cap),
                                     cap);
            break;
        }
        case 2: {
            os << "n,E,E2\n";
            for (long n = 3; n <= (max_n > 0 ? max_n : 20); ++n) {
                auto [e1, e2] = cheb::partial_invariants(n, cheb::SymAltVariant::alt);
                os << n << ',' << cheb::significant_string(e1) << ','
                   << cheb::significant_string(e2) << "\n";
            }
            break;
        }
        case 3: {
            os << "n,order,c,c2\n";
            for (long n = 2; n <= (max_n > 0 ? max_n : 6); ++n)
                print_invariant_rows(os, "n", std::to_string(n), cheb::symmetric_group(n, cap),
                                     cap);
            break;
        }
        case 4: {
            os << "group,order,c,c2\n";
            const std::pair<const char*, long> rows[] = {
                {"Z/17", 16}, {"C8", 8}, {"C4", 4}, {"C2", 2}, {"H17", 1}};
            for (auto [name, ell] : rows)
                print_invariant_rows(os, "group", name, cheb::affine_subgroup(17, ell, cap), cap);
            break;
        }
        case 11: {
            os << "p,order,c,c2\n";
            for (long p = 2; p <= (max_p > 0 ? max_p : 5); ++p)
                if (cheb::is_prime(p))
                    print_invariant_rows(os, "p", std::to_string(p), cheb::borel3_group(p, cap),
                                         cap);
            break;
        }
        case 12: {
            os << "p,order,c,c2\n";
            for (long p = 2; p <= (max_p > 0 ? max_p : 13); ++p)
                if (cheb::is_prime(p))
                    print_invariant_rows(os, "p", std::to_string(p), cheb::psl2_group(p, cap),
                                         cap);
            break;
        }
        default:
            throw cheb::Error("unknown table id (supported: 1,2,3,4,11,12)");
    }
    std::cout << os.str();
    return 0;
}

int cmd_simulate(const std::string& group_json, uint64_t trials, uint64_t seed, bool summary,
                 uint64_t cap) {
    cheb::PermGroup G = cheb::build_group(cheb::parse_group_spec(group_json), cap);
    cheb::GenerationProfile p = cheb::group_profile(G, lattice_options(cap));
    cheb::SimConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cheb::Histogram h = cheb::empirical_chebotarev(G, p, cfg);
    if (summary) {
        double mean = h.mean.get_d();
        double var = (h.second_moment.get_d() - mean * mean) / static_cast<double>(trials);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f", std::sqrt(var > 0 ? var : 0));
        json out;
        out["mean"] = cheb::decimal_string(h.mean, 4);
        out["stderr"] = buf;
        out["trials"] = trials;
        out["seed"] = seed;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << cheb::empirical_distribution_csv(h);
    }
    return 0;
}

int cmd_coupon(const std::string& spec_path, unsigned long dist_n) {
    cheb::CouponInstance inst = cheb::coupon_from_json(read_file(spec_path));
    cheb::Rational e = cheb::expected_time(inst.mu, inst.system);
    cheb::Rational e2 = cheb::coupon_second_moment(inst.mu, inst.system);
    json out;
    out["expected"] = fraction_json(e);
    out["decimal"] = cheb::significant_string(e);
    out["second_moment"] = fraction_json(e2);
    out["second_moment_decimal"] = cheb::significant_string(e2);
    if (dist_n > 0) {
        json arr = json::array();
        for (const auto& pr : cheb::exact_distribution_dp(inst.mu, inst.system, dist_n))
            arr.push_back(fraction_json(pr));
        out["distribution"] = std::move(arr);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

json interval_json(const cheb::CertifiedValue& v) {
    json out;
    out["lower"] = fraction_json(v.lower);
    out["upper"] = fraction_json(v.upper);
    out["decimal_lower"] = cheb::decimal_string(v.lower, 15);
    out["decimal_upper"] = cheb::decimal_string(v.upper, 15);
    return out;
}

int cmd_closed_form(long cyclic_n, const std::vector<long>& elementary,
                    long affine_q, const std::string& abelian_csv, bool niven,
                    const std::string& tol_text) {
    cheb::Rational tol = cheb::parse_rational(tol_text);
    json out;
    if (cyclic_n > 0) {
        out["family"] = "cyclic";
        out["n"] = cyclic_n;
        cheb::Rational c = cheb::cheb_cyclic(cyclic_n), c2 = cheb::sec_cyclic(cyclic_n);
        out["chebotarev"] = fraction_json(c);
        out["decimal"] = cheb::significant_string(c);
        out["secondary"] = fraction_json(c2);
        out["secondary_decimal"] = cheb::significant_string(c2);
    } else if (!elementary.empty()) {
        if (elementary.size() != 2) throw cheb::Error("--elementary takes p and k");
        long p = elementary[0], k = elementary[1];
        out["family"] = "elementary_abelian";
        out["p"] = p;
        out["k"] = k;
        cheb::Rational c = cheb::cheb_elementary(p, k), c2 = cheb::sec_elementary(p, k);
        out["chebotarev"] = fraction_json(c);
        out["decimal"] = cheb::significant_string(c);
        out["secondary"] = fraction_json(c2);
        out["secondary_decimal"] = cheb::significant_string(c2);
    } else if (affine_q > 0) {
        out["family"] = "affine";
        out["q"] = affine_q;
        cheb::Rational c = cheb::cheb_affine(affine_q), c2 = cheb::sec_affine(affine_q);
        out["chebotarev"] = fraction_json(c);
        out["decimal"] = cheb::significant_string(c);
        out["secondary"] = fraction_json(c2);
        out["secondary_decimal"] = cheb::significant_string(c2);
    } else if (!abelian_csv.empty()) {
        std::vector<long> factors;
        for (size_t i : parse_index_list(abelian_csv)) factors.push_back(static_cast<long>(i));
        cheb::AbelianShape shape = cheb::AbelianShape::from_factors(factors);
        out["family"] = "abelian";
        out["factors"] = factors;
        out["chebotarev"] = interval_json(cheb::cheb_abelian(shape, tol));
        out["secondary"] = interval_json(cheb::sec_abelian(shape, tol));
    } else if (niven) {
        out["constant"] = "niven";
        out["interval"] = interval_json(cheb::niven_limit(tol));
    } else {
        throw cheb::Error("pick one of --cyclic, --elementary, --affine, --abelian, --niven");
    }
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chebotarev invariants of finite groups"};
    app.require_subcommand(1);

    uint64_t cap = default_cap();

    auto* compute = app.add_subcommand("compute", "c(G) and c2(G) for a group or profile");
    std::string group_json, profile_path, partial, pm_text;
    compute->add_option("--group", group_json, "group spec JSON");
    compute->add_option("--profile", profile_path, "generation profile JSON file");
    compute->add_option("--cap", cap, "order cap for enumeration");
    compute->add_option("--partial", partial, "comma-separated row subset M");
    compute->add_option("--pm", pm_text, "density p_M (fraction) for the partial bounds");

    auto* tables = app.add_subcommand("tables", "built-in reference tables as CSV");
    int table = 0;
    long max_n = 0, max_p = 0;
    tables->add_option("--table", table, "table id: 1,2,3,4,11,12")->required();
    tables->add_option("--max-n", max_n, "largest n");
    tables->add_option("--max-p", max_p, "largest p");
    tables->add_option("--cap", cap, "order cap for enumeration");

    auto* simulate = app.add_subcommand("simulate", "empirical waiting-time histogram");
    uint64_t trials = 10000, seed = 0;
    bool summary = false;
    std::string sim_group;
    simulate->add_option("--group", sim_group, "group spec JSON")->required();
    simulate->add_option("--trials", trials, "number of trials");
    simulate->add_option("--seed", seed, "RNG seed")->required();
    simulate->add_flag("--summary", summary, "print a JSON summary instead of the CSV");
    simulate->add_option("--cap", cap, "order cap for enumeration");

    auto* coupon = app.add_subcommand("coupon", "coupon subset collection instance");
    std::string coupon_path;
    unsigned long dist_n = 0;
    coupon->add_option("--spec", coupon_path, "coupon instance JSON file")->required();
    coupon->add_option("--dist", dist_n, "also print P(tau=n) for n<=N via the DP oracle");

    auto* closed = app.add_subcommand("closed-form", "closed formulas and certified series");
    long cyclic_n = 0, affine_q = 0;
    std::vector<long> elementary;
    std::string abelian_csv, tol_text = "1e-12";
    bool niven = false;
    closed->add_option("--cyclic", cyclic_n, "cyclic group order n");
    closed->add_option("--elementary", elementary, "p k")->expected(2);
    closed->add_option("--affine", affine_q, "prime power q");
    closed->add_option("--abelian", abelian_csv, "invariant factors, comma separated");
    closed->add_flag("--niven", niven, "the cyclic limsup constant");
    closed->add_option("--tol", tol_text, "certified interval width");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return cmd_compute(group_json, profile_path, cap, partial, pm_text);
        if (*tables) return cmd_tables(table, max_n, max_p, cap);
        if (*simulate) return cmd_simulate(sim_group, trials, seed, summary, cap);
        if (*coupon) return cmd_coupon(coupon_path, dist_n);
        if (*closed)
            return cmd_closed_form(cyclic_n, elementary, affine_q, abelian_csv, niven, tol_text);
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 1;
}
