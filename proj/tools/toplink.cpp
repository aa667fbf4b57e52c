// Command line front end. Every verdict printed here is decided by the exact
// routines in the library; doubles only ever appear in display fields.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toplink/json_io.hpp"

namespace {

using namespace toplink;

json read_json_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return json::parse(in);
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " must be an unsigned integer");
    }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---- bound ------------------------------------------------------------------

struct BoundArgs {
    unsigned d = 1;
    unsigned r = 0; // 0: take r from variant
    std::string variant = "embeddable";
    std::string c1; // rational; empty = default 4 r^2
    bool json_out = false;
};

int run_bound(const BoundArgs& a) {
    const unsigned r = a.r != 0 ? a.r
                       : a.variant == "linkless" ? 4u
                                                 : 3u;
    if (r < 2) throw std::invalid_argument("bound: r must be >= 2");
    const Rat expo = face_count_exponent(a.d, r);
    const bool c1_assumed = a.c1.empty();
    const Rat c1 = c1_assumed ? Rat(4) * Rat(r) * Rat(r) : parse_rational(a.c1);
    const auto chain = constant_chain(c1, r, a.d);

    if (a.json_out) {
        json consts = json::array();
        for (std::size_t k = 0; k < chain.size(); ++k)
            consts.push_back(json{{"k", k + 1},
                                  {"symbolic", chain[k].to_string()},
                                  {"approx", chain[k].to_double()}});
        emit(json{{"d", a.d},
                  {"r", r},
                  {"exponent", rational_string(expo, false)},
                  {"c1_assumed", c1_assumed},
                  {"constants", consts}});
        return 0;
    }
    std::cout << rational_string(expo, false) << "\n";
    if (c1_assumed)
        std::cout << "# C_1 = 4 r^2 = " << rational_string(c1, false)
                  << " (assumed start of the recursion)\n";
    for (std::size_t k = 0; k < chain.size(); ++k)
        std::cout << "C_" << (k + 1) << " = " << chain[k].to_string() << " (~"
                  << chain[k].to_double() << ")\n";
    return 0;
}

// ---- fuzz -------------------------------------------------------------------

struct FuzzArgs {
    std::string mode = "random";
    unsigned m = 4;
    unsigned a = 8;
    std::vector<unsigned> r_values;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    bool json_out = false;
};

int run_fuzz_cmd(const FuzzArgs& a, unsigned checks) {
    FuzzConfig cfg;
    cfg.mode = a.mode == "exhaustive" ? FuzzMode::exhaustive : FuzzMode::random_trials;
    cfg.m_max = a.m;
    cfg.a_max = a.a;
    if (!a.r_values.empty()) cfg.r_values = a.r_values;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.checks = checks;
    const FuzzSummary sum = run_fuzz(cfg);
    if (a.json_out) {
        emit(to_json(sum));
    } else {
        std::cout << "systems " << sum.systems << "\n"
                  << "checks " << sum.checks_run << "\n"
                  << "violations " << sum.violation_count << "\n";
        if (sum.minimal)
            std::cout << "minimal " << to_json(*sum.minimal).dump() << "\n";
    }
    return sum.violation_count == 0 ? 0 : 1;
}

// ---- identities ---------------------------------------------------------------

int run_identities(const std::string& input, unsigned r, bool json_out) {
    const SetSystem sys = set_system_from_json(read_json_input(input));
    const ChainIdentityReport rep = chain_identities(sys, r);
    const bool ok = rep.identity_holds && rep.power_mean_holds && rep.binom_power_holds;
    if (json_out) {
        emit(to_json(rep));
    } else {
        std::cout << "double_count " << (rep.identity_holds ? "ok" : "FAIL") << " ("
                  << rep.binom_degree_sum << " vs " << rep.unordered_intersection_sum
                  << ")\n"
                  << "power_mean " << (rep.power_mean_holds ? "ok" : "FAIL") << " ("
                  << rep.filtered_sum_pow << " <= " << rep.filtered_power_bound << ")\n"
                  << "binom_power " << (rep.binom_power_holds ? "ok" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

// ---- complex group -------------------------------------------------------------

int run_find_pattern(const std::string& host_path, const std::string& pattern_path,
                     const SearchLimits& limits, bool json_out) {
    const SimplicialComplex host = complex_from_json(read_json_input(host_path));
    const SimplicialComplex pattern = complex_from_json(read_json_input(pattern_path));
    const auto w = contains_subcomplex_isomorphic(host, pattern, limits);
    if (!w) {
        std::cout << (json_out ? "null" : "not found") << "\n";
        return 1;
    }
    if (json_out) {
        emit(to_json(*w));
    } else {
        std::cout << "found";
        for (std::size_t i = 0; i < w->vertex_map.size(); ++i)
            std::cout << " " << i << "->" << w->vertex_map[i];
        std::cout << "\n";
    }
    return 0;
}

int run_find_homeomorph(const std::string& host_path, const std::string& pattern_path,
                        const SearchLimits& limits, bool json_out) {
    const SimplicialComplex host = complex_from_json(read_json_input(host_path));
    const SimplicialComplex pattern = complex_from_json(read_json_input(pattern_path));
    const auto w = contains_graph_homeomorph(host, pattern, limits);
    if (!w) {
        std::cout << (json_out ? "null" : "not found") << "\n";
        return 1;
    }
    if (json_out) {
        emit(to_json(*w));
    } else {
        std::cout << "found branch";
        for (std::size_t i = 0; i < w->branch_map.size(); ++i)
            std::cout << " " << i << "->" << w->branch_map[i];
        std::cout << "\n";
        for (const auto& path : w->edge_paths) {
            std::cout << "path";
            for (int v : path) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- probe ---------------------------------------------------------------------

int run_probe(const std::string& input, unsigned r, std::uint64_t budget,
              std::uint64_t seed, bool json_out) {
    const SimplicialComplex K = complex_from_json(read_json_input(input));
    ProbeConfig cfg;
    cfg.tuple_budget = budget;
    cfg.seed = seed;
    const ProbeReport rep = inductive_step_probe(K, r, cfg);
    if (json_out) {
        emit(to_json(rep));
    } else {
        std::cout << "d " << rep.d << "\nr " << rep.r << "\nm " << rep.vertex_count
                  << "\na " << rep.ground_size << "\ntotal " << rep.total << "\ns "
                  << rep.s_value << (rep.exhaustive ? "" : " (sampled)") << "\nbound "
                  << rep.bound << "\nholds " << (rep.holds ? "yes" : "NO") << "\n";
    }
    return rep.holds ? 0 : 1;
}

// ---- linking ---------------------------------------------------------------------

int run_lk(const std::string& first, const std::string& second, const std::string& method,
           int retries, bool json_out) {
    if (first == "-" && second == "-")
        throw std::invalid_argument("lk: at most one curve can come from stdin");
    const PolygonalCurve f = curve_from_json(read_json_input(first));
    const PolygonalCurve g = curve_from_json(read_json_input(second));
    LinkingOptions opts;
    opts.retry_budget = retries;

    std::optional<long long> cone, crossings;
    if (method == "cone" || method == "both") cone = linking_number_cone(f, g, opts);
    if (method == "crossings" || method == "both")
        crossings = linking_number_crossings(f, g, opts);
    if (cone && crossings && *cone != *crossings)
        throw std::runtime_error("internal error: methods disagree (" +
                                 std::to_string(*cone) + " vs " +
                                 std::to_string(*crossings) + ")");
    const long long lk = cone ? *cone : *crossings;

    if (json_out) {
        json j{{"lk", lk}, {"method", method}};
        if (cone) j["cone"] = *cone;
        if (crossings) j["crossings"] = *crossings;
        emit(j);
    } else {
        if (cone) std::cout << "cone " << *cone << "\n";
        if (crossings) std::cout << "crossings " << *crossings << "\n";
        std::cout << "lk " << lk << "\n";
    }
    return 0;
}

int run_linkless(const std::string& input, const std::string& method,
                 std::uint64_t cap_pairs, int retries, bool json_out) {
    const SpatialEmbedding emb = embedding_from_json(read_json_input(input));
    LinklessOptions opts;
    opts.linking.retry_budget = retries;
    opts.max_pairs = cap_pairs;
    opts.use_crossings = method == "crossings";
    const LinklessReport rep = is_linkless(emb, opts);
    if (json_out) {
        emit(to_json(rep));
    } else {
        const char* status = rep.status == LinklessStatus::all_zero ? "all_zero"
                             : rep.status == LinklessStatus::witness_found
                                 ? "witness_found"
                                 : "inconclusive";
        std::cout << "status " << status << "\npairs_checked " << rep.pairs_checked
                  << "\n";
        if (rep.status == LinklessStatus::witness_found) {
            std::cout << "cycle_a";
            for (int v : rep.witness_cycle_a) std::cout << " " << v;
            std::cout << "\ncycle_b";
            for (int v : rep.witness_cycle_b) std::cout << " " << v;
            std::cout << "\nlk " << rep.witness_linking << "\n";
        }
    }
    return rep.status == LinklessStatus::all_zero ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of set systems, complexes and linked embeddings"};
    app.require_subcommand(1);

    const auto default_retries =
        static_cast<int>(env_u64("TOPLINK_CAP_RETRIES", 64));
    const auto default_pairs = env_u64("TOPLINK_CAP_PAIRS", std::uint64_t{1} << 20);
    const auto default_tuples = env_u64("TOPLINK_CAP_TUPLES", 1'000'000);
    const auto default_steps = env_u64("TOPLINK_CAP_STEPS", 100'000'000);

    // bound
    BoundArgs bound;
    auto* sc_bound = app.add_subcommand("bound", "face count exponent and constants");
    sc_bound->add_option("-d,--dimension", bound.d, "complex dimension")->required();
    sc_bound->add_option("-r,--arity", bound.r, "intersection arity (overrides variant)");
    sc_bound->add_option("--variant", bound.variant, "embeddable (r=3) or linkless (r=4)")
        ->check(CLI::IsMember({"embeddable", "linkless"}));
    sc_bound->add_option("--c1", bound.c1, "starting constant as a rational");
    sc_bound->add_flag("--json", bound.json_out, "JSON output");

    // fuzz-kst / fuzz-powermean
    FuzzArgs fz_kst, fz_pm;
    const auto add_fuzz_opts = [](CLI::App* sc, FuzzArgs& a) {
        sc->add_option("--mode", a.mode, "exhaustive or random")
            ->check(CLI::IsMember({"exhaustive", "random"}));
        sc->add_option("-m", a.m, "max number of subsets");
        sc->add_option("-a", a.a, "max ground size");
        sc->add_option("-r", a.r_values, "intersection arities");
        sc->add_option("--trials", a.trials, "random trials");
        sc->add_option("--seed", a.seed, "random seed");
        sc->add_flag("--json", a.json_out, "JSON output");
    };
    auto* sc_fkst = app.add_subcommand("fuzz-kst", "fuzz the intersection bound");
    add_fuzz_opts(sc_fkst, fz_kst);
    auto* sc_fpm = app.add_subcommand("fuzz-powermean", "fuzz the power mean inequality");
    add_fuzz_opts(sc_fpm, fz_pm);

    // identities
    std::string id_input = "-";
    unsigned id_r = 2;
    bool id_json = false;
    auto* sc_id = app.add_subcommand("identities", "check the double counting chain");
    sc_id->add_option("input", id_input, "set system JSON file or -");
    sc_id->add_option("-r", id_r, "intersection arity")->required();
    sc_id->add_flag("--json", id_json, "JSON output");

    // complex group
    auto* sc_cx = app.add_subcommand("complex", "operations on simplicial complexes");
    sc_cx->require_subcommand(1);

    std::string cx_a, cx_b;
    auto* sc_join = sc_cx->add_subcommand("join", "join of two complexes");
    sc_join->add_option("first", cx_a)->required();
    sc_join->add_option("second", cx_b)->required();

    int pw_r = 3, pw_p = 2;
    auto* sc_power = sc_cx->add_subcommand("power", "join power of a discrete set");
    sc_power->add_option("-r,--points", pw_r, "points per factor")->required();
    sc_power->add_option("-p,--factors", pw_p, "number of factors")->required();

    std::string lk_input = "-";
    std::vector<std::string> lk_vertices;
    auto* sc_link = sc_cx->add_subcommand("link", "link of one vertex");
    sc_link->add_option("input", lk_input);
    sc_link->add_option("-v,--vertex", lk_vertices, "vertex label")->required();

    std::string li_input = "-";
    std::vector<std::string> li_vertices;
    auto* sc_li = sc_cx->add_subcommand("link-intersect", "intersection of vertex links");
    sc_li->add_option("input", li_input);
    sc_li->add_option("-v,--vertex", li_vertices, "vertex labels")->required();

    std::string fv_input = "-";
    bool fv_json = false;
    auto* sc_fv = sc_cx->add_subcommand("fvector", "face counts by dimension");
    sc_fv->add_option("input", fv_input);
    sc_fv->add_flag("--json", fv_json, "JSON output");

    std::string fp_host, fp_pattern, fh_host, fh_pattern;
    bool fp_json = false, fh_json = false;
    SearchLimits fp_limits, fh_limits;
    fp_limits.max_steps = default_steps;
    fh_limits.max_steps = default_steps;
    auto* sc_fp = sc_cx->add_subcommand("find-pattern", "subcomplex isomorphic to a pattern");
    sc_fp->add_option("--host", fp_host)->required();
    sc_fp->add_option("--pattern", fp_pattern)->required();
    sc_fp->add_option("--max-steps", fp_limits.max_steps);
    sc_fp->add_flag("--json", fp_json, "JSON output");
    auto* sc_fh = sc_cx->add_subcommand("find-homeomorph", "subdivided copy of a graph");
    sc_fh->add_option("--host", fh_host)->required();
    sc_fh->add_option("--pattern", fh_pattern)->required();
    sc_fh->add_option("--max-steps", fh_limits.max_steps);
    sc_fh->add_flag("--json", fh_json, "JSON output");

    // probe-inductive
    std::string pr_input = "-";
    unsigned pr_r = 3;
    std::uint64_t pr_budget = default_tuples, pr_seed = 0;
    bool pr_json = false;
    auto* sc_pr = app.add_subcommand("probe-inductive", "check one inductive step on a complex");
    sc_pr->add_option("input", pr_input, "complex JSON file or -");
    sc_pr->add_option("-r", pr_r, "intersection arity")->required();
    sc_pr->add_option("--cap-tuples", pr_budget, "exhaustive tuple budget");
    sc_pr->add_option("--seed", pr_seed, "sampling seed");
    sc_pr->add_flag("--json", pr_json, "JSON output");

    // lk
    std::string lkA, lkB, lk_method = "both";
    int lk_retries = default_retries;
    bool lk_json = false;
    auto* sc_lk = app.add_subcommand("lk", "linking number of two closed curves");
    sc_lk->add_option("first", lkA, "curve JSON file or -")->required();
    sc_lk->add_option("second", lkB, "curve JSON file or -")->required();
    sc_lk->add_option("--method", lk_method)->check(CLI::IsMember({"cone", "crossings", "both"}));
    sc_lk->add_option("--cap-retries", lk_retries, "general position retries");
    sc_lk->add_flag("--json", lk_json, "JSON output");

    // linkless
    std::string ll_input = "-", ll_method = "cone";
    std::uint64_t ll_pairs = default_pairs;
    int ll_retries = default_retries;
    bool ll_json = false;
    auto* sc_ll = app.add_subcommand("linkless", "search disjoint cycle pairs for links");
    sc_ll->add_option("input", ll_input, "embedding JSON file or -");
    sc_ll->add_option("--method", ll_method)->check(CLI::IsMember({"cone", "crossings"}));
    sc_ll->add_option("--cap-pairs", ll_pairs, "max cycle pairs to test");
    sc_ll->add_option("--cap-retries", ll_retries, "general position retries");
    sc_ll->add_flag("--json", ll_json, "JSON output");

    try {
        app.parse(argc, argv);

        if (*sc_bound) return run_bound(bound);
        if (*sc_fkst) return run_fuzz_cmd(fz_kst, check_kst);
        if (*sc_fpm) return run_fuzz_cmd(fz_pm, check_power_mean | check_atoms);
        if (*sc_id) return run_identities(id_input, id_r, id_json);
        if (*sc_join) {
            const auto K = complex_from_json(read_json_input(cx_a));
            const auto L = complex_from_json(read_json_input(cx_b));
            emit(to_json(join(K, L)));
            return 0;
        }
        if (*sc_power) {
            emit(to_json(join_power(pw_r, pw_p)));
            return 0;
        }
        if (*sc_link) {
            const auto K = complex_from_json(read_json_input(lk_input));
            if (lk_vertices.size() != 1)
                throw std::invalid_argument("link: exactly one vertex");
            emit(to_json(vertex_link(K, lk_vertices[0])));
            return 0;
        }
        if (*sc_li) {
            const auto K = complex_from_json(read_json_input(li_input));
            std::vector<int> vs;
            for (const auto& lbl : li_vertices) {
                const int v = K.index_of(lbl);
                if (v < 0) throw std::invalid_argument("unknown vertex '" + lbl + "'");
                vs.push_back(v);
            }
            emit(to_json(link_intersection(K, vs)));
            return 0;
        }
        if (*sc_fv) {
            const auto K = complex_from_json(read_json_input(fv_input));
            const auto fv = K.f_vector();
            if (fv_json) {
                emit(json(fv));
            } else {
                for (std::size_t i = 0; i < fv.size(); ++i)
                    std::cout << (i ? " " : "") << fv[i];
                std::cout << "\n";
            }
            return 0;
        }
        if (*sc_fp) return run_find_pattern(fp_host, fp_pattern, fp_limits, fp_json);
        if (*sc_fh) return run_find_homeomorph(fh_host, fh_pattern, fh_limits, fh_json);
        if (*sc_pr) return run_probe(pr_input, pr_r, pr_budget, pr_seed, pr_json);
        if (*sc_lk) return run_lk(lkA, lkB, lk_method, lk_retries, lk_json);
        if (*sc_ll) return run_linkless(ll_input, ll_method, ll_pairs, ll_retries, ll_json);
        return 2; // unreachable given require_subcommand
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
