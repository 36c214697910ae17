// Command line front end: instance generation, feasibility checking with
// witnesses, the brute-force popularity oracle, structure censuses, bound
// evaluation, Monte Carlo sweeps and threshold search.
//
// Exit codes: 0 success, 2 invalid input, 3 cap/divergence errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpm/experiment.hpp"
#include "wpm/io.hpp"
#include "wpm/popularity.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitInvalid = 2;
constexpr int kExitCapOrDivergence = 3;

wpm::BigRat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return wpm::BigRat(wpm::BigInt(text));
        return wpm::BigRat(wpm::BigInt(text.substr(0, slash)),
                           wpm::BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw wpm::InvalidParams("cannot parse rational '" + text + "' (use P or P/Q)");
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wpm::InvalidParams("cannot open output file: " + path);
    out << text;
}

wpm::ReducedInstance load_reduced(const std::string& path) {
    wpm::AnyInstance any = wpm::read_instance(path);
    wpm::ReducedInstance r = std::holds_alternative<wpm::FullInstance>(any)
                                 ? wpm::reduce(std::get<wpm::FullInstance>(any))
                                 : std::get<wpm::ReducedInstance>(any);
    const auto violations = wpm::validate(r);
    if (!violations.empty()) {
        std::string msg = "instance violates invariants:";
        for (const auto& v : violations) msg += "\n  " + v.what;
        throw wpm::InvalidParams(msg);
    }
    return r;
}

ordered_json witness_json(const wpm::Witness& w) {
    ordered_json j;
    j["kind"] = wpm::witness_kind_name(w.kind);
    j["vertices"] = w.all_vertices();
    j["edges"] = w.all_edges();
    return j;
}

void emit_exact(ordered_json& j, const char* key, const wpm::BigRat& v) {
    j[key] = wpm::rat_str(v);
    j[std::string(key) + "_dec"] = wpm::rat_double(v);
}

void emit_exact_opt(ordered_json& j, const char* key, const std::optional<wpm::BigRat>& v) {
    if (v) {
        emit_exact(j, key, *v);
    } else {
        j[key] = nullptr;
        j[std::string(key) + "_dec"] = nullptr;
    }
}

int cmd_gen(int n1, int n2, int m, std::uint64_t seed, const std::string& kind,
            const std::string& out, std::int64_t w1, std::int64_t w2) {
    const wpm::WeightConfig weights{w1, w2};
    if (kind == "full")
        wpm::write_instance(out, wpm::gen_full(n1, n2, m, seed, weights));
    else
        wpm::write_instance(out, wpm::gen_reduced(n1, n2, m, seed, weights));
    return 0;
}

int cmd_check(const std::string& in, const std::string& dot_path) {
    const wpm::ReducedInstance r = load_reduced(in);
    const wpm::FsGraph g = wpm::FsGraph::build(r);
    if (!dot_path.empty()) write_file(dot_path, wpm::to_dot(g));

    ordered_json j;
    const auto orientation = wpm::solve_orientation(g);
    j["feasible"] = orientation.has_value();
    if (orientation) {
        const wpm::Matching mt = wpm::to_matching(*orientation, r);
        std::vector<int> flat = mt.a1;
        flat.insert(flat.end(), mt.a2.begin(), mt.a2.end());
        j["matching"] = flat;
        j["witness"] = nullptr;
    } else {
        j["matching"] = nullptr;
        const auto w = wpm::find_witness(g);
        j["witness"] = w ? witness_json(*w) : ordered_json(nullptr);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_oracle(const std::string& in, std::uint64_t cap) {
    const wpm::AnyInstance any = wpm::read_instance(in);
    if (!std::holds_alternative<wpm::FullInstance>(any))
        throw wpm::InvalidParams("oracle needs a full instance (kind=\"full\")");
    const auto& full = std::get<wpm::FullInstance>(any);
    const wpm::PopularSearch res = wpm::find_popular(full, cap);

    ordered_json j;
    j["popular_exists"] = res.first.has_value();
    j["matching"] = res.first ? ordered_json(*res.first) : ordered_json(nullptr);
    j["popular_count"] = res.popular_count;
    j["matchings_enumerated"] = res.enumerated;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_census(const std::string& in) {
    const wpm::ReducedInstance r = load_reduced(in);
    const wpm::CensusReport rep = wpm::census(r);

    ordered_json j;
    j["z_g1prime"] = rep.z_g1prime;
    j["component_counts"] = {{"tree", rep.tree_components},
                             {"unicyclic", rep.unicyclic_components},
                             {"multicyclic", rep.multicyclic_components}};
    j["cycle_lengths"] = rep.cycle_lengths;
    j["unresolved_cycles"] = rep.unresolved_cycles;
    j["has_cycle"] = rep.has_cycle;
    j["witness_kind"] = rep.witness_kind ? wpm::witness_kind_name(*rep.witness_kind) : "none";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_bounds(std::int64_t n1, std::int64_t n2, std::int64_t m, const std::string& c_text) {
    std::optional<wpm::BigRat> c;
    if (c_text != "auto") c = parse_rational(c_text);
    const wpm::AnalyticBounds b = wpm::analytic_bounds(n1, n2, m, c);

    ordered_json j;
    j["n1"] = n1;
    j["n2"] = n2;
    j["m"] = m;
    emit_exact(j, "c", b.c);
    emit_exact(j, "delta", b.delta);
    j["t_size"] = b.t_size.str();
    emit_exact(j, "ez_low", b.ez_low);
    emit_exact(j, "ez_high", b.ez_high);
    emit_exact(j, "var_high", b.var_high);
    emit_exact_opt(j, "cheby_pr_z0", b.cheby);
    emit_exact_opt(j, "cycle_pr", b.cycle);
    emit_exact_opt(j, "path_pr", b.path);
    std::cout << j.dump(2) << "\n";

    if (!b.cycle || !b.path) {
        std::cerr << "bounds: cycle_pr/path_pr diverge (c^2 n / m >= 1)\n";
        return kExitCapOrDivergence;
    }
    return 0;
}

int cmd_sweep(int n1, int n2, const std::string& m_list, int trials, std::uint64_t seed,
              int jobs, const std::string& out, bool with_json, const std::string& c_text) {
    std::vector<int> ms;
    std::stringstream ss(m_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            ms.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw wpm::InvalidParams("bad m value '" + tok + "' in --m-list");
        }
    }
    wpm::TrialConfig base;
    base.n1 = n1;
    base.n2 = n2;
    base.trials = trials;
    base.seed = seed;
    base.jobs = jobs;
    if (c_text != "auto") base.c = parse_rational(c_text);

    const wpm::SweepResult result = wpm::sweep(ms, base);
    write_file(out, wpm::sweep_csv(result.records));
    if (with_json) write_file(out + ".json", wpm::sweep_json(result));
    for (const auto& err : result.point_errors)
        std::cerr << "sweep: m=" << err.m << ": " << err.message << "\n";
    return 0;
}

int cmd_threshold(int n1, int n2, int trials, std::uint64_t seed, double target, int jobs) {
    const wpm::ThresholdResult res = wpm::threshold_search(n1, n2, trials, seed, target, jobs);
    ordered_json j;
    j["found"] = res.found;
    j["m_star"] = res.found ? ordered_json(res.m_star) : ordered_json(nullptr);
    j["bracket_lo"] = res.found ? ordered_json(res.bracket_lo) : ordered_json(nullptr);
    j["bracket_hi"] = res.found ? ordered_json(res.bracket_hi) : ordered_json(nullptr);
    j["p_lo"] = res.p_lo;
    j["p_hi"] = res.p_hi;
    std::cout << j.dump(2) << "\n";
    if (!res.found) {
        std::cerr << "threshold: p_hat < target up to the schedule cap m = n^3\n";
        return kExitCapOrDivergence;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-weighted popular matchings: solver, oracle and experiment harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    int g_n1, g_n2, g_m;
    std::uint64_t g_seed;
    std::string g_kind, g_out;
    std::int64_t g_w1 = 2, g_w2 = 1;
    gen->add_option("--n1", g_n1)->required();
    gen->add_option("--n2", g_n2)->required();
    gen->add_option("--m", g_m)->required();
    gen->add_option("--seed", g_seed)->required();
    gen->add_option("--kind", g_kind)->required()->check(CLI::IsMember({"full", "reduced"}));
    gen->add_option("--out", g_out)->required();
    gen->add_option("--w1", g_w1);
    gen->add_option("--w2", g_w2);

    // check
    auto* check = app.add_subcommand("check", "decide and certify a well-formed matching");
    std::string c_in, c_dot;
    check->add_option("--in", c_in)->required();
    check->add_option("--dot", c_dot, "write the fs-relation graph as DOT");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force popularity oracle");
    std::string o_in;
    std::uint64_t o_cap = wpm::kDefaultEnumCap;
    oracle->add_option("--in", o_in)->required();
    oracle->add_option("--cap", o_cap);

    // census
    auto* census = app.add_subcommand("census", "count bad-pattern structures");
    std::string s_in;
    census->add_option("--in", s_in)->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the analytic bound formulas");
    std::int64_t b_n1, b_n2, b_m;
    std::string b_c = "auto";
    bounds->add_option("--n1", b_n1)->required();
    bounds->add_option("--n2", b_n2)->required();
    bounds->add_option("--m", b_m)->required();
    bounds->add_option("--c", b_c, "auto or an exact rational P/Q");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over m, CSV output");
    int w_n1, w_n2, w_trials, w_jobs = 1;
    std::uint64_t w_seed;
    std::string w_mlist, w_out, w_c = "auto";
    bool w_json = false;
    sweep->add_option("--n1", w_n1)->required();
    sweep->add_option("--n2", w_n2)->required();
    sweep->add_option("--m-list", w_mlist)->required();
    sweep->add_option("--trials", w_trials)->required();
    sweep->add_option("--seed", w_seed)->required();
    sweep->add_option("--jobs", w_jobs);
    sweep->add_option("--out", w_out)->required();
    sweep->add_option("--c", w_c);
    sweep->add_flag("--json", w_json, "also write <out>.json with exact rationals");

    // threshold
    auto* threshold = app.add_subcommand("threshold", "search the p_hat >= target frontier");
    int t_n1, t_n2, t_trials, t_jobs = 1;
    std::uint64_t t_seed;
    double t_target = 0.5;
    threshold->add_option("--n1", t_n1)->required();
    threshold->add_option("--n2", t_n2)->required();
    threshold->add_option("--trials", t_trials)->required();
    threshold->add_option("--seed", t_seed)->required();
    threshold->add_option("--target", t_target);
    threshold->add_option("--jobs", t_jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (gen->parsed()) return cmd_gen(g_n1, g_n2, g_m, g_seed, g_kind, g_out, g_w1, g_w2);
        if (check->parsed()) return cmd_check(c_in, c_dot);
        if (oracle->parsed()) return cmd_oracle(o_in, o_cap);
        if (census->parsed()) return cmd_census(s_in);
        if (bounds->parsed()) return cmd_bounds(b_n1, b_n2, b_m, b_c);
        if (sweep->parsed())
            return cmd_sweep(w_n1, w_n2, w_mlist, w_trials, w_seed, w_jobs, w_out, w_json, w_c);
        if (threshold->parsed())
            return cmd_threshold(t_n1, t_n2, t_trials, t_seed, t_target, t_jobs);
    } catch (const wpm::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapOrDivergence;
    } catch (const wpm::Divergent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapOrDivergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}
