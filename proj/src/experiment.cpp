#include "wpm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wpm/rng.hpp"

namespace wpm {

WilsonInterval wilson95(int successes, int trials) {
    if (trials < 1) throw InvalidParams("wilson95 needs trials >= 1");
    const double z = 1.959963984540054;
    const double n = trials;
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // The interval always brackets p; clamp out floating-point dust at 0/1.
    return {std::min(p, std::max(0.0, center - half)),
            std::max(p, std::min(1.0, center + half))};
}

namespace {

struct TrialOutcome {
    bool feasible = false;
    int witness = -1;  // 0=G1, 1=G2, 2=G3 when infeasible
    bool has_cycle = false;
    std::int64_t z = 0;
};

TrialOutcome run_one(int n1, int n2, int m, std::uint64_t seed) {
    const ReducedInstance r = gen_reduced(n1, n2, m, seed);
    const FsGraph g = FsGraph::build(r);
    TrialOutcome out;
    out.feasible = solve_orientation(g).has_value();
    if (!out.feasible) {
        const auto w = find_witness(g);
        out.witness = w ? static_cast<int>(w->kind) : -1;
    }
    out.z = count_g1prime(r);
    out.has_cycle = cycle_census(g).has_cycle();
    return out;
}

}  // namespace

SweepRecord run_trials(const TrialConfig& config) {
    check_gen_params(config.n1, config.n2, config.m, {});
    if (config.trials < 1) throw InvalidParams("trials must be >= 1");
    if (config.jobs < 1) throw InvalidParams("jobs must be >= 1");

    std::vector<TrialOutcome> outcomes(config.trials);
    auto work = [&](int worker, int jobs) {
        for (int i = worker; i < config.trials; i += jobs)
            outcomes[i] = run_one(config.n1, config.n2, config.m,
                                  child_seed(config.seed, static_cast<std::uint64_t>(i)));
    };
    if (config.jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(config.jobs);
        for (int w = 0; w < config.jobs; ++w) pool.emplace_back(work, w, config.jobs);
        for (auto& t : pool) t.join();
    }

    SweepRecord rec{};
    rec.n1 = config.n1;
    rec.n2 = config.n2;
    rec.m = config.m;
    rec.trials = config.trials;
    rec.seed = config.seed;

    // Order-fixed fold over trial index; identical for every jobs value.
    std::int64_t z_sum = 0, z_sumsq = 0;
    for (const TrialOutcome& t : outcomes) {
        rec.feasible_count += t.feasible ? 1 : 0;
        if (!t.feasible && t.witness >= 0) ++rec.witness_counts[t.witness];
        rec.cycle_count += t.has_cycle ? 1 : 0;
        z_sum += t.z;
        z_sumsq += t.z * t.z;
    }
    const double nT = config.trials;
    rec.p_hat = rec.feasible_count / nT;
    const WilsonInterval ci = wilson95(rec.feasible_count, config.trials);
    rec.ci_low = ci.low;
    rec.ci_high = ci.high;
    rec.mean_z = static_cast<double>(z_sum) / nT;
    rec.var_z = config.trials > 1
                    ? (static_cast<double>(z_sumsq) -
                       static_cast<double>(z_sum) * static_cast<double>(z_sum) / nT) /
                          (nT - 1.0)
                    : 0.0;
    rec.frac_cycle = rec.cycle_count / nT;
    rec.frac_witness_g1 = rec.witness_counts[0] / nT;
    rec.frac_witness_g2 = rec.witness_counts[1] / nT;
    rec.frac_witness_g3 = rec.witness_counts[2] / nT;

    const AnalyticBounds bounds = analytic_bounds(config.n1, config.n2, config.m, config.c);
    rec.ez_low = bounds.ez_low;
    rec.ez_high = bounds.ez_high;
    rec.var_high = bounds.var_high;
    rec.cheby_pr_z0 = bounds.cheby;
    rec.cycle_pr = bounds.cycle;
    rec.path_pr = bounds.path;
    return rec;
}

SweepResult sweep(const std::vector<int>& m_values, const TrialConfig& base) {
    std::vector<int> ms = m_values;
    std::stable_sort(ms.begin(), ms.end());
    SweepResult result;
    for (int m : ms) {
        TrialConfig cfg = base;
        cfg.m = m;
        try {
            result.records.push_back(run_trials(cfg));
        } catch (const std::exception& e) {
            result.point_errors.push_back({m, e.what()});
        }
    }
    return result;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string fmt6_opt(const std::optional<BigRat>& v) {
    return v ? fmt6(rat_double(*v)) : "nan";
}

}  // namespace

std::string sweep_csv_header() {
    return "n1,n2,m,trials,seed,p_hat,ci_low,ci_high,mean_z,var_z,frac_cycle,"
           "frac_witness_g1,frac_witness_g2,frac_witness_g3,ez_low,ez_high,"
           "var_high,cheby_pr_z0,cycle_pr,path_pr";
}

std::string sweep_csv_row(const SweepRecord& r) {
    std::ostringstream out;
    out << r.n1 << ',' << r.n2 << ',' << r.m << ',' << r.trials << ',' << r.seed << ','
        << fmt6(r.p_hat) << ',' << fmt6(r.ci_low) << ',' << fmt6(r.ci_high) << ','
        << fmt6(r.mean_z) << ',' << fmt6(r.var_z) << ',' << fmt6(r.frac_cycle) << ','
        << fmt6(r.frac_witness_g1) << ',' << fmt6(r.frac_witness_g2) << ','
        << fmt6(r.frac_witness_g3) << ',' << fmt6(rat_double(r.ez_low)) << ','
        << fmt6(rat_double(r.ez_high)) << ',' << fmt6(rat_double(r.var_high)) << ','
        << fmt6_opt(r.cheby_pr_z0) << ',' << fmt6_opt(r.cycle_pr) << ','
        << fmt6_opt(r.path_pr);
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = sweep_csv_header() + "\n";
    for (const SweepRecord& r : records) out += sweep_csv_row(r) + "\n";
    return out;
}

std::string sweep_json(const SweepResult& result) {
    using nlohmann::ordered_json;
    ordered_json root;
    root["records"] = ordered_json::array();
    for (const SweepRecord& r : result.records) {
        ordered_json j;
        j["n1"] = r.n1;
        j["n2"] = r.n2;
        j["m"] = r.m;
        j["trials"] = r.trials;
        j["seed"] = r.seed;
        j["p_hat"] = r.p_hat;
        j["ci_low"] = r.ci_low;
        j["ci_high"] = r.ci_high;
        j["mean_z"] = r.mean_z;
        j["var_z"] = r.var_z;
        j["frac_cycle"] = r.frac_cycle;
        j["frac_witness_g1"] = r.frac_witness_g1;
        j["frac_witness_g2"] = r.frac_witness_g2;
        j["frac_witness_g3"] = r.frac_witness_g3;
        j["ez_low"] = rat_str(r.ez_low);
        j["ez_high"] = rat_str(r.ez_high);
        j["var_high"] = rat_str(r.var_high);
        j["cheby_pr_z0"] = r.cheby_pr_z0 ? ordered_json(rat_str(*r.cheby_pr_z0)) : nullptr;
        j["cycle_pr"] = r.cycle_pr ? ordered_json(rat_str(*r.cycle_pr)) : nullptr;
        j["path_pr"] = r.path_pr ? ordered_json(rat_str(*r.path_pr)) : nullptr;
        root["records"].push_back(std::move(j));
    }
    root["errors"] = ordered_json::array();
    for (const SweepPointError& e : result.point_errors)
        root["errors"].push_back({{"m", e.m}, {"message", e.message}});
    return root.dump(2) + "\n";
}

ThresholdResult threshold_search(const std::function<double(long long)>& p_hat,
                                 long long m_min, long long m_cap, double target) {
    if (m_min < 1 || m_cap < m_min) throw InvalidParams("threshold schedule is empty");

    ThresholdResult res;
    double p = p_hat(m_min);
    if (p >= target) {
        res.found = true;
        res.m_star = res.bracket_lo = res.bracket_hi = m_min;
        res.p_lo = res.p_hi = p;
        return res;
    }
    long long lo = m_min;
    double p_lo = p;
    long long hi = -1;
    double p_hi = 0.0;
    for (long long m = m_min * 2; hi < 0; m *= 2) {
        if (m >= m_cap) m = m_cap;
        p = p_hat(m);
        if (p >= target) {
            hi = m;
            p_hi = p;
        } else {
            lo = m;
            p_lo = p;
            if (m == m_cap) return res;  // not found, even at the cap
        }
    }
    while (hi - lo > std::max<long long>(1, hi / 64)) {
        const long long mid = lo + (hi - lo) / 2;
        p = p_hat(mid);
        if (p >= target) {
            hi = mid;
            p_hi = p;
        } else {
            lo = mid;
            p_lo = p;
        }
    }
    res.found = true;
    res.m_star = hi;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.p_lo = p_lo;
    res.p_hi = p_hi;
    return res;
}

ThresholdResult threshold_search(int n1, int n2, int trials, std::uint64_t seed, double target,
                                 int jobs) {
    const long long n = n1 + n2;
    const long long m_min = n + 1;
    const long long m_cap = n * n * n;
    auto estimate = [&](long long m) {
        TrialConfig cfg;
        cfg.n1 = n1;
        cfg.n2 = n2;
        cfg.m = static_cast<int>(m);
        cfg.trials = trials;
        cfg.seed = child_seed(seed, static_cast<std::uint64_t>(m));
        cfg.jobs = jobs;
        return run_trials(cfg).p_hat;
    };
    return threshold_search(estimate, m_min, m_cap, target);
}

}  // namespace wpm
