#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wpm/census.hpp"

namespace wpm {

struct TrialConfig {
    int n1 = 1;
    int n2 = 1;
    int m = 3;
    int trials = 1;
    std::uint64_t seed = 0;
    std::optional<BigRat> c;  // nullopt = auto (m/(m-n))
    int jobs = 1;
};

// One (n1, n2, m) measurement point. Analytic fields sit next to the
// empirical ones so a sweep row is self-contained.
struct SweepRecord {
    int n1, n2, m, trials;
    std::uint64_t seed;
    double p_hat;  // fraction of trials with a well-formed matching
    double ci_low, ci_high;  // 95% Wilson
    double mean_z, var_z;
    double frac_cycle;
    double frac_witness_g1, frac_witness_g2, frac_witness_g3;
    BigRat ez_low, ez_high, var_high;
    std::optional<BigRat> cheby_pr_z0;       // |T| = 0
    std::optional<BigRat> cycle_pr, path_pr; // divergent series

    // Raw counts backing the fractions; kept for exact post-processing.
    int feasible_count = 0;
    int cycle_count = 0;
    int witness_counts[3] = {0, 0, 0};
};

struct WilsonInterval {
    double low, high;
};

// 95% Wilson score interval (z = 1.959963984540054).
WilsonInterval wilson95(int successes, int trials);

// Runs `trials` independent trials; trial i uses child_seed(seed, i). Each
// trial: gen_reduced -> build -> solve_orientation (find_witness when
// infeasible) -> count_g1prime -> cycle_census. Aggregation is by trial
// index, so the record is identical for every jobs value.
SweepRecord run_trials(const TrialConfig& config);

struct SweepPointError {
    int m;
    std::string message;
};

struct SweepResult {
    std::vector<SweepRecord> records;          // ascending m
    std::vector<SweepPointError> point_errors; // reported inline, run continues
};

SweepResult sweep(const std::vector<int>& m_values, const TrialConfig& base);

// Header + one row per record, floats at 6 significant digits, undefined
// analytic values as "nan".
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRecord& rec);
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string sweep_json(const SweepResult& result);

struct ThresholdResult {
    bool found = false;
    long long m_star = -1;   // smallest known m with p_hat >= target
    long long bracket_lo = -1, bracket_hi = -1;
    double p_lo = 0.0, p_hi = 0.0;
};

// Doubling from m_min then integer bisection until the bracket is narrower
// than max(1, hi/64). Probes a caller-supplied estimator so the schedule
// can be tested against synthetic curves.
ThresholdResult threshold_search(const std::function<double(long long)>& p_hat,
                                 long long m_min, long long m_cap, double target);

// Monte Carlo backed search; the per-m estimator runs `trials` trials with
// master seed child_seed(seed, m). Caps the schedule at m = n^3.
ThresholdResult threshold_search(int n1, int n2, int trials, std::uint64_t seed,
                                 double target = 0.5, int jobs = 1);

}  // namespace wpm
