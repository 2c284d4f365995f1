#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "legal/construction.hpp"

namespace legal {

/// Repair-construction parameters that work at experiment scale (hundreds to
/// thousands of vertices), where the asymptotic default thresholds degenerate:
/// the degree cutoff catches genuinely low-degree vertices and the kappa
/// cutoff repairs exactly the vertices whose class support can vanish.
MainParams desk_scale_main_params();

/// Success curve over an edge-probability grid given in multiples of
/// log n / n. One CSV row per grid point; byte-identical per master seed.
struct SuccessCurveConfig {
    int n = 800;
    std::vector<double> p_factors{0.5, 1.0, 1.5, 2.0};
    int trials = 100;
    Method method = Method::main;
    uint64_t master_seed = 1;
    long long sample_count = 10000;
    MainParams main_params = desk_scale_main_params();
    bool timings = false;  // runtime column is opt-in; it breaks byte equality
};

std::string experiment_success_curve_csv(const SuccessCurveConfig& cfg);

/// Edge-addition process runs: verdict just before the min-degree-2 hitting
/// time is a deterministic no; at the hitting time the repair construction
/// plus sampled verification is attempted.
struct HittingTimeConfig {
    int n = 800;
    int trials = 50;
    uint64_t master_seed = 1;
    long long sample_count = 10000;
    MainParams main_params = desk_scale_main_params();
    bool timings = false;
};

struct HittingTimeRow {
    uint64_t seed = 0;
    long long t2 = 0;
    std::string verdict_before;  // at t2 - 1
    std::string verdict_at;      // at t2
};

std::vector<HittingTimeRow> experiment_hitting_time(const HittingTimeConfig& cfg);
std::string experiment_hitting_time_csv(const HittingTimeConfig& cfg);

/// Outcome of one construct-and-verify trial; used by both experiments.
struct TrialOutcome {
    bool constructed = false;
    bool verified = false;
    int rank = 0;
    int draws_used = 0;
    std::string failure;  // construction error code:stage, or "counterexample"
    double runtime_ms = 0.0;
};

/// Construct and verify with the given sample count. The colouring and signs
/// are their own probability space, so on a detected counterexample the
/// construction re-draws (up to max_draws in total); the reported outcome is
/// the final draw's full verification.
TrialOutcome run_trial(const Graph& g, Method method, const MainParams& params,
                       uint64_t trial_seed, long long sample_count, int max_draws = 3);

}  // namespace legal
