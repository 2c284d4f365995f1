#include "legal/experiments.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "legal/random_models.hpp"

namespace legal {

MainParams desk_scale_main_params() {
    MainParams p;
    p.d0_factor = 0.35;
    p.d1_threshold = 1.0;
    p.allow_detached_n1 = true;
    p.attempts = 5;
    return p;
}

TrialOutcome run_trial(const Graph& g, Method method, const MainParams& params,
                       uint64_t trial_seed, long long sample_count, int max_draws) {
    TrialOutcome out;
    auto start = std::chrono::steady_clock::now();
    for (int draw = 0; draw < std::max(1, max_draws); ++draw) {
        out.draws_used = draw + 1;
        RandomStream rng = RandomStream(trial_seed).split(uint64_t(draw));
        ConstructionResult res = construct(g, method, params, rng);
        if (!res.ok()) {
            out.constructed = false;
            out.failure = res.error->code + ":" + res.error->stage;
            break;  // construction failures already retried internally
        }
        out.constructed = true;
        out.rank = res.transcript->moves.rank();
        VerifyOptions vo;
        vo.mode = VerifyMode::sampled;
        vo.sample_count = sample_count;
        vo.sample_seed = trial_seed + uint64_t(draw);
        LegalityCertificate cert = verify(g, res.transcript->s, res.transcript->moves, vo);
        if (cert.legal) {
            out.verified = true;
            out.failure.clear();
            break;
        }
        out.failure = "counterexample";
    }
    out.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

namespace {

uint64_t trial_seed_of(uint64_t master, uint64_t tag, int trial) {
    RandomStream s = RandomStream(master).split(tag).split(uint64_t(trial));
    return s.next();
}

std::string format_double(double x) {
    std::ostringstream ss;
    ss.precision(6);
    ss << x;
    return ss.str();
}

}  // namespace

std::string experiment_success_curve_csv(const SuccessCurveConfig& cfg) {
    std::ostringstream csv;
    csv << "# success-curve n=" << cfg.n << " trials=" << cfg.trials << " method="
        << method_name(cfg.method) << " master_seed=" << cfg.master_seed << " samples="
        << cfg.sample_count << " d0_factor=" << format_double(cfg.main_params.d0_factor)
        << " d1_threshold=" << format_double(cfg.main_params.effective_d1_threshold(cfg.n))
        << " attempts=" << cfg.main_params.attempts << '\n';
    csv << "p_factor,p,trials,successes,success_rate,mean_rank";
    if (cfg.timings) csv << ",mean_runtime_ms";
    csv << '\n';

    double logn = std::log(double(cfg.n));
    for (size_t pi = 0; pi < cfg.p_factors.size(); ++pi) {
        double factor = cfg.p_factors[pi];
        double p = std::min(1.0, factor * logn / double(cfg.n));
        std::vector<TrialOutcome> outcomes(static_cast<size_t>(cfg.trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int t = 0; t < cfg.trials; ++t) {
            uint64_t seed = trial_seed_of(cfg.master_seed, 7000 + pi, t);
            Graph g = gnp(cfg.n, p, seed);
            outcomes[size_t(t)] = run_trial(g, cfg.method, cfg.main_params, seed,
                                            cfg.sample_count);
        }
        int successes = 0;
        long long rank_sum = 0;
        int rank_n = 0;
        double runtime_sum = 0.0;
        for (const auto& o : outcomes) {
            if (o.verified) ++successes;
            if (o.constructed) {
                rank_sum += o.rank;
                ++rank_n;
            }
            runtime_sum += o.runtime_ms;
        }
        csv << format_double(factor) << ',' << format_double(p) << ',' << cfg.trials << ','
            << successes << ',' << format_double(double(successes) / cfg.trials) << ','
            << format_double(rank_n > 0 ? double(rank_sum) / rank_n : 0.0);
        if (cfg.timings) csv << ',' << format_double(runtime_sum / cfg.trials);
        csv << '\n';
    }
    return csv.str();
}

std::vector<HittingTimeRow> experiment_hitting_time(const HittingTimeConfig& cfg) {
    std::vector<HittingTimeRow> rows(static_cast<size_t>(cfg.trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < cfg.trials; ++t) {
        uint64_t seed = trial_seed_of(cfg.master_seed, 8000, t);
        ProcessTrace trace = process(cfg.n, seed);
        HittingTimeRow row;
        row.seed = seed;
        row.t2 = trace.t2;
        // Just before the hitting time the minimum degree is at most 1, so
        // for n >= 4 there is no legal system at all; no search needed.
        Graph before = trace.graph_at(trace.t2 - 1);
        row.verdict_before = before.min_degree() <= 1 ? "no" : "unexpected";
        Graph at = trace.graph_at(trace.t2);
        TrialOutcome o = run_trial(at, Method::main, cfg.main_params, seed, cfg.sample_count);
        if (o.verified) {
            row.verdict_at = "yes";
        } else if (o.constructed) {
            row.verdict_at = "counterexample";
        } else {
            row.verdict_at = "construct_failed:" + o.failure;
        }
        rows[size_t(t)] = std::move(row);
    }
    return rows;
}

std::string experiment_hitting_time_csv(const HittingTimeConfig& cfg) {
    auto rows = experiment_hitting_time(cfg);
    std::ostringstream csv;
    csv << "# hitting-time n=" << cfg.n << " trials=" << cfg.trials << " master_seed="
        << cfg.master_seed << " samples=" << cfg.sample_count << " d0_factor="
        << format_double(cfg.main_params.d0_factor) << " d1_threshold="
        << format_double(cfg.main_params.effective_d1_threshold(cfg.n)) << " attempts="
        << cfg.main_params.attempts << '\n';
    csv << "seed,t2,verdict_at_t2_minus_1,verdict_at_t2\n";
    for (const auto& r : rows) {
        csv << r.seed << ',' << r.t2 << ',' << r.verdict_before << ',' << r.verdict_at << '\n';
    }
    return csv.str();
}

}  // namespace legal
