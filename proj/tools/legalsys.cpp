// Command-line front end: graph generation, legal-system search,
// construction, verification, pseudorandomness checks, probability tables,
// and the Monte Carlo experiment harness.
//
// Exit codes: 0 success/legal, 1 definite negative, 2 inconclusive,
// 64 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "legal/experiments.hpp"
#include "legal/graph_io.hpp"
#include "legal/prob.hpp"
#include "legal/pseudorandom.hpp"
#include "legal/serialize.hpp"

namespace {

constexpr int kExitLegal = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw legal::ParseError("cannot open output file: " + path);
    out << content;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    write_output(path, j.dump(2) + "\n");
}

struct GenSpec {
    std::string model = "gnp";
    int n = 0;
    double p = 0.0;
    long long m = -1;
};

legal::Graph generate(const GenSpec& spec, uint64_t seed) {
    if (spec.model == "gnp") return legal::gnp(spec.n, spec.p, seed);
    if (spec.model == "gnm") return legal::gnm(spec.n, spec.m, seed);
    throw CLI::ValidationError("--model", "expected gnp or gnm");
}

struct MainParamFlags {
    double d0_factor = -1.0;
    double d1_threshold = -2.0;
    int attempts = -1;
    bool no_detached_n1 = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--d0-factor", d0_factor,
                        "degree cutoff for the repair set D0, times log n");
        cmd->add_option("--d1-threshold", d1_threshold,
                        "kappa cutoff for the repair set D1 (negative: (log log n)^2)");
        cmd->add_option("--attempts", attempts, "colouring/sign re-draws when pairing fails");
        cmd->add_flag("--no-detached-n1", no_detached_n1,
                      "forbid cross-class fallback pairs in the D1 repair");
    }

    legal::MainParams resolve(legal::MainParams base) const {
        if (d0_factor >= 0) base.d0_factor = d0_factor;
        if (d1_threshold >= -1.0) base.d1_threshold = d1_threshold;
        if (attempts > 0) base.attempts = attempts;
        if (no_detached_n1) base.allow_detached_n1 = false;
        return base;
    }
};

int cmd_gen(const GenSpec& spec, uint64_t seed, const std::string& out,
            const std::string& trace_out, long long at) {
    if (spec.model == "process") {
        legal::ProcessTrace tr = legal::process(spec.n, seed);
        if (!trace_out.empty()) write_json(trace_out, legal::trace_to_json(tr));
        long long t = at >= 0 ? at : tr.t2;
        std::ostringstream g;
        legal::write_graph(g, tr.graph_at(t));
        write_output(out, g.str());
        return kExitLegal;
    }
    std::ostringstream g;
    legal::write_graph(g, generate(spec, seed));
    write_output(out, g.str());
    return kExitLegal;
}

int cmd_search(const std::string& in, long long budget, const std::string& json_out,
               int classify_n) {
    if (classify_n > 0) {
        auto table = legal::classify_all_graphs(classify_n, budget);
        write_json(json_out, legal::classification_to_json(table));
        return kExitLegal;
    }
    legal::Graph g = legal::read_graph_file(in);
    legal::SearchResult r = legal::exists_legal_system(g, budget);
    write_json(json_out, legal::search_result_to_json(r, g.vertex_count()));
    switch (r.verdict) {
        case legal::SearchVerdict::yes: return kExitLegal;
        case legal::SearchVerdict::no: return kExitNegative;
        case legal::SearchVerdict::unknown: return kExitInconclusive;
    }
    return kExitInconclusive;
}

legal::VerifyOptions make_verify_options(const std::string& mode, long long samples,
                                         uint64_t seed, int max_rank) {
    legal::VerifyOptions vo;
    if (mode == "exhaustive") {
        vo.mode = legal::VerifyMode::exhaustive;
    } else if (mode == "sampled") {
        vo.mode = legal::VerifyMode::sampled;
        vo.sample_count = samples;
    } else {
        throw CLI::ValidationError("--mode", "expected exhaustive or sampled");
    }
    vo.sample_seed = seed;
    if (max_rank > 0) vo.max_exhaustive_rank = max_rank;
    return vo;
}

int cmd_verify(const std::string& graph_path, const std::string& transcript_path,
               const std::string& mode, long long samples, uint64_t seed, int max_rank,
               const std::string& json_out) {
    legal::Graph g = legal::read_graph_file(graph_path);
    std::ifstream tin(transcript_path);
    if (!tin) throw legal::ParseError("cannot open transcript: " + transcript_path);
    nlohmann::json tj = nlohmann::json::parse(tin);
    legal::ReplayableSystem sys = legal::system_from_transcript_json(tj);
    if (sys.n != g.vertex_count()) throw legal::ParseError("transcript/graph size mismatch");
    if (auto viol = legal::validate_moves(g, sys.moves)) {
        std::cerr << "invalid moves: " << viol->describe() << "\n";
        return kExitNegative;
    }
    legal::LegalityCertificate cert =
        legal::verify(g, sys.s, sys.moves, make_verify_options(mode, samples, seed, max_rank));
    write_json(json_out, legal::certificate_to_json(cert, g.vertex_count()));
    return cert.legal ? kExitLegal : kExitNegative;
}

int cmd_construct(const std::string& in, const GenSpec& gen, bool use_gen, uint64_t seed,
                  const std::string& method_name, const MainParamFlags& flags,
                  const std::string& mode, long long samples, int max_rank,
                  const std::string& transcript_out, const std::string& certificate_out) {
    legal::Graph g = use_gen ? generate(gen, seed) : legal::read_graph_file(in);
    legal::Method method = method_name == "dense"       ? legal::Method::dense
                           : method_name == "colouring" ? legal::Method::colouring
                                                        : legal::Method::main;
    legal::MainParams params = flags.resolve(legal::MainParams{});
    legal::RandomStream rng(seed);
    legal::ConstructionResult res = legal::construct(g, method, params, rng);
    if (!res.ok()) {
        nlohmann::json err = {{"schema", "construction-error/1"},
                              {"code", res.error->code},
                              {"stage", res.error->stage},
                              {"vertex", res.error->vertex},
                              {"message", res.error->message}};
        write_json(transcript_out, err);
        // A complete graph, or minimum degree <= 1 on n >= 4, definitely has
        // no legal system; other construction failures are inconclusive.
        if (res.error->code == "graph_complete") return kExitNegative;
        if (res.error->code == "min_degree" && g.vertex_count() >= 4) return kExitNegative;
        return kExitInconclusive;
    }
    write_json(transcript_out, legal::transcript_to_json(*res.transcript));
    legal::LegalityCertificate cert = legal::verify(
        g, res.transcript->s, res.transcript->moves, make_verify_options(mode, samples, seed, max_rank));
    write_json(certificate_out, legal::certificate_to_json(cert, g.vertex_count()));
    return cert.legal ? kExitLegal : kExitNegative;
}

int cmd_check_pseudorandom(const std::string& in, const legal::CheckConstants& constants,
                           const std::string& json_out) {
    legal::Graph g = legal::read_graph_file(in);
    legal::PropertyReport rep = legal::check_all(g, constants);
    write_json(json_out, legal::report_to_json(rep));
    return rep.all_pass() ? kExitLegal : kExitNegative;
}

int cmd_prob_verify(int max_m, int coupling_sum, const std::string& out) {
    std::ostringstream csv;
    csv << "table,param,ok,detail1,detail2\n";
    bool all_ok = true;

    for (int m = 1; m <= max_m; ++m) {
        bool ok = legal::dominates(legal::folded_min(m), legal::binomial_half(m / 2));
        all_ok = all_ok && ok;
        csv << "domin,m=" << m << ',' << (ok ? 1 : 0) << ",,\n";
    }

    // All partitions (parts >= 1, descending) with sum <= coupling_sum;
    // convolution order does not matter, which unit tests check separately.
    std::vector<int> parts;
    auto emit = [&]() {
        std::vector<legal::ExactDistribution> folded;
        int half_sum = 0;
        std::string name;
        for (size_t i = 0; i < parts.size(); ++i) {
            folded.push_back(legal::folded_min(parts[i]));
            half_sum += parts[i] / 2;
            name += (i ? "+" : "") + std::to_string(parts[i]);
        }
        bool ok = legal::dominates(legal::convolve(folded), legal::binomial_half(half_sum));
        all_ok = all_ok && ok;
        csv << "coupling," << name << ',' << (ok ? 1 : 0) << ",,\n";
    };
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (!parts.empty()) emit();
        for (int next = std::min(remaining, max_part); next >= 1; --next) {
            parts.push_back(next);
            rec(remaining - next, next);
            parts.pop_back();
        }
    };
    rec(coupling_sum, coupling_sum);

    for (double log_n : {std::log(1e6), 404.0, 2020.0, 4040.0}) {
        legal::Sized1Tail t = legal::sized1_tail_from_log(log_n);
        csv << "sized1,logn=" << log_n << ',' << (t.bound_holds ? 1 : 0)
            << ",tail=" << double(t.tail) << ",bound=" << t.claimed_bound << "\n";
    }

    write_output(out, csv.str());
    return all_ok ? kExitLegal : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"legal systems on graphs: generate, search, construct, verify, experiment"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a random graph or process trace");
    GenSpec gen_spec;
    uint64_t gen_seed = 1;
    std::string gen_out, gen_trace;
    long long gen_at = -1;
    gen->add_option("--model", gen_spec.model, "gnp | gnm | process")->required();
    gen->add_option("--n", gen_spec.n, "vertex count")->required();
    gen->add_option("--p", gen_spec.p, "edge probability (gnp)");
    gen->add_option("--m", gen_spec.m, "edge count (gnm)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "graph output file (default stdout)");
    gen->add_option("--trace", gen_trace, "process trace JSON output");
    gen->add_option("--at", gen_at, "process: emit the graph at this time (default: T2)");

    // --- search ---
    auto* search = app.add_subcommand("search", "decide existence of a legal system");
    std::string search_in, search_json;
    long long search_budget = 100'000'000;
    int classify_n = 0;
    search->add_option("--in", search_in, "graph file");
    search->add_option("--budget", search_budget, "search node budget");
    search->add_option("--json", search_json, "JSON output (default stdout)");
    search->add_option("--classify", classify_n,
                       "classify all isomorphism classes on n <= 5 vertices instead");

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "re-verify a construction transcript");
    std::string verify_graph, verify_transcript, verify_json, verify_mode = "exhaustive";
    long long verify_samples = 10000;
    uint64_t verify_seed = 1;
    int verify_max_rank = 0;
    verify->add_option("--graph", verify_graph, "graph file")->required();
    verify->add_option("--transcript", verify_transcript, "transcript JSON")->required();
    verify->add_option("--mode", verify_mode, "exhaustive | sampled");
    verify->add_option("--samples", verify_samples, "sample count (sampled mode)");
    verify->add_option("--seed", verify_seed, "sampling seed");
    verify->add_option("--max-rank", verify_max_rank, "exhaustive rank cap override");
    verify->add_option("--json", verify_json, "certificate output (default stdout)");

    // --- construct ---
    auto* construct = app.add_subcommand("construct", "run one of the three constructions");
    std::string cons_in, cons_method = "main", cons_mode = "sampled";
    std::string cons_transcript, cons_certificate;
    GenSpec cons_gen;
    bool cons_use_gen = false;
    uint64_t cons_seed = 1;
    long long cons_samples = 10000;
    int cons_max_rank = 0;
    MainParamFlags cons_flags;
    construct->add_option("--in", cons_in, "graph file");
    construct->add_option("--gen", cons_gen.model, "generate input instead: gnp | gnm");
    construct->add_option("--n", cons_gen.n, "vertex count (with --gen)");
    construct->add_option("--p", cons_gen.p, "edge probability (with --gen gnp)");
    construct->add_option("--m", cons_gen.m, "edge count (with --gen gnm)");
    construct->add_option("--seed", cons_seed, "seed for generation and construction");
    construct->add_option("--method", cons_method, "dense | colouring | main")->required();
    construct->add_option("--verify", cons_mode, "exhaustive | sampled");
    construct->add_option("--samples", cons_samples, "sample count (sampled verify)");
    construct->add_option("--max-rank", cons_max_rank, "exhaustive rank cap override");
    construct->add_option("--transcript", cons_transcript, "transcript output (default stdout)");
    construct->add_option("--certificate", cons_certificate, "certificate output (default stdout)");
    cons_flags.attach(construct);

    // --- check-pseudorandom ---
    auto* check = app.add_subcommand("check-pseudorandom",
                                     "evaluate the eight deterministic graph properties");
    std::string check_in, check_json;
    legal::CheckConstants constants;
    check->add_option("--in", check_in, "graph file")->required();
    check->add_option("--json", check_json, "report output (default stdout)");
    check->add_option("--c-delta", constants.c_delta, "max-degree constant");
    check->add_option("--c-chi", constants.c_chi, "class-count constant");
    check->add_option("--d0-factor", constants.d0_factor, "low-degree cutoff factor");
    check->add_option("--vi-threshold", constants.vi_threshold,
                      "induced-degree cutoff for property (vi)");
    check->add_option("--exact-limit", constants.exact_limit_n,
                      "exhaustive enumeration cutoff for (vi)/(vii)");
    check->add_option("--effort", constants.heuristic_effort, "heuristic restart budget");
    check->add_option("--seed", constants.seed, "colouring/heuristic seed");

    // --- prob-verify ---
    auto* prob = app.add_subcommand("prob-verify",
                                    "dominance and tail tables for the probability claims");
    int prob_max_m = 64, prob_coupling_sum = 16;
    std::string prob_out;
    prob->add_option("--max-m", prob_max_m, "largest single-block size");
    prob->add_option("--coupling-sum", prob_coupling_sum, "largest partition total");
    prob->add_option("--out", prob_out, "CSV output (default stdout)");

    // --- experiment ---
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiment harness");
    experiment->require_subcommand(1);

    auto* curve = experiment->add_subcommand("success-curve",
                                             "construction success rate over a p grid");
    legal::SuccessCurveConfig curve_cfg;
    std::string curve_method = "main", curve_out, curve_grid = "0.5,1.0,1.5,2.0";
    MainParamFlags curve_flags;
    curve->add_option("--n", curve_cfg.n, "vertex count");
    curve->add_option("--p-grid", curve_grid, "comma list, multiples of log n / n");
    curve->add_option("--trials", curve_cfg.trials, "trials per grid point");
    curve->add_option("--method", curve_method, "dense | colouring | main");
    curve->add_option("--seed", curve_cfg.master_seed, "master seed");
    curve->add_option("--samples", curve_cfg.sample_count, "sampled-verify count");
    curve->add_flag("--timings", curve_cfg.timings, "append a runtime column");
    curve->add_option("--out", curve_out, "CSV output (default stdout)");
    curve_flags.attach(curve);

    auto* hitting = experiment->add_subcommand("hitting-time",
                                               "process verdicts at the min-degree-2 time");
    legal::HittingTimeConfig hit_cfg;
    std::string hit_out;
    MainParamFlags hit_flags;
    hitting->add_option("--n", hit_cfg.n, "vertex count");
    hitting->add_option("--trials", hit_cfg.trials, "number of process runs");
    hitting->add_option("--seed", hit_cfg.master_seed, "master seed");
    hitting->add_option("--samples", hit_cfg.sample_count, "sampled-verify count");
    hitting->add_flag("--timings", hit_cfg.timings, "append a runtime column");
    hitting->add_option("--out", hit_out, "CSV output (default stdout)");
    hit_flags.attach(hitting);

    try {
        app.parse(argc, argv);

        if (gen->parsed()) return cmd_gen(gen_spec, gen_seed, gen_out, gen_trace, gen_at);
        if (search->parsed()) {
            if (classify_n == 0 && search_in.empty()) {
                throw CLI::ValidationError("--in", "graph file required unless --classify");
            }
            return cmd_search(search_in, search_budget, search_json, classify_n);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_graph, verify_transcript, verify_mode, verify_samples,
                              verify_seed, verify_max_rank, verify_json);
        }
        if (construct->parsed()) {
            cons_use_gen = !construct->get_option("--gen")->empty();
            if (!cons_use_gen && cons_in.empty()) {
                throw CLI::ValidationError("--in", "graph file required unless --gen");
            }
            return cmd_construct(cons_in, cons_gen, cons_use_gen, cons_seed, cons_method,
                                 cons_flags, cons_mode, cons_samples, cons_max_rank,
                                 cons_transcript, cons_certificate);
        }
        if (check->parsed()) return cmd_check_pseudorandom(check_in, constants, check_json);
        if (prob->parsed()) return cmd_prob_verify(prob_max_m, prob_coupling_sum, prob_out);
        if (experiment->parsed()) {
            if (curve->parsed()) {
                curve_cfg.method = curve_method == "dense"       ? legal::Method::dense
                                   : curve_method == "colouring" ? legal::Method::colouring
                                                                 : legal::Method::main;
                curve_cfg.main_params = curve_flags.resolve(legal::desk_scale_main_params());
                curve_cfg.p_factors.clear();
                std::stringstream ss(curve_grid);
                std::string tok;
                while (std::getline(ss, tok, ',')) curve_cfg.p_factors.push_back(std::stod(tok));
                write_output(curve_out, legal::experiment_success_curve_csv(curve_cfg));
                return kExitLegal;
            }
            if (hitting->parsed()) {
                hit_cfg.main_params = hit_flags.resolve(legal::desk_scale_main_params());
                write_output(hit_out, legal::experiment_hitting_time_csv(hit_cfg));
                return kExitLegal;
            }
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const legal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const legal::RankCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
