#include "legal/serialize.hpp"

#include <stdexcept>

namespace legal {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) { return s.to_hex(); }

json pairs_to_json(const std::vector<PairAssignment>& pairs) {
    json arr = json::array();
    for (const auto& p : pairs) {
        arr.push_back({{"repaired", p.repaired},
                       {"plus", p.plus_vertex},
                       {"minus", p.minus_vertex},
                       {"detached", p.detached},
                       {"split_moves", p.split_moves}});
    }
    return arr;
}

}  // namespace

json certificate_to_json(const LegalityCertificate& cert, int n) {
    json j;
    j["schema"] = "certificate/1";
    j["n"] = n;
    j["mode"] = cert.mode == VerifyMode::exhaustive ? "exhaustive" : "sampled";
    if (cert.mode == VerifyMode::sampled) j["sample_count"] = cert.sample_count;
    j["rank"] = cert.rank;
    j["states_checked"] = cert.states_checked;
    if (cert.legal) {
        j["verdict"] = "legal";
    } else {
        j["verdict"] = "counterexample";
        j["counterexample"] = {{"g", set_to_json(*cert.counterexample_g)},
                               {"state", set_to_json(*cert.counterexample_state)}};
    }
    return j;
}

json transcript_to_json(const ConstructionTranscript& t) {
    json j;
    j["schema"] = "transcript/1";
    j["method"] = method_name(t.method);
    j["n"] = t.n;
    j["s"] = set_to_json(t.s);
    json moves = json::array();
    for (const VertexSet& m : t.moves.moves) moves.push_back(set_to_json(m));
    j["moves"] = std::move(moves);
    j["rank"] = t.moves.rank();

    if (t.complement_matching) {
        json pairs = json::array();
        for (auto [u, v] : t.complement_matching->pairs) pairs.push_back({u, v});
        j["complement_matching"] = std::move(pairs);
    }
    if (t.base_colouring) {
        json classes = json::array();
        for (const VertexSet& c : t.base_colouring->classes) classes.push_back(set_to_json(c));
        j["base_colouring"] = std::move(classes);
    }
    if (t.signing) {
        json classes = json::array();
        for (const VertexSet& c : t.signing->classes) classes.push_back(set_to_json(c));
        j["signing"] = {{"classes", std::move(classes)}, {"plus", set_to_json(t.signing->plus)}};
    }
    if (t.d0) j["d0"] = set_to_json(*t.d0);
    if (t.d1) j["d1"] = set_to_json(*t.d1);
    if (t.vprime) j["v_prime"] = set_to_json(*t.vprime);
    if (t.vsecond) j["v_second"] = set_to_json(*t.vsecond);
    if (!t.n0_pairs.empty() || t.method == Method::main) j["n0_pairs"] = pairs_to_json(t.n0_pairs);
    if (!t.n1_pairs.empty() || t.method == Method::main) j["n1_pairs"] = pairs_to_json(t.n1_pairs);

    j["diagnostics"] = {{"class_count", t.diag.class_count},
                        {"d0_size", t.diag.d0_size},
                        {"d1_size", t.diag.d1_size},
                        {"n0_adjacent_pairs", t.diag.n0_adjacent_pairs},
                        {"n1_detached_pairs", t.diag.n1_detached_pairs},
                        {"attempts_used", t.diag.attempts_used},
                        {"kappa_min", t.diag.kappa_min},
                        {"kappa_mean", t.diag.kappa_mean},
                        {"d1_threshold", t.diag.d1_threshold},
                        {"d0_degree_cutoff", t.diag.d0_degree_cutoff}};
    return j;
}

json report_to_json(const PropertyReport& rep) {
    static const char* kNames[8] = {"min_degree_2",       "max_degree_logn",
                                    "few_low_degree",     "no_short_d0_paths",
                                    "equitable_classes",  "dense_sets_large",
                                    "disjoint_sets_edge", "k23_free"};
    json j;
    j["schema"] = "pseudorandom-report/1";
    j["n"] = rep.n;
    j["t"] = rep.t;
    j["log_n"] = rep.log_n;
    j["min_degree"] = rep.min_degree;
    j["max_degree"] = rep.max_degree;
    j["d0_size"] = rep.d0_size;
    j["class_count"] = rep.class_count;
    j["constants"] = {{"c_delta", rep.constants.c_delta},
                      {"d0_factor", rep.constants.d0_factor},
                      {"c_chi", rep.constants.c_chi},
                      {"vi_threshold", rep.constants.vi_threshold},
                      {"exact_limit_n", rep.constants.exact_limit_n},
                      {"heuristic_effort", rep.constants.heuristic_effort},
                      {"seed", rep.constants.seed}};
    json props = json::array();
    for (int i = 0; i < 8; ++i) {
        const PropertyResult& p = rep.properties[size_t(i)];
        json pj;
        pj["index"] = i + 1;
        pj["name"] = kNames[i];
        pj["verdict"] = verdict_name(p.verdict);
        if (!p.detail.empty()) pj["detail"] = p.detail;
        if (p.witness_vertex) pj["witness_vertex"] = *p.witness_vertex;
        if (p.witness_set) pj["witness_set"] = set_to_json(*p.witness_set);
        if (p.witness_set_b) pj["witness_set_b"] = set_to_json(*p.witness_set_b);
        if (p.witness_path) pj["witness_path"] = *p.witness_path;
        props.push_back(std::move(pj));
    }
    j["properties"] = std::move(props);
    j["all_pass"] = rep.all_pass();
    return j;
}

json trace_to_json(const ProcessTrace& trace) {
    json j;
    j["schema"] = "process-trace/1";
    j["n"] = trace.n;
    j["seed"] = trace.seed;
    j["t2"] = trace.t2;
    json order = json::array();
    for (auto [u, v] : trace.edge_order) order.push_back({u, v});
    j["edge_order"] = std::move(order);
    return j;
}

json search_result_to_json(const SearchResult& r, int n) {
    json j;
    j["schema"] = "search/1";
    j["n"] = n;
    j["verdict"] = r.verdict == SearchVerdict::yes      ? "yes"
                   : r.verdict == SearchVerdict::no     ? "no"
                                                        : "unknown";
    j["nodes_expanded"] = r.nodes_expanded;
    if (r.state) j["state"] = set_to_json(*r.state);
    if (r.moves) {
        json moves = json::array();
        for (const VertexSet& m : r.moves->moves) moves.push_back(set_to_json(m));
        j["moves"] = std::move(moves);
    }
    return j;
}

json classification_to_json(const std::vector<GraphClassEntry>& table) {
    json j;
    j["schema"] = "classification/1";
    json rows = json::array();
    for (const auto& e : table) {
        json row;
        row["n"] = e.n;
        row["adjacency_bits"] = e.adjacency_bits;
        row["verdict"] = e.verdict == SearchVerdict::yes      ? "yes"
                         : e.verdict == SearchVerdict::no     ? "no"
                                                              : "unknown";
        if (e.state) row["state"] = set_to_json(*e.state);
        if (e.moves) {
            json moves = json::array();
            for (const VertexSet& m : e.moves->moves) moves.push_back(set_to_json(m));
            row["moves"] = std::move(moves);
        }
        rows.push_back(std::move(row));
    }
    j["classes"] = std::move(rows);
    return j;
}

ReplayableSystem system_from_transcript_json(const json& j) {
    if (!j.contains("schema") || j["schema"] != "transcript/1") {
        throw std::invalid_argument("not a transcript/1 document");
    }
    ReplayableSystem sys;
    sys.n = j.at("n").get<int>();
    std::string method = j.at("method").get<std::string>();
    sys.method = method == "dense"       ? Method::dense
                 : method == "colouring" ? Method::colouring
                                         : Method::main;
    sys.s = VertexSet::from_hex(j.at("s").get<std::string>(), sys.n);
    std::vector<VertexSet> moves;
    for (const auto& m : j.at("moves")) {
        moves.push_back(VertexSet::from_hex(m.get<std::string>(), sys.n));
    }
    if (int(moves.size()) != sys.n) throw std::invalid_argument("move list length mismatch");
    sys.moves = MoveSet::from_moves(std::move(moves));
    return sys;
}

}  // namespace legal
