#include "legal/construction.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace legal {

int kappa(const VertexSet& u, const SignedColouring& sc) {
    int total = 0;
    for (const VertexSet& cls : sc.classes) {
        VertexSet hit = cls & u;
        int in_class = hit.count();
        if (in_class == 0) continue;
        int plus = hit.intersection_count(sc.plus);
        total += std::min(plus, in_class - plus);
    }
    return total;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::dense: return "dense";
        case Method::colouring: return "colouring";
        case Method::main: return "main";
    }
    return "?";
}

ConstructionResult construct_dense(const Graph& g, RandomStream& rng) {
    ConstructionResult result;
    Graph h = g.complement();
    if (h.edge_count() == 0) {
        result.error = ConstructionError{"graph_complete", "precondition", -1,
                                         "complete graph has no non-edge to match"};
        return result;
    }
    RandomStream matching_rng = rng.split(stream::kMatching);
    Matching f = greedy_maximal_matching(h, matching_rng);

    int n = g.vertex_count();
    std::vector<VertexSet> moves(static_cast<size_t>(n), VertexSet(n));
    VertexSet s(n);
    for (auto [u, v] : f.pairs) {
        VertexSet pair(n);
        pair.set(u);
        pair.set(v);
        moves[size_t(u)] = pair;
        moves[size_t(v)] = pair;
        s.set(u);
    }
    for (int v = 0; v < n; ++v) {
        if (moves[size_t(v)].empty()) moves[size_t(v)].set(v);
    }

    ConstructionTranscript t;
    t.method = Method::dense;
    t.n = n;
    t.s = std::move(s);
    t.moves = MoveSet::from_moves(std::move(moves));
    t.complement_matching = std::move(f);
    assert(!validate_moves(g, t.moves));
    result.transcript = std::move(t);
    return result;
}

std::vector<int> check_star_condition(const Graph& g, const Matching& complement_matching) {
    std::vector<int> violating;
    int k = int(complement_matching.pairs.size());
    if (k == 0) return violating;
    int needed = (k + 1) / 2;
    Graph h = g.complement();
    for (int v = 0; v < g.vertex_count(); ++v) {
        int touched = 0;
        for (auto [a, b] : complement_matching.pairs) {
            // A vertex's own pair holds the state slot it moves with and
            // cannot cut it off; only foreign pairs count.
            if (v == a || v == b) continue;
            if (h.adjacent(v, a) || h.adjacent(v, b)) ++touched;
        }
        if (touched >= needed) violating.push_back(v);
    }
    return violating;
}

ConstructionResult construct_colouring(const Graph& g, const EquitableColouring& colouring,
                                       RandomStream& rng) {
    int n = g.vertex_count();
    ConstructionResult result;
    std::vector<VertexSet> moves(static_cast<size_t>(n), VertexSet(n));
    for (int v = 0; v < n; ++v) moves[size_t(v)] = colouring.classes[size_t(colouring.class_of[v])];

    RandomStream sign_rng = rng.split(stream::kSigns);
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
        if (sign_rng.next() & 1) s.set(v);
    }

    ConstructionTranscript t;
    t.method = Method::colouring;
    t.n = n;
    t.moves = MoveSet::from_moves(std::move(moves));
    t.base_colouring = colouring;
    t.signing = SignedColouring{colouring.classes, s};
    t.s = std::move(s);
    t.diag.class_count = colouring.count();
    assert(!validate_moves(g, t.moves));
    result.transcript = std::move(t);
    return result;
}

double MainParams::effective_d1_threshold(int n) const {
    if (d1_threshold >= 0.0) return d1_threshold;
    double ll = std::log(std::log(double(n)));
    return ll * ll;
}

namespace {

struct N0Plan {
    std::vector<PairAssignment> pairs;
    VertexSet members;  // all paired neighbours
    int adjacent_pairs = 0;
};

// Two neighbours per low-degree vertex, vertex-disjoint across pairs,
// non-adjacent preferred; an adjacent pair falls back to singleton moves.
// Deterministic: vertices and neighbours scanned by index.
bool plan_n0(const Graph& g, const VertexSet& d0, N0Plan& plan, ConstructionError& err) {
    int n = g.vertex_count();
    plan.members = VertexSet(n);
    bool ok = true;
    d0.for_each([&](int w) {
        if (!ok) return;
        std::vector<int> avail;
        g.neighbours(w).for_each([&](int u) {
            if (!d0.test(u) && !plan.members.test(u)) avail.push_back(u);
        });
        if (avail.size() < 2) {
            err = ConstructionError{"pairing_failed", "n0", w,
                                    "fewer than two free neighbours for low-degree vertex"};
            ok = false;
            return;
        }
        int a = -1, b = -1;
        for (size_t i = 0; i < avail.size() && a < 0; ++i) {
            for (size_t j = i + 1; j < avail.size() && a < 0; ++j) {
                if (!g.adjacent(avail[i], avail[j])) {
                    a = avail[i];
                    b = avail[j];
                }
            }
        }
        bool adjacent = a < 0;
        if (adjacent) {
            a = avail[0];
            b = avail[1];
            ++plan.adjacent_pairs;
        }
        plan.pairs.push_back(PairAssignment{w, a, b, true, adjacent});
        plan.members.set(a);
        plan.members.set(b);
    });
    return ok;
}

struct MainAttempt {
    std::optional<ConstructionTranscript> transcript;
    std::optional<ConstructionError> error;
};

// Support a vertex can always count on: per trimmed class, the smaller signed
// side among its class-driven neighbours (vertices whose state membership
// follows their class), plus one for every detached +/- pair fully inside its
// neighbourhood. Singleton-move vertices toggle freely and count for nothing.
struct SupportModel {
    std::vector<VertexSet> classes;  // trimmed classes
    VertexSet class_driven;          // members still moving with their class
    VertexSet plus;                  // effective signs
    std::vector<std::pair<int, int>> detached_pairs;

    int support(const Graph& g, int v) const {
        const VertexSet& nb = g.neighbours(v);
        int total = 0;
        for (const VertexSet& cls : classes) {
            VertexSet hit = cls & nb;
            hit &= class_driven;
            int in_class = hit.count();
            if (in_class == 0) continue;
            int p = hit.intersection_count(plus);
            total += std::min(p, in_class - p);
        }
        for (auto [a, b] : detached_pairs) {
            if (nb.test(a) && nb.test(b)) ++total;
        }
        return total;
    }

    // True iff some sign vector leaves u as v's only live neighbour: every
    // class of v's neighbourhood other than u's own source can be zeroed,
    // u's side meets the neighbourhood in u alone, and at most u's detached
    // pair sits wholly inside it.
    bool uniquely_supported_by(const Graph& g, int v, int u) const {
        const VertexSet& nb = g.neighbours(v);
        int pairs_inside = 0;
        bool u_in_pair = false;
        for (auto [a, b] : detached_pairs) {
            if (nb.test(a) && nb.test(b)) {
                ++pairs_inside;
                if (u == a || u == b) u_in_pair = true;
            }
        }
        if (u_in_pair) {
            if (pairs_inside > 1) return false;
        } else {
            if (!class_driven.test(u)) return false;
            if (pairs_inside > 0) return false;
        }
        bool u_plus = plus.test(u);
        for (const VertexSet& cls : classes) {
            VertexSet hit = cls & nb;
            hit &= class_driven;
            if (hit.empty()) continue;
            if (!u_in_pair && cls.test(u)) {
                VertexSet side = hit;
                if (u_plus) side &= plus;
                else side.subtract(plus);
                if (!(side.count() == 1 && side.test(u))) return false;
            } else {
                int in_class = hit.count();
                int p = hit.intersection_count(plus);
                if (std::min(p, in_class - p) != 0) return false;
            }
        }
        return true;
    }
};

MainAttempt attempt_main(const Graph& g, const MainParams& params, const VertexSet& d0,
                         const N0Plan& n0, RandomStream attempt_rng) {
    MainAttempt out;
    const int n = g.vertex_count();
    const double d1_thr = params.effective_d1_threshold(n);

    // Colour all of V, then trim the low-degree vertices and their assigned
    // pairs out of the classes.
    RandomStream colouring_rng = attempt_rng.split(stream::kColouring);
    EquitableColouring base = equitable_colouring(g, colouring_rng);

    std::vector<VertexSet> trimmed;
    std::vector<int> trimmed_index(base.count(), -1);
    for (int i = 0; i < base.count(); ++i) {
        VertexSet cls = base.classes[size_t(i)];
        cls.subtract(d0);
        cls.subtract(n0.members);
        if (cls.any()) {
            trimmed_index[size_t(i)] = int(trimmed.size());
            trimmed.push_back(std::move(cls));
        }
    }
    auto trimmed_class_of = [&](int v) {
        int i = trimmed_index[size_t(base.class_of[size_t(v)])];
        return (i >= 0 && trimmed[size_t(i)].test(v)) ? i : -1;
    };

    // Uniform random signs; repair pairs get one + and one - below.
    RandomStream sign_rng = attempt_rng.split(stream::kSigns);
    VertexSet plus(n);
    for (int v = 0; v < n; ++v) {
        if (sign_rng.next() & 1) plus.set(v);
    }

    VertexSet vprime = VertexSet::full(n);
    vprime.subtract(d0);

    SupportModel model;
    model.classes = trimmed;
    model.class_driven = VertexSet(n);
    for (const VertexSet& cls : trimmed) model.class_driven |= cls;
    model.plus = plus;
    for (const auto& p : n0.pairs) {
        if (p.split_moves) continue;
        model.plus.set(p.plus_vertex);
        model.plus.reset(p.minus_vertex);
        model.detached_pairs.emplace_back(p.plus_vertex, p.minus_vertex);
    }

    // Diagnostics on the raw colouring support, before any repair.
    double kappa_sum = 0.0;
    int kappa_min = -1, kappa_count = 0;
    {
        SignedColouring raw{trimmed, plus};
        vprime.for_each([&](int v) {
            if (n0.members.test(v)) return;
            int kv = kappa(g.neighbours(v), raw);
            kappa_sum += kv;
            ++kappa_count;
            if (kappa_min < 0 || kv < kappa_min) kappa_min = kv;
        });
    }

    // Repair to a fixed point: every unprotected vertex with deficient
    // support joins D1 and gets a neighbour pair, one + and one -. Same-class
    // pairs keep their class moves; otherwise a non-adjacent pair leaves the
    // classes and moves as a unit. Pair signs and detachments shift other
    // vertices' support, so the scan repeats until stable.
    VertexSet d1(n);
    VertexSet pair_member(n);
    for (const auto& p : n0.pairs) {
        pair_member.set(p.plus_vertex);
        pair_member.set(p.minus_vertex);
    }
    VertexSet detached(n);
    std::vector<PairAssignment> n1_pairs;
    int detached_pairs_count = 0;
    std::optional<ConstructionError> fail;
    // Vertices to repair regardless of their support value; fed by the
    // mutual-support scan below.
    VertexSet forced(n);

    for (int round = 0; round < 40 && !fail; ++round) {
        bool changed = false;
        for (int v = 0; v < n && !fail; ++v) {
            if (d0.test(v)) continue;
            if (d1.test(v) && !forced.test(v)) continue;
            if (double(model.support(g, v)) >= d1_thr && !forced.test(v)) continue;
            // v joins D1: a pair of free neighbours, one signed +, one -,
            // guards it in every state. Same-class pairs stay class-driven;
            // cross-class pairs must be non-adjacent and leave the classes.
            // Prefer choices that do not strand anyone else's support.
            std::vector<int> avail;
            g.neighbours(v).for_each([&](int u) {
                if (d0.test(u) || pair_member.test(u)) return;
                if (trimmed_class_of(u) < 0) return;
                avail.push_back(u);
            });
            struct Cand {
                int a, b;
                bool det;
            };
            std::vector<Cand> cands;
            for (size_t i = 0; i < avail.size(); ++i) {
                for (size_t j = i + 1; j < avail.size(); ++j) {
                    if (trimmed_class_of(avail[i]) == trimmed_class_of(avail[j])) {
                        cands.push_back({avail[i], avail[j], false});
                    }
                }
            }
            if (params.allow_detached_n1) {
                for (size_t i = 0; i < avail.size(); ++i) {
                    for (size_t j = i + 1; j < avail.size(); ++j) {
                        if (trimmed_class_of(avail[i]) != trimmed_class_of(avail[j]) &&
                            !g.adjacent(avail[i], avail[j])) {
                            cands.push_back({avail[i], avail[j], true});
                        }
                    }
                }
            }
            if (cands.empty()) {
                fail = ConstructionError{"pairing_failed", "n1", v,
                                         "no admissible neighbour pair for low-support vertex"};
                break;
            }
            // Count how many vertices a candidate would push below one
            // guaranteed neighbour; deficient fallout is repairable later but
            // more repairs burn scarce pair capacity.
            auto harm_of = [&](const Cand& c) {
                SupportModel probe = model;
                probe.plus.set(c.a);
                probe.plus.reset(c.b);
                if (c.det) {
                    probe.class_driven.reset(c.a);
                    probe.class_driven.reset(c.b);
                    probe.detached_pairs.emplace_back(c.a, c.b);
                }
                int harmed = 0;
                if (probe.support(g, c.a) < 1) ++harmed;
                if (probe.support(g, c.b) < 1) ++harmed;
                VertexSet affected = g.neighbours(c.a) | g.neighbours(c.b);
                affected.reset(v);
                affected.for_each([&](int w) {
                    if (d0.test(w) || d1.test(w)) return;
                    if (model.support(g, w) >= 1 && probe.support(g, w) < 1) ++harmed;
                });
                return harmed;
            };
            int chosen = -1, chosen_harm = 0;
            for (size_t ci = 0; ci < cands.size(); ++ci) {
                int h = harm_of(cands[size_t(ci)]);
                if (chosen < 0 || h < chosen_harm) {
                    chosen = int(ci);
                    chosen_harm = h;
                }
                if (h == 0) break;
            }
            const Cand& pick = cands[size_t(chosen)];
            int a = pick.a, b = pick.b;
            d1.set(v);
            forced.reset(v);
            n1_pairs.push_back(PairAssignment{v, a, b, pick.det, false});
            pair_member.set(a);
            pair_member.set(b);
            model.plus.set(a);
            model.plus.reset(b);
            if (pick.det) {
                detached.set(a);
                detached.set(b);
                model.class_driven.reset(a);
                model.class_driven.reset(b);
                model.detached_pairs.emplace_back(a, b);
                ++detached_pairs_count;
            }
            changed = true;
        }
        if (!changed && !fail && d1_thr >= 1.0) {
            // Two adjacent vertices whose guaranteed support is a single
            // neighbour each can end up as their own two-vertex component;
            // break such pairs by repairing one side.
            for (int v = 0; v < n; ++v) {
                if (d0.test(v) || forced.test(v)) continue;
                if (model.support(g, v) != 1) continue;
                bool risky = false;
                g.neighbours(v).for_each([&](int u) {
                    if (risky || u <= v) return;
                    if (d0.test(u)) return;
                    if (model.support(g, u) != 1) return;
                    if (model.uniquely_supported_by(g, v, u) &&
                        model.uniquely_supported_by(g, u, v)) {
                        risky = true;
                    }
                });
                if (risky) {
                    forced.set(v);
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    if (fail) {
        out.error = fail;
        return out;
    }

    // Final classes back the class moves; detached fallback pairs leave them.
    std::vector<VertexSet> final_classes;
    final_classes.reserve(trimmed.size());
    for (const VertexSet& cls : trimmed) {
        VertexSet f = cls;
        f.subtract(detached);
        if (f.any()) final_classes.push_back(std::move(f));
    }

    std::vector<VertexSet> moves(static_cast<size_t>(n), VertexSet(n));
    for (const VertexSet& cls : final_classes) {
        cls.for_each([&](int v) { moves[size_t(v)] = cls; });
    }
    auto singleton_move = [&](int v) {
        moves[size_t(v)] = VertexSet(n);
        moves[size_t(v)].set(v);
    };
    d0.for_each(singleton_move);
    auto give_pair_moves = [&](const PairAssignment& p) {
        if (p.split_moves) {
            singleton_move(p.plus_vertex);
            singleton_move(p.minus_vertex);
            return;
        }
        VertexSet pair(n);
        pair.set(p.plus_vertex);
        pair.set(p.minus_vertex);
        moves[size_t(p.plus_vertex)] = pair;
        moves[size_t(p.minus_vertex)] = pair;
    };
    for (const auto& p : n0.pairs) give_pair_moves(p);
    for (const auto& p : n1_pairs) {
        if (p.detached) give_pair_moves(p);
    }

    // Initial state: the effective + signs (repair pairs already one each).
    VertexSet s = model.plus;
    for (const auto& p : n0.pairs) {
        if (p.split_moves) {
            s.set(p.plus_vertex);
            s.reset(p.minus_vertex);
        }
    }

    VertexSet vsecond = vprime;
    vsecond.subtract(d1);

    ConstructionTranscript t;
    t.method = Method::main;
    t.n = n;
    t.s = s;
    t.moves = MoveSet::from_moves(std::move(moves));
    t.base_colouring = std::move(base);
    t.signing = SignedColouring{std::move(final_classes), s};
    t.d0 = d0;
    t.d1 = std::move(d1);
    t.vprime = std::move(vprime);
    t.vsecond = std::move(vsecond);
    t.n0_pairs = n0.pairs;
    t.n1_pairs = std::move(n1_pairs);
    t.diag.class_count = int(t.signing->classes.size());
    t.diag.d0_size = d0.count();
    t.diag.d1_size = t.d1->count();
    t.diag.n0_adjacent_pairs = n0.adjacent_pairs;
    t.diag.n1_detached_pairs = detached_pairs_count;
    t.diag.kappa_min = kappa_min < 0 ? 0.0 : double(kappa_min);
    t.diag.kappa_mean = kappa_count > 0 ? kappa_sum / kappa_count : 0.0;
    t.diag.d1_threshold = d1_thr;
    out.transcript = std::move(t);
    return out;
}

}  // namespace

ConstructionResult construct_main(const Graph& g, const MainParams& params, RandomStream& rng) {
    ConstructionResult result;
    const int n = g.vertex_count();
    if (n < 3) {
        result.error = ConstructionError{"min_degree", "precondition", -1, "graph too small"};
        return result;
    }
    if (g.min_degree() < 2) {
        int worst = 0;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) < g.degree(worst)) worst = v;
        }
        result.error = ConstructionError{"min_degree", "precondition", worst,
                                         "minimum degree below 2"};
        return result;
    }

    const double cutoff = params.d0_factor * std::log(double(n));
    VertexSet d0(n);
    for (int v = 0; v < n; ++v) {
        if (double(g.degree(v)) <= cutoff) d0.set(v);
    }

    N0Plan n0;
    ConstructionError n0_err;
    if (!plan_n0(g, d0, n0, n0_err)) {
        result.error = n0_err;
        return result;
    }

    std::optional<ConstructionError> last_error;
    int attempts = std::max(1, params.attempts);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        MainAttempt a = attempt_main(g, params, d0, n0, rng.split(uint64_t(attempt) + 101));
        if (a.transcript) {
            a.transcript->diag.attempts_used = attempt + 1;
            a.transcript->diag.d0_degree_cutoff = cutoff;
            assert(!validate_moves(g, a.transcript->moves));
            result.transcript = std::move(a.transcript);
            return result;
        }
        last_error = a.error;
    }
    result.error = last_error;
    return result;
}

ConstructionResult construct(const Graph& g, Method method, const MainParams& params,
                             RandomStream& rng) {
    switch (method) {
        case Method::dense:
            return construct_dense(g, rng);
        case Method::colouring: {
            RandomStream colouring_rng = rng.split(stream::kColouring);
            EquitableColouring c = equitable_colouring(g, colouring_rng);
            return construct_colouring(g, c, rng);
        }
        case Method::main:
            return construct_main(g, params, rng);
    }
    throw std::logic_error("unknown construction method");
}

}  // namespace legal
