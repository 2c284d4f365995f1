#include "legal/pseudorandom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "legal/rng.hpp"

namespace legal {

std::string verdict_name(PropertyVerdict v) {
    switch (v) {
        case PropertyVerdict::pass_exact: return "pass_exact";
        case PropertyVerdict::pass_heuristic: return "pass_heuristic";
        case PropertyVerdict::fail: return "fail";
        case PropertyVerdict::skipped: return "skipped";
    }
    return "?";
}

bool PropertyReport::all_pass() const {
    for (const auto& p : properties) {
        if (!p.passed()) return false;
    }
    return true;
}

std::vector<int> PropertyReport::failed_indices() const {
    std::vector<int> out;
    for (int i = 0; i < 8; ++i) {
        if (!properties[size_t(i)].passed()) out.push_back(i + 1);
    }
    return out;
}

namespace {

// Iteratively strips vertices with fewer than dmin neighbours inside the set.
VertexSet peel_core(const Graph& g, VertexSet candidates, int dmin) {
    bool changed = true;
    while (changed && candidates.any()) {
        changed = false;
        std::vector<int> to_drop;
        candidates.for_each([&](int v) {
            if (g.neighbours(v).intersection_count(candidates) < dmin) to_drop.push_back(v);
        });
        for (int v : to_drop) candidates.reset(v);
        changed = !to_drop.empty();
    }
    return candidates;
}

int induced_min_degree(const Graph& g, const VertexSet& a) {
    int best = -1;
    a.for_each([&](int v) {
        int d = g.neighbours(v).intersection_count(a);
        if (best < 0 || d < best) best = d;
    });
    return best;
}

}  // namespace

DenseCoreCheck min_size_dense_core(const Graph& g, double d, double t, int exact_limit_n,
                                   long long effort, uint64_t seed) {
    if (d <= 0) throw std::invalid_argument("min_size_dense_core requires d > 0");
    DenseCoreCheck out;
    const int n = g.vertex_count();
    const int dmin = int(std::floor(d)) + 1;  // integer degrees: > d means >= dmin

    VertexSet core = peel_core(g, VertexSet::full(n), dmin);
    if (core.empty()) {
        out.verdict = PropertyVerdict::pass_exact;
        return out;
    }
    if (double(core.count()) < t) {
        out.verdict = PropertyVerdict::fail;
        out.witness = core;
        return out;
    }

    if (n <= exact_limit_n) {
        // Any violator is a subset of the core.
        std::vector<int> core_vs = core.to_vector();
        int k = int(core_vs.size());
        for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
            if (double(std::popcount(mask)) >= t) continue;
            VertexSet a(n);
            for (int i = 0; i < k; ++i) {
                if (mask & (uint64_t{1} << i)) a.set(core_vs[size_t(i)]);
            }
            if (induced_min_degree(g, a) >= dmin) {
                out.verdict = PropertyVerdict::fail;
                out.witness = std::move(a);
                return out;
            }
        }
        out.verdict = PropertyVerdict::pass_exact;
        return out;
    }

    // Randomized search for a small surviving sub-core: sample subsets of the
    // core, peel them, and keep anything stable below t. Small violators are
    // the realistic ones, so samples stay below 40 vertices.
    RandomStream rng = RandomStream(seed).split(stream::kSearch);
    std::vector<int> core_vs = core.to_vector();
    int limit = int(std::min<double>(std::min(t - 1, 40.0), double(core_vs.size())));
    for (long long trial = 0; trial < effort && limit > dmin; ++trial) {
        int size = dmin + 1 + int(rng.below(uint64_t(limit - dmin)));
        VertexSet a(n);
        // Seed vertex plus a random sample biased to its neighbourhood.
        int root = core_vs[size_t(rng.below(core_vs.size()))];
        a.set(root);
        VertexSet pool = g.neighbours(root) & core;
        while (a.count() < size) {
            std::vector<int> options = pool.any() ? pool.to_vector() : core_vs;
            int pick = options[size_t(rng.below(options.size()))];
            if (a.test(pick)) {
                pool.reset(pick);
                if (pool.empty()) break;
                continue;
            }
            a.set(pick);
            pool |= g.neighbours(pick) & core;
            pool.subtract(a);
        }
        VertexSet stable = peel_core(g, a, dmin);
        if (stable.any() && double(stable.count()) < t) {
            out.verdict = PropertyVerdict::fail;
            out.witness = std::move(stable);
            return out;
        }
    }
    out.verdict = PropertyVerdict::pass_heuristic;
    return out;
}

DisjointSetsCheck disjoint_sets_edge(const Graph& g, double t, int exact_limit_n,
                                     long long effort, uint64_t seed) {
    if (t < 1) throw std::invalid_argument("disjoint_sets_edge requires t >= 1");
    DisjointSetsCheck out;
    const int n = g.vertex_count();
    const int tmin = int(std::ceil(t));

    if (2 * tmin > n) {
        out.verdict = PropertyVerdict::pass_exact;  // two such sets cannot coexist
        return out;
    }

    if (n <= exact_limit_n) {
        // For each size-tmin set A, a partner exists iff at least tmin
        // vertices avoid A and all its neighbours.
        std::vector<int> comb(static_cast<size_t>(tmin));
        for (int i = 0; i < tmin; ++i) comb[size_t(i)] = i;
        for (;;) {
            VertexSet a(n), blocked(n);
            for (int v : comb) {
                a.set(v);
                blocked.set(v);
                blocked |= g.neighbours(v);
            }
            VertexSet free = blocked.complemented();
            if (free.count() >= tmin) {
                VertexSet b(n);
                int need = tmin;
                free.for_each([&](int v) {
                    if (need > 0) {
                        b.set(v);
                        --need;
                    }
                });
                out.verdict = PropertyVerdict::fail;
                out.witness_a = std::move(a);
                out.witness_b = std::move(b);
                return out;
            }
            // next combination
            int i = tmin - 1;
            while (i >= 0 && comb[size_t(i)] == n - tmin + i) --i;
            if (i < 0) break;
            ++comb[size_t(i)];
            for (int j = i + 1; j < tmin; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
        }
        out.verdict = PropertyVerdict::pass_exact;
        return out;
    }

    // Randomized growth of a mutually non-adjacent set pair.
    RandomStream rng = RandomStream(seed).split(stream::kSearch);
    for (long long trial = 0; trial < effort; ++trial) {
        int sa = int(rng.below(uint64_t(n)));
        int sb = int(rng.below(uint64_t(n)));
        if (sa == sb || g.adjacent(sa, sb)) continue;
        VertexSet a(n), b(n);
        a.set(sa);
        b.set(sb);
        VertexSet blocked_for_b = g.neighbours(sa);
        VertexSet blocked_for_a = g.neighbours(sb);
        bool grew = true;
        while (grew && (a.count() < tmin || b.count() < tmin)) {
            grew = false;
            // Grow the smaller side with the vertex adding fewest new blocks.
            bool grow_a = a.count() <= b.count();
            VertexSet candidates = (grow_a ? blocked_for_a : blocked_for_b).complemented();
            candidates.subtract(a);
            candidates.subtract(b);
            int best = -1, best_cost = -1;
            candidates.for_each([&](int v) {
                const VertexSet& other_block = grow_a ? blocked_for_b : blocked_for_a;
                int cost = g.neighbours(v).count() - g.neighbours(v).intersection_count(other_block);
                if (best < 0 || cost < best_cost || (cost == best_cost && v < best)) {
                    best = v;
                    best_cost = cost;
                }
            });
            if (best >= 0) {
                if (grow_a) {
                    a.set(best);
                    blocked_for_b |= g.neighbours(best);
                } else {
                    b.set(best);
                    blocked_for_a |= g.neighbours(best);
                }
                grew = true;
            }
        }
        if (a.count() >= tmin && b.count() >= tmin) {
            out.verdict = PropertyVerdict::fail;
            out.witness_a = std::move(a);
            out.witness_b = std::move(b);
            return out;
        }
    }
    out.verdict = PropertyVerdict::pass_heuristic;
    return out;
}

PropertyReport check_all(const Graph& g, const CheckConstants& constants) {
    const int n = g.vertex_count();
    if (n < 16) throw std::invalid_argument("check_all requires n >= 16");

    PropertyReport rep;
    rep.n = n;
    rep.constants = constants;
    rep.log_n = std::log(double(n));
    double loglog = std::log(rep.log_n);
    rep.t = 2.0 * n * loglog / rep.log_n;
    rep.min_degree = g.min_degree();
    rep.max_degree = g.max_degree();

    double d0_cutoff = constants.d0_factor * rep.log_n;
    VertexSet d0(n);
    for (int v = 0; v < n; ++v) {
        if (double(g.degree(v)) <= d0_cutoff) d0.set(v);
    }
    rep.d0_size = d0.count();

    // (i) minimum degree at least 2
    {
        auto& p = rep.properties[0];
        if (rep.min_degree >= 2) {
            p.verdict = PropertyVerdict::pass_exact;
        } else {
            p.verdict = PropertyVerdict::fail;
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) == rep.min_degree) {
                    p.witness_vertex = v;
                    break;
                }
            }
            p.detail = "vertex of degree " + std::to_string(rep.min_degree);
        }
    }
    // (ii) max degree O(log n)
    {
        auto& p = rep.properties[1];
        double bound = constants.c_delta * rep.log_n;
        if (double(rep.max_degree) <= bound) {
            p.verdict = PropertyVerdict::pass_exact;
        } else {
            p.verdict = PropertyVerdict::fail;
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) == rep.max_degree) {
                    p.witness_vertex = v;
                    break;
                }
            }
            p.detail = "max degree " + std::to_string(rep.max_degree) + " exceeds bound";
        }
    }
    // (iii) few low-degree vertices
    {
        auto& p = rep.properties[2];
        double bound = std::pow(double(n), 0.9);
        if (double(rep.d0_size) <= bound) {
            p.verdict = PropertyVerdict::pass_exact;
        } else {
            p.verdict = PropertyVerdict::fail;
            p.witness_set = d0;
            p.detail = "low-degree set of size " + std::to_string(rep.d0_size);
        }
    }
    // (iv) no short paths between low-degree vertices
    {
        auto& p = rep.properties[3];
        auto path = d0_short_path_violation(g, d0, 4);
        if (!path) {
            p.verdict = PropertyVerdict::pass_exact;
        } else {
            p.verdict = PropertyVerdict::fail;
            p.witness_path = *path;
            p.detail = "path of length " + std::to_string(path->size() - 1) +
                       " between low-degree vertices";
        }
    }
    // (v) equitable chromatic number O(log n / log log n)
    {
        auto& p = rep.properties[4];
        RandomStream rng = RandomStream(constants.seed).split(stream::kColouring);
        EquitableColouring col = equitable_colouring(g, rng);
        rep.class_count = col.count();
        auto chk = check_class_count(col, n, constants.c_chi);
        p.verdict = chk.pass ? PropertyVerdict::pass_exact : PropertyVerdict::fail;
        p.detail = std::to_string(chk.measured) + " classes vs bound " + std::to_string(chk.bound);
    }
    // (vi) dense subsets are large
    {
        auto& p = rep.properties[5];
        double d = constants.vi_threshold >= 0 ? constants.vi_threshold : loglog * loglog / 2.0;
        auto chk = min_size_dense_core(g, d, rep.t, constants.exact_limit_n,
                                       constants.heuristic_effort, constants.seed);
        p.verdict = chk.verdict;
        p.witness_set = chk.witness;
        if (chk.witness) {
            p.detail = "set of size " + std::to_string(chk.witness->count()) +
                       " with induced min degree > " + std::to_string(d);
        }
    }
    // (vii) disjoint large sets see an edge
    {
        auto& p = rep.properties[6];
        auto chk = disjoint_sets_edge(g, rep.t, constants.exact_limit_n,
                                      constants.heuristic_effort, constants.seed);
        p.verdict = chk.verdict;
        p.witness_set = chk.witness_a;
        p.witness_set_b = chk.witness_b;
    }
    // (viii) K_{2,3}-free
    {
        auto& p = rep.properties[7];
        auto w = k23_witness(g);
        if (!w) {
            p.verdict = PropertyVerdict::pass_exact;
        } else {
            p.verdict = PropertyVerdict::fail;
            VertexSet ws(n);
            ws.set(w->a);
            ws.set(w->b);
            VertexSet wb(n);
            for (int c : w->common) wb.set(c);
            p.witness_set = std::move(ws);
            p.witness_set_b = std::move(wb);
            p.detail = "vertices " + std::to_string(w->a) + "," + std::to_string(w->b) +
                       " share 3 neighbours";
        }
    }
    return rep;
}

}  // namespace legal
