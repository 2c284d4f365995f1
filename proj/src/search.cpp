#include "legal/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "legal/random_models.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legal {

namespace {

// The search works on uint32 bitmask graphs; n is at most a word here.
constexpr int kMaskLimit = 25;

struct MaskGraph {
    int n = 0;
    uint32_t full = 0;
    std::array<uint32_t, kMaskLimit> adj{};
};

MaskGraph to_mask_graph(const Graph& g) {
    MaskGraph mg;
    mg.n = g.vertex_count();
    if (mg.n > kMaskLimit) throw std::invalid_argument("graph too large for exhaustive search");
    mg.full = mg.n == 32 ? ~uint32_t{0} : (uint32_t{1} << mg.n) - 1;
    for (int v = 0; v < mg.n; ++v) {
        uint32_t row = 0;
        g.neighbours(v).for_each([&](int u) { row |= uint32_t{1} << u; });
        mg.adj[size_t(v)] = row;
    }
    return mg;
}

bool mask_connected(uint32_t s, const MaskGraph& g) {
    if (s == 0) return false;
    uint32_t visited = s & (~s + 1);  // lowest bit
    for (;;) {
        uint32_t next = visited;
        uint32_t w = visited;
        while (w) {
            int v = std::countr_zero(w);
            w &= w - 1;
            next |= g.adj[size_t(v)] & s;
        }
        if (next == visited) break;
        visited = next;
    }
    return visited == s;
}

bool mask_legal_state(uint32_t s, const MaskGraph& g) {
    uint32_t comp = g.full & ~s;
    return s != 0 && comp != 0 && mask_connected(s, g) && mask_connected(comp, g);
}

// Reduced GF(2) basis over uint32 with lowest-set-bit pivots.
struct MaskBasis {
    std::vector<uint32_t> rows;

    uint32_t reduce(uint32_t x) const {
        for (uint32_t b : rows) {
            if (x & (b & (~b + 1))) x ^= b;
        }
        return x;
    }
    bool contains(uint32_t x) const { return reduce(x) == 0; }
};

struct MaskSearch {
    MaskGraph g;
    long long budget = 0;
    long long nodes = 0;
    bool exceeded = false;

    uint32_t s_mask = 0;
    std::vector<int> order;                        // vertices, decreasing degree
    std::vector<std::vector<uint32_t>> candidates;  // per order position

    std::vector<uint32_t> orbit;
    MaskBasis basis;
    std::vector<uint32_t> assigned;  // move per order position

    bool found = false;
    std::vector<uint32_t> found_moves;  // indexed by vertex

    bool dfs(size_t depth) {
        if (found || exceeded) return found;
        if (depth == order.size()) {
            found = true;
            found_moves.assign(size_t(g.n), 0);
            for (size_t i = 0; i < order.size(); ++i) {
                found_moves[size_t(order[i])] = assigned[i];
            }
            return true;
        }
        bool tried_dependent = false;
        for (uint32_t cand : candidates[depth]) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            if (basis.contains(cand)) {
                // Any span-dependent move yields the same final span, hence
                // the same orbit; one representative suffices.
                if (tried_dependent) continue;
                tried_dependent = true;
                assigned[depth] = cand;
                if (dfs(depth + 1)) return true;
                continue;
            }
            size_t old_orbit = orbit.size();
            bool ok = true;
            for (size_t i = 0; i < old_orbit && ok; ++i) {
                uint32_t state = orbit[i] ^ cand;
                if (!mask_legal_state(state, g)) {
                    // Refuting span element, re-checkable: state xor s_mask.
                    ok = false;
                } else if ((g.full & ~state) < s_mask || state < s_mask) {
                    // A smaller legal state sits in this orbit; the outer
                    // loop already covered the whole branch from there.
                    ok = false;
                }
            }
            if (!ok) continue;
            for (size_t i = 0; i < old_orbit; ++i) orbit.push_back(orbit[i] ^ cand);
            basis.rows.push_back(basis.reduce(cand));
            assigned[depth] = cand;
            if (dfs(depth + 1)) return true;
            basis.rows.pop_back();
            orbit.resize(old_orbit);
        }
        return false;
    }
};

std::vector<uint32_t> move_candidates(const MaskGraph& g, int v) {
    uint32_t allowed = g.full & ~g.adj[size_t(v)] & ~(uint32_t{1} << v);
    std::vector<uint32_t> cands;
    cands.reserve(size_t(1) << std::popcount(allowed));
    uint32_t sub = 0;
    for (;;) {
        cands.push_back(sub | (uint32_t{1} << v));
        if (sub == allowed) break;
        sub = (sub - allowed) & allowed;
    }
    std::sort(cands.begin(), cands.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return cands;
}

VertexSet mask_to_set(uint32_t mask, int n) {
    VertexSet s(n);
    while (mask) {
        s.set(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

}  // namespace

SearchResult exists_legal_system(const Graph& g, long long node_budget) {
    SearchResult result;
    const int n = g.vertex_count();
    MaskGraph mg = to_mask_graph(g);

    MaskSearch search;
    search.g = mg;
    search.budget = node_budget;
    search.order.resize(size_t(n));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    search.candidates.reserve(size_t(n));
    for (int v : search.order) search.candidates.push_back(move_candidates(mg, v));
    search.assigned.assign(size_t(n), 0);

    for (uint32_t s = 1; s + 1 < (uint32_t{1} << n) && !search.found; ++s) {
        uint32_t comp = mg.full & ~s;
        if (comp < s) continue;  // enumerate each complement pair once
        if (!mask_legal_state(s, mg)) continue;
        search.s_mask = s;
        search.orbit.assign(1, s);
        search.basis.rows.clear();
        search.dfs(0);
        if (search.exceeded) break;
    }

    result.nodes_expanded = search.nodes;
    if (search.found) {
        result.verdict = SearchVerdict::yes;
        result.state = mask_to_set(search.s_mask, n);
        std::vector<VertexSet> moves;
        moves.reserve(size_t(n));
        for (uint32_t m : search.found_moves) moves.push_back(mask_to_set(m, n));
        result.moves = MoveSet::from_moves(std::move(moves));
    } else if (search.exceeded) {
        result.verdict = SearchVerdict::unknown;
    } else {
        result.verdict = SearchVerdict::no;
    }
    return result;
}

uint64_t canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_form supports n <= 8");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    auto edge_list = g.edges();
    do {
        uint64_t mask = 0;
        for (auto [u, v] : edge_list) {
            int a = perm[size_t(u)], b = perm[size_t(v)];
            if (a > b) std::swap(a, b);
            mask |= uint64_t{1} << pair_index(a, b, n);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<GraphClassEntry> classify_all_graphs(int n, long long budget_per_graph) {
    if (n < 1 || n > 5) throw std::invalid_argument("classification supports 1 <= n <= 5");
    long long pairs = (long long)n * (n - 1) / 2;

    std::vector<uint64_t> reps;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
        Graph g(n);
        for (long long k = 0; k < pairs; ++k) {
            if (mask & (uint64_t{1} << k)) {
                auto [u, v] = index_pair(k, n);
                g.add_edge(u, v);
            }
        }
        if (canonical_form(g) == mask) reps.push_back(mask);
    }

    std::vector<GraphClassEntry> table(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < (long long)reps.size(); ++i) {
        uint64_t mask = reps[size_t(i)];
        Graph g(n);
        for (long long k = 0; k < pairs; ++k) {
            if (mask & (uint64_t{1} << k)) {
                auto [u, v] = index_pair(k, n);
                g.add_edge(u, v);
            }
        }
        GraphClassEntry e;
        e.n = n;
        e.canon_bits = mask;
        e.adjacency_bits.assign(size_t(pairs), '0');
        for (long long k = 0; k < pairs; ++k) {
            if (mask & (uint64_t{1} << k)) e.adjacency_bits[size_t(k)] = '1';
        }
        SearchResult r = exists_legal_system(g, budget_per_graph);
        e.verdict = r.verdict;
        e.state = r.state;
        e.moves = r.moves;
        table[size_t(i)] = std::move(e);
    }
    return table;
}

}  // namespace legal
