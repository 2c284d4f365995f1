#include "legal/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace legal {

namespace {

// DSATUR: colour the vertex with the most distinctly-coloured neighbours
// first, ties by degree then index.
std::vector<int> dsatur(const Graph& g, int& count) {
    int n = g.vertex_count();
    std::vector<int> col(n, -1);
    std::vector<VertexSet> classes;
    std::vector<int> sat(n, 0);
    std::vector<uint64_t> seen_mask(n, 0);  // up to 64 tracked classes per vertex
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (col[v] >= 0) continue;
            if (best < 0 || sat[v] > sat[best] ||
                (sat[v] == sat[best] && g.degree(v) > g.degree(best))) {
                best = v;
            }
        }
        int c = 0;
        for (; c < int(classes.size()); ++c) {
            if (!classes[c].intersects(g.neighbours(best))) break;
        }
        if (c == int(classes.size())) classes.emplace_back(n);
        classes[c].set(best);
        col[best] = c;
        g.neighbours(best).for_each([&](int u) {
            if (col[u] >= 0 || c >= 64) return;
            if (!(seen_mask[size_t(u)] >> c & 1)) {
                seen_mask[size_t(u)] |= uint64_t{1} << c;
                ++sat[size_t(u)];
            }
        });
    }
    count = int(classes.size());
    return col;
}

// First-fit greedy over the given order; returns class index per vertex.
std::vector<int> greedy_first_fit(const Graph& g, const std::vector<int>& order, int& count) {
    int n = g.vertex_count();
    std::vector<int> col(n, -1);
    std::vector<VertexSet> classes;
    for (int v : order) {
        int c = 0;
        for (; c < int(classes.size()); ++c) {
            if (!classes[c].intersects(g.neighbours(v))) break;
        }
        if (c == int(classes.size())) classes.emplace_back(n);
        classes[c].set(v);
        col[v] = c;
    }
    count = int(classes.size());
    return col;
}

std::vector<std::vector<int>> group_by_class(const std::vector<int>& col, int count) {
    std::vector<std::vector<int>> blocks(count);
    for (int v = 0; v < int(col.size()); ++v) blocks[col[v]].push_back(v);
    return blocks;
}

// Culberson-style iterated greedy: re-running first-fit on any order that
// keeps classes contiguous never increases the class count.
std::vector<int> iterated_greedy(const Graph& g, RandomStream& rng, int iterations, int& count) {
    int n = g.vertex_count();
    std::vector<int> col = dsatur(g, count);
    std::vector<int> order(n);

    for (int it = 0; it < iterations; ++it) {
        auto blocks = group_by_class(col, count);
        std::vector<int> block_order(count);
        std::iota(block_order.begin(), block_order.end(), 0);
        switch (it % 4) {
            case 0:  // reverse class order
                std::reverse(block_order.begin(), block_order.end());
                break;
            case 1:  // largest classes first
                std::sort(block_order.begin(), block_order.end(), [&](int a, int b) {
                    if (blocks[a].size() != blocks[b].size())
                        return blocks[a].size() > blocks[b].size();
                    return a < b;
                });
                break;
            case 2:
                rng.shuffle(block_order);
                break;
            case 3:  // smallest classes first
                std::sort(block_order.begin(), block_order.end(), [&](int a, int b) {
                    if (blocks[a].size() != blocks[b].size())
                        return blocks[a].size() < blocks[b].size();
                    return a < b;
                });
                break;
        }
        order.clear();
        for (int b : block_order) {
            for (int v : blocks[size_t(b)]) order.push_back(v);
        }
        int new_count = 0;
        std::vector<int> new_col = greedy_first_fit(g, order, new_count);
        if (new_count <= count) {
            count = new_count;
            col = std::move(new_col);
        }
    }
    return col;
}

// Class assignment with conflict counts maintained incrementally. Any
// assignment whose sizes all sit in {base, base+1} is exactly equitable,
// since the total is fixed at n = m*base + (n mod m).
struct TabuState {
    int n = 0, m = 0, base = 0;
    std::vector<VertexSet> classes;
    std::vector<int> class_of;
    std::vector<int> size;
    std::vector<int> cnt;      // same-class neighbours per vertex
    long long conflicts = 0;   // conflicting edges
    std::vector<int> conflicted;      // vertices with cnt > 0
    std::vector<int> conflicted_pos;  // index in `conflicted`, or -1

    void sync_conflicted(int v) {
        bool in = conflicted_pos[v] >= 0;
        if (cnt[v] > 0 && !in) {
            conflicted_pos[v] = int(conflicted.size());
            conflicted.push_back(v);
        } else if (cnt[v] == 0 && in) {
            int pos = conflicted_pos[v];
            int last = conflicted.back();
            conflicted[size_t(pos)] = last;
            conflicted_pos[last] = pos;
            conflicted.pop_back();
            conflicted_pos[v] = -1;
        }
    }

    void rebuild(const Graph& g) {
        cnt.assign(size_t(n), 0);
        conflicts = 0;
        conflicted.clear();
        conflicted_pos.assign(size_t(n), -1);
        for (int v = 0; v < n; ++v) {
            cnt[size_t(v)] = g.neighbours(v).intersection_count(classes[size_t(class_of[v])]);
        }
        for (int v = 0; v < n; ++v) {
            conflicts += cnt[size_t(v)];
            sync_conflicted(v);
        }
        conflicts /= 2;
    }

    void relocate(const Graph& g, int v, int to) {
        int from = class_of[size_t(v)];
        classes[size_t(from)].reset(v);
        classes[size_t(to)].set(v);
        class_of[size_t(v)] = to;
        --size[size_t(from)];
        ++size[size_t(to)];
        conflicts -= cnt[size_t(v)];
        int new_cnt = 0;
        g.neighbours(v).for_each([&](int u) {
            int cu = class_of[size_t(u)];
            if (cu == from) {
                --cnt[size_t(u)];
                sync_conflicted(u);
            } else if (cu == to) {
                ++cnt[size_t(u)];
                ++new_cnt;
                sync_conflicted(u);
            }
        });
        cnt[size_t(v)] = new_cnt;
        conflicts += new_cnt;
        sync_conflicted(v);
    }
};

// Start a level with m classes from an (m+1)-class colouring: dissolve the
// smallest class, trim everything to the target sizes, and re-home the
// displaced vertices greedily.
TabuState init_level(const Graph& g, const std::vector<std::vector<int>>& prev, int m,
                     RandomStream& rng) {
    int n = g.vertex_count();
    TabuState st;
    st.n = n;
    st.m = m;
    st.base = n / m;
    int bonus = n % m;

    std::vector<int> order(prev.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (prev[size_t(a)].size() != prev[size_t(b)].size())
            return prev[size_t(a)].size() > prev[size_t(b)].size();
        return a < b;
    });

    st.classes.assign(size_t(m), VertexSet(n));
    st.class_of.assign(size_t(n), -1);
    st.size.assign(size_t(m), 0);
    std::vector<int> cap(size_t(m), st.base);
    for (int c = 0; c < bonus; ++c) cap[size_t(c)] = st.base + 1;

    std::vector<int> pool;
    for (int c = 0; c < m; ++c) {
        const auto& members = prev[size_t(order[size_t(c)])];
        for (size_t i = 0; i < members.size(); ++i) {
            int v = members[i];
            if (int(i) < cap[size_t(c)]) {
                st.classes[size_t(c)].set(v);
                st.class_of[size_t(v)] = c;
                ++st.size[size_t(c)];
            } else {
                pool.push_back(v);
            }
        }
    }
    for (size_t c = m; c < prev.size(); ++c) {
        const auto& members = prev[size_t(order[c])];
        pool.insert(pool.end(), members.begin(), members.end());
    }
    rng.shuffle(pool);
    for (int v : pool) {
        int best = -1, best_hits = 0;
        for (int c = 0; c < m; ++c) {
            if (st.size[size_t(c)] >= cap[size_t(c)]) continue;
            int hits = g.neighbours(v).intersection_count(st.classes[size_t(c)]);
            if (best < 0 || hits < best_hits) {
                best = c;
                best_hits = hits;
            }
        }
        st.classes[size_t(best)].set(v);
        st.class_of[size_t(v)] = best;
        ++st.size[size_t(best)];
    }
    st.rebuild(g);
    return st;
}

// Classic conflict-minimisation tabu search: single relocations of
// conflicted vertices, any class, no size discipline. Used to find a proper
// colouring at the level before the sizes are balanced.
bool tabucol_proper(const Graph& g, TabuState& st, long long max_iterations, RandomStream& rng) {
    const int n = st.n, m = st.m;
    std::vector<int> gamma(size_t(n) * size_t(m), 0);
    for (int v = 0; v < n; ++v) {
        g.neighbours(v).for_each(
            [&](int u) { ++gamma[size_t(v) * size_t(m) + size_t(st.class_of[size_t(u)])]; });
    }
    std::vector<long long> tabu_until(size_t(n) * size_t(m), -1);
    long long best_seen = st.conflicts;
    long long stagnant = 0;

    for (long long it = 0; it < max_iterations; ++it) {
        if (st.conflicts == 0) return true;
        if (stagnant > 60000) return false;  // level looks infeasible
        int best_v = -1, best_target = -1;
        long long best_delta = 0;
        int ties = 0;
        for (int vi = 0; vi < int(st.conflicted.size()); ++vi) {
            int v = st.conflicted[size_t(vi)];
            int a = st.class_of[size_t(v)];
            const int* row = &gamma[size_t(v) * size_t(m)];
            for (int c = 0; c < m; ++c) {
                if (c == a) continue;
                long long delta = (long long)row[c] - row[a];
                if (tabu_until[size_t(v) * size_t(m) + size_t(c)] > it &&
                    st.conflicts + delta >= best_seen) {
                    continue;
                }
                if (best_v < 0 || delta < best_delta) {
                    best_v = v;
                    best_target = c;
                    best_delta = delta;
                    ties = 1;
                } else if (delta == best_delta && rng.below(uint64_t(++ties)) == 0) {
                    best_v = v;
                    best_target = c;
                }
            }
        }
        if (best_v < 0) continue;
        int a = st.class_of[size_t(best_v)];
        tabu_until[size_t(best_v) * size_t(m) + size_t(a)] =
            it + (long long)rng.below(10) + (st.conflicts * 3) / 5;
        st.relocate(g, best_v, best_target);
        g.neighbours(best_v).for_each([&](int u) {
            --gamma[size_t(u) * size_t(m) + size_t(a)];
            ++gamma[size_t(u) * size_t(m) + size_t(best_target)];
        });
        if (st.conflicts < best_seen) {
            best_seen = st.conflicts;
            stagnant = 0;
        } else {
            ++stagnant;
        }
    }
    return st.conflicts == 0;
}

// Tabu search over single relocations and swaps. Class sizes may drift one
// step past the equitable profile (down to base-1, up to base+2) against a
// penalty; any assignment with all sizes in {base, base+1} is exactly
// equitable since the total is fixed. Neighbour counts per class live in a
// table updated on every move. Returns true when conflicts clear on an exact
// profile within the iteration budget.
bool tabu_solve(const Graph& g, TabuState& st, long long max_iterations, RandomStream& rng) {
    const int n = st.n, m = st.m;
    const int base = st.base;

    // gamma[v*m + c] = neighbours of v currently in class c
    std::vector<int> gamma(size_t(n) * size_t(m), 0);
    for (int v = 0; v < n; ++v) {
        g.neighbours(v).for_each(
            [&](int u) { ++gamma[size_t(v) * size_t(m) + size_t(st.class_of[size_t(u)])]; });
    }
    auto move_apply = [&](int v, int to) {
        int from = st.class_of[size_t(v)];
        st.relocate(g, v, to);
        g.neighbours(v).for_each([&](int u) {
            --gamma[size_t(u) * size_t(m) + size_t(from)];
            ++gamma[size_t(u) * size_t(m) + size_t(to)];
        });
    };
    auto size_penalty = [&](int sz) {
        if (sz > base + 1) return sz - (base + 1);
        if (sz < base) return base - sz;
        return 0;
    };
    long long penalty = 0;
    for (int c = 0; c < m; ++c) penalty += size_penalty(st.size[size_t(c)]);

    std::vector<long long> tabu_until(size_t(n) * size_t(m), -1);
    const long long kPenaltyWeight = 2;
    long long best_score = st.conflicts + kPenaltyWeight * penalty;
    long long stagnant = 0;
    const long long kStagnationLimit = 20000;
    long long total_stagnant = 0;

    for (long long it = 0; it < max_iterations; ++it) {
        if (st.conflicts == 0 && penalty == 0) return true;

        // Kick out of long plateaus: a burst of random size-respecting moves.
        if (++stagnant > kStagnationLimit) {
            stagnant = 0;
            total_stagnant += kStagnationLimit;
            if (total_stagnant > 80000) return false;  // level looks infeasible
            int kicks = 4 + int(rng.below(6));
            for (int k = 0; k < kicks; ++k) {
                int v = st.conflicted.empty()
                            ? int(rng.below(uint64_t(n)))
                            : st.conflicted[size_t(rng.below(st.conflicted.size()))];
                int a = st.class_of[size_t(v)];
                if (st.size[size_t(a)] <= std::max(0, base - 1)) continue;
                int c = int(rng.below(uint64_t(m)));
                if (c == a || st.size[size_t(c)] >= base + 2) continue;
                penalty -= size_penalty(st.size[size_t(a)]) + size_penalty(st.size[size_t(c)]);
                move_apply(v, c);
                penalty += size_penalty(st.size[size_t(a)]) + size_penalty(st.size[size_t(c)]);
            }
            best_score = st.conflicts + kPenaltyWeight * penalty;
        }

        int best_v = -1, best_target = -1, best_partner = -1;
        long long best_delta = 0;
        int ties = 0;
        long long score = st.conflicts + kPenaltyWeight * penalty;
        auto consider = [&](int v, int target, int partner, long long delta, bool tabu) {
            if (tabu && score + delta >= best_score) return;  // aspiration only
            if (best_v < 0 || delta < best_delta) {
                best_v = v;
                best_target = target;
                best_partner = partner;
                best_delta = delta;
                ties = 1;
            } else if (delta == best_delta && rng.below(uint64_t(++ties)) == 0) {
                best_v = v;
                best_target = target;
                best_partner = partner;
            }
        };
        // single relocation of v, with the size-penalty bookkeeping
        auto scan_vertex = [&](int v) {
            int a = st.class_of[size_t(v)];
            if (st.size[size_t(a)] <= std::max(0, base - 1)) return;
            const int* row = &gamma[size_t(v) * size_t(m)];
            long long out_gain = size_penalty(st.size[size_t(a)]) -
                                 size_penalty(st.size[size_t(a)] - 1);
            for (int c = 0; c < m; ++c) {
                if (c == a || st.size[size_t(c)] >= base + 2) continue;
                long long dpen = size_penalty(st.size[size_t(c)] + 1) -
                                 size_penalty(st.size[size_t(c)]) - out_gain;
                long long delta = (long long)row[c] - row[a] + kPenaltyWeight * dpen;
                bool tabu = tabu_until[size_t(v) * size_t(m) + size_t(c)] > it;
                consider(v, c, -1, delta, tabu);
            }
        };
        // swaps of v into its most promising few classes (size-neutral)
        auto scan_swaps = [&](int v) {
            int a = st.class_of[size_t(v)];
            const int* row = &gamma[size_t(v) * size_t(m)];
            constexpr int kSwapClasses = 6;
            int pick[kSwapClasses];
            int npick = 0;
            for (int c = 0; c < m; ++c) {
                if (c == a) continue;
                if (npick < kSwapClasses) {
                    pick[npick++] = c;
                } else {
                    int worst = 0;
                    for (int i = 1; i < npick; ++i) {
                        if (row[pick[i]] > row[pick[worst]]) worst = i;
                    }
                    if (row[c] < row[pick[worst]]) pick[worst] = c;
                }
            }
            for (int i = 0; i < npick; ++i) {
                int c = pick[i];
                bool tabu_vc = tabu_until[size_t(v) * size_t(m) + size_t(c)] > it;
                st.classes[size_t(c)].for_each([&](int u) {
                    int adj = g.adjacent(u, v) ? 1 : 0;
                    long long delta = (long long)row[c] - row[a] +
                                      gamma[size_t(u) * size_t(m) + size_t(a)] -
                                      gamma[size_t(u) * size_t(m) + size_t(c)] - 2 * adj;
                    bool tabu = tabu_vc || tabu_until[size_t(u) * size_t(m) + size_t(a)] > it;
                    consider(v, c, u, delta, tabu);
                });
            }
        };

        for (int vi = 0; vi < int(st.conflicted.size()); ++vi) {
            int v = st.conflicted[size_t(vi)];
            scan_vertex(v);
            scan_swaps(v);
        }
        if (st.conflicts == 0) {
            // exact-profile repair: drain any class above the base size
            for (int c = 0; c < m; ++c) {
                if (st.size[size_t(c)] > base) {
                    st.classes[size_t(c)].for_each([&](int v) { scan_vertex(v); });
                }
            }
        }

        if (best_v < 0) continue;
        int v = best_v;
        int a = st.class_of[size_t(v)];
        long long tenure = (long long)rng.below(10) + (st.conflicts * 3) / 5;
        tabu_until[size_t(v) * size_t(m) + size_t(a)] = it + tenure;
        if (best_partner < 0) {
            penalty -= size_penalty(st.size[size_t(a)]) +
                       size_penalty(st.size[size_t(best_target)]);
            move_apply(v, best_target);
            penalty += size_penalty(st.size[size_t(a)]) +
                       size_penalty(st.size[size_t(best_target)]);
        } else {
            int u = best_partner;
            int b = best_target;
            tabu_until[size_t(u) * size_t(m) + size_t(b)] = it + tenure;
            move_apply(v, b);
            move_apply(u, a);
        }
        long long now = st.conflicts + kPenaltyWeight * penalty;
        if (now < best_score) {
            best_score = now;
            stagnant = 0;
            total_stagnant = 0;
        }
    }
    return st.conflicts == 0 && penalty == 0;
}

struct EquitableBuild {
    std::vector<VertexSet> classes;
    std::vector<int> class_of;
    std::vector<int> size;
    int base = 0;        // floor(n/m)
    int bonus_left = 0;  // classes still allowed to reach base+1
};

// One capped-greedy attempt at exactly m classes. Every class may hold
// floor(n/m) vertices and at most n mod m classes may hold one more, so a
// completed assignment is equitable by construction. Vertices go to the most
// loaded admissible class; a depth-one eviction repair runs before giving up.
bool try_equitable(const Graph& g, int m, RandomStream& rng, EquitableBuild& out) {
    int n = g.vertex_count();
    out.base = n / m;
    out.bonus_left = n % m;
    out.classes.assign(size_t(m), VertexSet(n));
    out.class_of.assign(size_t(n), -1);
    out.size.assign(size_t(m), 0);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    auto has_room = [&](int c) {
        return out.size[size_t(c)] < out.base ||
               (out.size[size_t(c)] == out.base && out.bonus_left > 0);
    };
    auto place = [&](int v, int c) {
        if (out.size[size_t(c)] == out.base) --out.bonus_left;
        out.classes[size_t(c)].set(v);
        out.class_of[size_t(v)] = c;
        ++out.size[size_t(c)];
    };
    auto remove = [&](int v) {
        int c = out.class_of[size_t(v)];
        out.classes[size_t(c)].reset(v);
        out.class_of[size_t(v)] = -1;
        --out.size[size_t(c)];
        if (out.size[size_t(c)] == out.base) ++out.bonus_left;
    };
    auto fits = [&](int v, int c) {
        return has_room(c) && !out.classes[size_t(c)].intersects(g.neighbours(v));
    };

    for (int v : order) {
        int best = -1;
        for (int c = 0; c < m; ++c) {
            if (fits(v, c) && (best < 0 || out.size[size_t(c)] > out.size[size_t(best)])) {
                best = c;
            }
        }
        if (best >= 0) {
            place(v, best);
            continue;
        }
        // Repair, depth one: evict a single vertex, re-home it, then re-check
        // v's placement against the updated sizes before committing.
        auto try_evict = [&](int u, int c) {
            remove(u);
            for (int c2 = 0; c2 < m; ++c2) {
                if (c2 == c || !fits(u, c2)) continue;
                place(u, c2);
                if (fits(v, c)) {
                    place(v, c);
                    return true;
                }
                remove(u);
            }
            place(u, c);
            return false;
        };
        bool repaired = false;
        for (int c = 0; c < m && !repaired; ++c) {
            VertexSet blockers = out.classes[size_t(c)] & g.neighbours(v);
            int nblock = blockers.count();
            if (nblock == 1) {
                repaired = try_evict(blockers.lowest(), c);
            } else if (nblock == 0) {
                // Conflict-free but full: evict any member that can move.
                std::vector<int> members = out.classes[size_t(c)].to_vector();
                for (int u : members) {
                    if ((repaired = try_evict(u, c))) break;
                }
            }
        }
        if (!repaired) return false;
    }
    return true;
}

}  // namespace

EquitableColouring equitable_colouring(const Graph& g, RandomStream& rng) {
    int n = g.vertex_count();
    EquitableColouring result;
    if (n == 0) return result;

    int greedy_count = 0;
    RandomStream greedy_rng = rng.split(1);
    (void)iterated_greedy(g, greedy_rng, 24, greedy_count);

    // Base colouring: smallest class count where the capped greedy completes.
    RandomStream build_rng = rng.split(2);
    bool built = false;
    for (int m = greedy_count; m <= n && !built; ++m) {
        const int restarts = 12;
        for (int attempt = 0; attempt < restarts && !built; ++attempt) {
            EquitableBuild build;
            RandomStream attempt_rng = build_rng.split(uint64_t(m) * 64 + uint64_t(attempt));
            if (try_equitable(g, m, attempt_rng, build)) {
                result.classes = std::move(build.classes);
                result.class_of = std::move(build.class_of);
                built = true;
            }
        }
    }
    if (!built) throw std::logic_error("equitable colouring failed at m == n");

    // Descend class counts with tabu search while the levels keep solving.
    const bool debug = std::getenv("LEGAL_DEBUG_COLOURING") != nullptr;
    RandomStream descent_rng = rng.split(3);
    while (int(result.classes.size()) > 1) {
        int m = int(result.classes.size()) - 1;
        auto blocks = group_by_class(result.class_of, m + 1);
        bool solved = false;
        for (int attempt = 0; attempt < 2 && !solved; ++attempt) {
            RandomStream level_rng = descent_rng.split(uint64_t(m) * 8 + uint64_t(attempt));
            TabuState st = init_level(g, blocks, m, level_rng);
            long long before = st.conflicts;
            long long budget = 150000 + 250000 * attempt;
            // proper colouring first, then balance the class sizes
            if (tabucol_proper(g, st, budget, level_rng) &&
                tabu_solve(g, st, 80000, level_rng)) {
                result.classes = std::move(st.classes);
                result.class_of = std::move(st.class_of);
                solved = true;
            }
            if (debug) {
                std::fprintf(stderr, "level m=%d attempt=%d conflicts %lld -> %lld %s\n", m,
                             attempt, before, st.conflicts, solved ? "solved" : "stuck");
            }
        }
        if (!solved) break;
    }
    return result;
}

ClassCountCheck check_class_count(const EquitableColouring& c, int n, double c_chi) {
    if (n < 3) throw std::invalid_argument("check_class_count requires n >= 3");
    ClassCountCheck r;
    r.measured = c.count();
    r.bound = c_chi * std::log(double(n)) / std::log(std::log(double(n)));
    r.pass = double(r.measured) <= r.bound;
    return r;
}

bool colouring_is_valid(const Graph& g, const EquitableColouring& c) {
    int n = g.vertex_count();
    if (int(c.class_of.size()) != n) return false;
    VertexSet seen(n);
    int min_size = n + 1, max_size = 0;
    for (int idx = 0; idx < c.count(); ++idx) {
        const VertexSet& cls = c.classes[size_t(idx)];
        if (cls.empty()) return false;
        if (cls.intersects(seen)) return false;
        seen |= cls;
        int sz = cls.count();
        min_size = std::min(min_size, sz);
        max_size = std::max(max_size, sz);
        bool independent = true;
        cls.for_each([&](int v) {
            if (c.class_of[size_t(v)] != idx) independent = false;
            if (g.neighbours(v).intersects(cls)) independent = false;
        });
        if (!independent) return false;
    }
    if (seen != VertexSet::full(n)) return false;
    return max_size - min_size <= 1;
}

}  // namespace legal
