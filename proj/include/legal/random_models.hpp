#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "legal/graph.hpp"
#include "legal/rng.hpp"

namespace legal {

/// Lexicographic index of the pair (u,v), u < v, over all C(n,2) pairs.
/// This ordering is part of the reproducibility contract.
long long pair_index(int u, int v, int n);
std::pair<int, int> index_pair(long long k, int n);

/// G(n,p): each pair independently an edge with probability p.
Graph gnp(int n, double p, uint64_t seed);

/// G(n,m): m edges uniformly at random, via partial shuffle of the pair
/// list. For a fixed seed the edge sets nest as m grows.
Graph gnm(int n, long long m, uint64_t seed);

/// Random graph process: a uniform permutation of all pairs, with the first
/// hitting time of minimum degree 2.
struct ProcessTrace {
    int n = 0;
    uint64_t seed = 0;
    std::vector<std::pair<int, int>> edge_order;  // all C(n,2) pairs
    long long t2 = -1;                            // first t with min degree >= 2

    Graph graph_at(long long t) const;
};

ProcessTrace process(int n, uint64_t seed);

}  // namespace legal
