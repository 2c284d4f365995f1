#include "legal/random_models.hpp"

#include <stdexcept>

namespace legal {

long long pair_index(int u, int v, int n) {
    // Pairs (0,1),(0,2),...,(0,n-1),(1,2),... in order.
    return (long long)u * n - (long long)u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> index_pair(long long k, int n) {
    int u = 0;
    long long row = n - 1;
    while (k >= row) {
        k -= row;
        --row;
        ++u;
    }
    return {u, int(u + 1 + k)};
}

Graph gnp(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    RandomStream rng = RandomStream(seed).split(stream::kGraph);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) g.add_edge(u, v);
        }
    }
    return g;
}

namespace {

std::vector<long long> shuffled_pair_prefix(int n, long long m, RandomStream& rng) {
    long long total = (long long)n * (n - 1) / 2;
    std::vector<long long> idx(static_cast<size_t>(total));
    for (long long k = 0; k < total; ++k) idx[size_t(k)] = k;
    for (long long i = 0; i < m; ++i) {
        long long j = i + (long long)rng.below(uint64_t(total - i));
        std::swap(idx[size_t(i)], idx[size_t(j)]);
    }
    return idx;
}

}  // namespace

Graph gnm(int n, long long m, uint64_t seed) {
    long long total = (long long)n * (n - 1) / 2;
    if (m < 0 || m > total) throw std::invalid_argument("m out of range");
    RandomStream rng = RandomStream(seed).split(stream::kGraph);
    auto idx = shuffled_pair_prefix(n, m, rng);
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        auto [u, v] = index_pair(idx[size_t(i)], n);
        g.add_edge(u, v);
    }
    return g;
}

Graph ProcessTrace::graph_at(long long t) const {
    if (t < 0 || t > (long long)edge_order.size()) throw std::out_of_range("process time");
    Graph g(n);
    for (long long i = 0; i < t; ++i) g.add_edge(edge_order[size_t(i)].first, edge_order[size_t(i)].second);
    return g;
}

ProcessTrace process(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("process requires n >= 3");
    ProcessTrace tr;
    tr.n = n;
    tr.seed = seed;
    RandomStream rng = RandomStream(seed).split(stream::kGraph);
    long long total = (long long)n * (n - 1) / 2;
    auto idx = shuffled_pair_prefix(n, total, rng);

    std::vector<int> degree(n, 0);
    int below_two = n;  // vertices with degree < 2
    tr.edge_order.reserve(size_t(total));
    for (long long t = 0; t < total; ++t) {
        auto [u, v] = index_pair(idx[size_t(t)], n);
        tr.edge_order.emplace_back(u, v);
        if (++degree[u] == 2) --below_two;
        if (++degree[v] == 2) --below_two;
        if (below_two == 0 && tr.t2 < 0) tr.t2 = t + 1;
    }
    return tr;
}

}  // namespace legal
