#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "legal/rng.hpp"
#include "legal/vertex_set.hpp"

namespace legal {

/// Immutable-after-build simple undirected graph with one neighbour bitset
/// per vertex. Vertices are dense indices 0..n-1. Safe to share across
/// threads once built.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }

    /// Adds {u,v}; no-op if already present. Rejects self-loops.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    int min_degree() const;
    int max_degree() const;

    Graph complement() const;

    /// True iff s is non-empty and the subgraph induced on s is connected.
    /// Singletons are connected; the empty set is not.
    bool is_connected_subset(const VertexSet& s) const;

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    long long edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

/// Vertex-disjoint set of edges of some graph.
struct Matching {
    std::vector<std::pair<int, int>> pairs;

    VertexSet covered(int n) const {
        VertexSet s(n);
        for (auto [u, v] : pairs) {
            s.set(u);
            s.set(v);
        }
        return s;
    }
};

/// Greedy maximal matching over a seeded random edge order. Maximal, not
/// maximum; deterministic per stream state.
Matching greedy_maximal_matching(const Graph& g, RandomStream& rng);

/// Two vertices plus three of their common neighbours.
struct K23Witness {
    int a = -1, b = -1;
    std::array<int, 3> common{-1, -1, -1};
};

/// Returns a witness iff some vertex pair has at least 3 common neighbours.
std::optional<K23Witness> k23_witness(const Graph& g);

/// Looks for a path of length 1..maxlen joining two distinct vertices of d0;
/// returns the vertex sequence of one such path, or nullopt.
std::optional<std::vector<int>> d0_short_path_violation(const Graph& g, const VertexSet& d0,
                                                        int maxlen = 4);

}  // namespace legal
