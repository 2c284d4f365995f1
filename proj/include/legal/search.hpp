#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legal/graph.hpp"
#include "legal/legal_system.hpp"

namespace legal {

enum class SearchVerdict { yes, no, unknown };

struct SearchResult {
    SearchVerdict verdict = SearchVerdict::unknown;
    std::optional<VertexSet> state;
    std::optional<MoveSet> moves;
    long long nodes_expanded = 0;
};

/// Exhaustive search for any legal system on a small graph. A yes comes with
/// a witness that verify(exhaustive) certifies; a no means every choice of
/// initial state and moves was refuted; unknown means the node budget ran
/// out. Practical up to n around 7.
SearchResult exists_legal_system(const Graph& g, long long node_budget = 100'000'000);

/// Minimum adjacency bitmask over all vertex permutations (pair_index bit
/// order). Intended for n <= 8.
uint64_t canonical_form(const Graph& g);

struct GraphClassEntry {
    int n = 0;
    uint64_t canon_bits = 0;
    std::string adjacency_bits;  // C(n,2) chars, pair_index order
    SearchVerdict verdict = SearchVerdict::unknown;
    std::optional<VertexSet> state;
    std::optional<MoveSet> moves;
};

/// One verdict per isomorphism class of graphs on n vertices, n <= 5.
/// Entries ordered by canonical bitmask.
std::vector<GraphClassEntry> classify_all_graphs(int n,
                                                 long long budget_per_graph = 100'000'000);

}  // namespace legal
