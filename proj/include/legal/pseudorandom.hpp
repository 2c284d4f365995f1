#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "legal/colouring.hpp"
#include "legal/graph.hpp"

namespace legal {

enum class PropertyVerdict { pass_exact, pass_heuristic, fail, skipped };

std::string verdict_name(PropertyVerdict v);

/// One of the eight deterministic hypotheses. A fail always carries a
/// witness re-checkable with graph primitives; pass_exact only comes from
/// exhaustive procedures.
struct PropertyResult {
    PropertyVerdict verdict = PropertyVerdict::skipped;
    std::string detail;
    std::optional<int> witness_vertex;
    std::optional<VertexSet> witness_set;
    std::optional<VertexSet> witness_set_b;
    std::optional<std::vector<int>> witness_path;

    bool passed() const {
        return verdict == PropertyVerdict::pass_exact ||
               verdict == PropertyVerdict::pass_heuristic;
    }
};

struct CheckConstants {
    double c_delta = 12.0;      // (ii): max degree <= c_delta * log n
    double d0_factor = 0.01;    // low-degree cutoff factor for (iii)/(iv)
    double c_chi = 8.0;         // (v): class count <= c_chi * log n / log log n
    double vi_threshold = -1.0; // (vi) induced-min-degree cutoff; negative ->
                                // (log log n)^2 / 2
    int exact_limit_n = 20;     // full enumeration cutoff for (vi)/(vii)
    long long heuristic_effort = 2000;
    uint64_t seed = 1;          // colouring + heuristic randomness
};

struct PropertyReport {
    int n = 0;
    double log_n = 0.0;
    double t = 0.0;  // 2 n log log n / log n
    int min_degree = 0;
    int max_degree = 0;
    int d0_size = 0;
    int class_count = 0;
    CheckConstants constants;
    std::array<PropertyResult, 8> properties;  // (i) .. (viii)

    bool all_pass() const;
    std::vector<int> failed_indices() const;  // 1-based property numbers
};

/// Evaluates all eight properties. Requires n >= 16 so log log n > 0.
PropertyReport check_all(const Graph& g, const CheckConstants& constants = {});

struct DenseCoreCheck {
    PropertyVerdict verdict = PropertyVerdict::skipped;
    std::optional<VertexSet> witness;  // A with |A| < t and min degree > d
};

/// (vi): every A with induced min degree > d must have size at least t.
/// Exact via peeling when the (floor(d)+1)-core is empty or already smaller
/// than t, or by subset enumeration for n <= exact_limit; otherwise a
/// randomized peel-and-restart heuristic.
DenseCoreCheck min_size_dense_core(const Graph& g, double d, double t,
                                   int exact_limit_n = 20, long long effort = 2000,
                                   uint64_t seed = 1);

struct DisjointSetsCheck {
    PropertyVerdict verdict = PropertyVerdict::skipped;
    std::optional<VertexSet> witness_a, witness_b;
};

/// (vii): any two disjoint sets of size >= t have a crossing edge. Exact by
/// enumeration over size-ceil(t) sets for n <= exact_limit (vacuous pass when
/// 2 ceil(t) > n); otherwise randomized growth of non-adjacent set pairs.
DisjointSetsCheck disjoint_sets_edge(const Graph& g, double t, int exact_limit_n = 20,
                                     long long effort = 2000, uint64_t seed = 1);

}  // namespace legal
