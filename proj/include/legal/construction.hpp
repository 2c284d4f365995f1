#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legal/colouring.hpp"
#include "legal/graph.hpp"
#include "legal/legal_system.hpp"
#include "legal/rng.hpp"

namespace legal {

/// Disjoint independent vertex classes (possibly covering only part of the
/// graph) plus a +/- sign per vertex.
struct SignedColouring {
    std::vector<VertexSet> classes;
    VertexSet plus;  // vertices signed +; everyone else is -

    VertexSet side(int cls, bool plus_side) const {
        VertexSet s = classes[size_t(cls)];
        if (plus_side) s &= plus;
        else s.subtract(plus);
        return s;
    }
};

/// Minimum over per-class sign choices of |U ∩ C_i^±| summed across classes.
/// The choices are independent per class, so this equals the sum of
/// per-class minima.
int kappa(const VertexSet& u, const SignedColouring& sc);

enum class Method { dense, colouring, main };

std::string method_name(Method m);

/// A repaired vertex together with its two assigned neighbours; plus_vertex
/// carries sign +, minus_vertex sign -. A detached pair was removed from the
/// colour classes and moves as a unit under its own pair move; a non-detached
/// pair stays in one shared colour class. split_moves marks the adjacent-pair
/// fallback where the two partners get singleton moves instead.
struct PairAssignment {
    int repaired = -1;
    int plus_vertex = -1;
    int minus_vertex = -1;
    bool detached = false;
    bool split_moves = false;
};

struct ConstructionDiagnostics {
    int class_count = 0;
    int d0_size = 0;
    int d1_size = 0;
    int n0_adjacent_pairs = 0;  // pairs accepted adjacent (singleton moves)
    int n1_detached_pairs = 0;  // cross-class fallback pairs
    int attempts_used = 0;
    double kappa_min = 0.0;
    double kappa_mean = 0.0;
    double d1_threshold = 0.0;
    double d0_degree_cutoff = 0.0;
};

/// Full record of one construction run; enough to replay verification.
struct ConstructionTranscript {
    Method method = Method::dense;
    int n = 0;
    VertexSet s;
    MoveSet moves;

    // dense path
    std::optional<Matching> complement_matching;

    // colouring and main paths
    std::optional<EquitableColouring> base_colouring;
    std::optional<SignedColouring> signing;  // final classes backing class moves

    // main path
    std::optional<VertexSet> d0, d1, vprime, vsecond;
    std::vector<PairAssignment> n0_pairs, n1_pairs;

    ConstructionDiagnostics diag;
};

struct ConstructionError {
    std::string code;   // "graph_complete", "min_degree", "pairing_failed"
    std::string stage;  // "precondition", "n0", "n1"
    int vertex = -1;
    std::string message;
};

struct ConstructionResult {
    std::optional<ConstructionTranscript> transcript;
    std::optional<ConstructionError> error;

    bool ok() const { return transcript.has_value(); }
};

/// Complement-matching construction. Pair moves across a maximal matching of
/// the complement, singleton moves elsewhere, one matched endpoint per pair
/// in the initial state. Fails only on complete graphs.
ConstructionResult construct_dense(const Graph& g, RandomStream& rng);

/// Vertices whose complement-neighbourhood touches at least ceil(k/2) of the
/// k matching pairs; an empty result implies every orbit state of the dense
/// construction is connected. k = 0 counts as no violation.
std::vector<int> check_star_condition(const Graph& g, const Matching& complement_matching);

/// Colour-class moves with a fair-coin initial state.
ConstructionResult construct_colouring(const Graph& g, const EquitableColouring& colouring,
                                       RandomStream& rng);

struct MainParams {
    /// Degree cutoff for the low-degree repair set, as a multiple of log n.
    double d0_factor = 0.01;
    /// Kappa cutoff for the second repair set; negative means the default
    /// (log log n)^2.
    double d1_threshold = -1.0;
    /// Permit cross-class repair pairs that leave the colour classes and move
    /// as a unit under their own pair move (used only when no same-class pair
    /// is available).
    bool allow_detached_n1 = true;
    /// Re-draws of the colouring/sign space when pairing fails.
    int attempts = 1;

    double effective_d1_threshold(int n) const;
};

/// The repair construction: low-degree vertices get singleton moves, every
/// vertex whose guaranteed neighbourhood support falls short gets a
/// designated neighbour pair straddling both signs, everyone else moves with
/// their colour class; the initial state is the set of plus-signed vertices.
ConstructionResult construct_main(const Graph& g, const MainParams& params, RandomStream& rng);

/// Construction dispatch used by the CLI and experiment harness.
ConstructionResult construct(const Graph& g, Method method, const MainParams& params,
                             RandomStream& rng);

}  // namespace legal
