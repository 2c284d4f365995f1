#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "legal/graph.hpp"
#include "legal/rng.hpp"
#include "legal/vertex_set.hpp"

namespace legal {

/// Reduced GF(2) basis of the span of the given vectors. Pivot of each basis
/// vector is its lowest set bit; pivots are unique across the basis and
/// cleared from every other basis vector, so the basis of a span is canonical.
/// Returned sorted by pivot.
std::vector<VertexSet> span_basis(std::span<const VertexSet> vectors);

/// True iff v lies in the span of a reduced basis (eliminates pivots in turn).
bool in_span(const VertexSet& v, std::span<const VertexSet> basis);

/// One move per vertex plus the reduced basis of the span of all moves.
struct MoveSet {
    std::vector<VertexSet> moves;   // indexed by vertex
    std::vector<VertexSet> basis;   // reduced span basis

    int rank() const { return int(basis.size()); }

    static MoveSet from_moves(std::vector<VertexSet> moves);
};

struct MoveViolation {
    enum class Kind { missing_own_vertex, contains_neighbour };
    int vertex;
    Kind kind;

    std::string describe() const;
};

/// Checks v in M_v and N(v) disjoint from M_v at every vertex.
std::optional<MoveViolation> validate_moves(const Graph& g, const MoveSet& m);

/// True iff both s and its complement are non-empty and induce connected
/// subgraphs.
bool is_legal_state(const Graph& g, const VertexSet& s);

/// True iff the all-ones vector lies in the span (so the orbit of any state
/// is closed under complementation).
bool orbit_closed_under_complement(const MoveSet& m, int n);

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::exhaustive;
    long long sample_count = 10000;
    int max_exhaustive_rank = 24;
    bool parallel = true;          // exhaustive scan only; results are identical either way
    uint64_t sample_seed = 0;      // stream for sampled span elements
};

struct RankCapExceeded : std::runtime_error {
    RankCapExceeded(int rank, int cap)
        : std::runtime_error("exhaustive verification needs rank " + std::to_string(rank) +
                             " <= cap " + std::to_string(cap) + "; use sampled mode") {}
};

/// Outcome of a verification run. A counterexample is re-checkable on its
/// own: g is in the span, state = S xor g, and state fails is_legal_state.
struct LegalityCertificate {
    VerifyMode mode = VerifyMode::exhaustive;
    long long sample_count = 0;    // sampled mode only
    int rank = 0;
    bool legal = false;
    std::optional<VertexSet> counterexample_g;
    std::optional<VertexSet> counterexample_state;
    long long states_checked = 0;
};

/// Checks that every span translate of s is a legal state. Exhaustive mode
/// walks all 2^rank span elements in Gray-code order (first counterexample in
/// that order is reported, independent of thread count). Sampled mode checks
/// sample_count uniform span elements, always including 0 and, when the
/// all-ones vector is in the span, that vector.
LegalityCertificate verify(const Graph& g, const VertexSet& s, const MoveSet& m,
                           const VerifyOptions& opt = {});

/// Re-derives a counterexample certificate's claims from scratch.
bool recheck_certificate(const Graph& g, const VertexSet& s, const MoveSet& m,
                         const LegalityCertificate& cert);

}  // namespace legal
