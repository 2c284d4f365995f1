#include "legal/legal_system.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legal {

std::vector<VertexSet> span_basis(std::span<const VertexSet> vectors) {
    std::vector<VertexSet> basis;       // kept sorted by pivot
    std::vector<int> pivots;
    for (const VertexSet& raw : vectors) {
        VertexSet v = raw;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (v.test(pivots[i])) v ^= basis[i];
        }
        int p = v.lowest();
        if (p < 0) continue;
        // Back-eliminate the new pivot from existing rows.
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].test(p)) basis[i] ^= v;
        }
        size_t at = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
        basis.insert(basis.begin() + at, std::move(v));
        pivots.insert(pivots.begin() + at, p);
    }
    return basis;
}

bool in_span(const VertexSet& v, std::span<const VertexSet> basis) {
    VertexSet r = v;
    for (const VertexSet& b : basis) {
        if (r.test(b.lowest())) r ^= b;
    }
    return r.empty();
}

MoveSet MoveSet::from_moves(std::vector<VertexSet> moves) {
    MoveSet m;
    m.basis = span_basis(moves);
    m.moves = std::move(moves);
    return m;
}

std::string MoveViolation::describe() const {
    switch (kind) {
        case Kind::missing_own_vertex:
            return "move at vertex " + std::to_string(vertex) + " does not contain the vertex";
        case Kind::contains_neighbour:
            return "move at vertex " + std::to_string(vertex) + " contains a neighbour";
    }
    return "unknown violation";
}

std::optional<MoveViolation> validate_moves(const Graph& g, const MoveSet& m) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!m.moves[v].test(v)) {
            return MoveViolation{v, MoveViolation::Kind::missing_own_vertex};
        }
        if (m.moves[v].intersects(g.neighbours(v))) {
            return MoveViolation{v, MoveViolation::Kind::contains_neighbour};
        }
    }
    return std::nullopt;
}

bool is_legal_state(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    VertexSet comp = s.complemented();
    if (comp.empty()) return false;
    return g.is_connected_subset(s) && g.is_connected_subset(comp);
}

bool orbit_closed_under_complement(const MoveSet& m, int n) {
    return in_span(VertexSet::full(n), m.basis);
}

namespace {

// Applies the Gray-code combination of `index` to base: state = base xor
// (xor of basis[j] over set bits of gray(index)).
VertexSet state_at(const VertexSet& base, const std::vector<VertexSet>& basis, uint64_t index) {
    VertexSet s = base;
    uint64_t gray = index ^ (index >> 1);
    while (gray) {
        int j = std::countr_zero(gray);
        gray &= gray - 1;
        s ^= basis[j];
    }
    return s;
}

struct ScanResult {
    uint64_t first_bad = ~uint64_t{0};  // Gray index of first illegal state
};

// Walks Gray indices [lo, hi); complement_in_span enables the single-sided
// check (every orbit state's complement is itself an orbit state, so
// non-empty + connected per state suffices). stop_before allows early exit
// once a smaller counterexample index is known globally.
void scan_range(const Graph& g, const VertexSet& base, const std::vector<VertexSet>& basis,
                uint64_t lo, uint64_t hi, bool complement_in_span,
                std::atomic<uint64_t>& stop_before, ScanResult& out) {
    VertexSet state = state_at(base, basis, lo);
    for (uint64_t i = lo; i < hi; ++i) {
        if (i > lo) {
            state ^= basis[std::countr_zero(i)];
        }
        if ((i & 0x3FF) == 0 && lo >= stop_before.load(std::memory_order_relaxed)) return;
        bool ok = complement_in_span ? (state.any() && g.is_connected_subset(state))
                                     : is_legal_state(g, state);
        if (!ok) {
            out.first_bad = i;
            uint64_t cur = stop_before.load(std::memory_order_relaxed);
            while (i < cur && !stop_before.compare_exchange_weak(cur, i)) {
            }
            return;
        }
    }
}

VertexSet combination_of_gray(const std::vector<VertexSet>& basis, uint64_t index, int n) {
    VertexSet zero(n);
    return state_at(zero, basis, index);
}

}  // namespace

LegalityCertificate verify(const Graph& g, const VertexSet& s, const MoveSet& m,
                           const VerifyOptions& opt) {
    const int n = g.vertex_count();
    const int rank = m.rank();
    LegalityCertificate cert;
    cert.mode = opt.mode;
    cert.rank = rank;

    if (opt.mode == VerifyMode::exhaustive) {
        if (rank > opt.max_exhaustive_rank) throw RankCapExceeded(rank, opt.max_exhaustive_rank);

        const uint64_t total = uint64_t{1} << rank;
        const bool closed = orbit_closed_under_complement(m, n);
        std::atomic<uint64_t> stop_before{~uint64_t{0}};

        int nchunks = 1;
#ifdef _OPENMP
        if (opt.parallel && total >= (uint64_t{1} << 16)) {
            nchunks = int(std::min(omp_get_max_threads() * 8, 256));
        }
#endif
        std::vector<ScanResult> results(nchunks);
        uint64_t chunk = (total + nchunks - 1) / nchunks;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (nchunks > 1)
#endif
        for (int c = 0; c < nchunks; ++c) {
            uint64_t lo = uint64_t(c) * chunk;
            uint64_t hi = std::min(total, lo + chunk);
            if (lo < hi) scan_range(g, s, m.basis, lo, hi, closed, stop_before, results[c]);
        }

        uint64_t first_bad = ~uint64_t{0};
        for (const auto& r : results) first_bad = std::min(first_bad, r.first_bad);

        if (first_bad == ~uint64_t{0}) {
            cert.legal = true;
            cert.states_checked = (long long)total;
        } else {
            cert.legal = false;
            cert.states_checked = (long long)first_bad + 1;
            VertexSet gvec = combination_of_gray(m.basis, first_bad, n);
            cert.counterexample_state = s ^ gvec;
            cert.counterexample_g = std::move(gvec);
        }
        return cert;
    }

    // Sampled mode.
    cert.sample_count = opt.sample_count;
    RandomStream rng = RandomStream(opt.sample_seed).split(stream::kSampling);
    const bool closed = orbit_closed_under_complement(m, n);
    long long checked = 0;
    auto check = [&](const VertexSet& gvec) -> bool {
        ++checked;
        VertexSet state = s ^ gvec;
        if (!is_legal_state(g, state)) {
            cert.legal = false;
            cert.counterexample_g = gvec;
            cert.counterexample_state = state;
            cert.states_checked = checked;
            return false;
        }
        return true;
    };

    if (!check(VertexSet(n))) return cert;
    if (closed) {
        if (!check(VertexSet::full(n))) return cert;
    }
    for (long long i = checked; i < opt.sample_count; ++i) {
        VertexSet gvec(n);
        for (const VertexSet& b : m.basis) {
            if (rng.next() & 1) gvec ^= b;
        }
        if (!check(gvec)) return cert;
    }
    cert.legal = true;
    cert.states_checked = checked;
    return cert;
}

bool recheck_certificate(const Graph& g, const VertexSet& s, const MoveSet& m,
                         const LegalityCertificate& cert) {
    if (cert.legal) return true;
    if (!cert.counterexample_g || !cert.counterexample_state) return false;
    const VertexSet& gvec = *cert.counterexample_g;
    if (!in_span(gvec, m.basis)) return false;
    if (*cert.counterexample_state != (s ^ gvec)) return false;
    return !is_legal_state(g, *cert.counterexample_state);
}

}  // namespace legal
