#pragma once

#include <vector>

#include "legal/graph.hpp"
#include "legal/rng.hpp"
#include "legal/vertex_set.hpp"

namespace legal {

/// Proper colouring whose class sizes differ by at most one.
struct EquitableColouring {
    std::vector<VertexSet> classes;
    std::vector<int> class_of;

    int count() const { return int(classes.size()); }
};

/// Greedy colouring in seeded random order with least-loaded class choice,
/// improved by iterated re-greedy over class blocks, then rebuilt under hard
/// per-class size caps (with single-step repairs and restarts) so the result
/// is exactly equitable. Worst case returns n singleton classes.
EquitableColouring equitable_colouring(const Graph& g, RandomStream& rng);

struct ClassCountCheck {
    bool pass = false;
    int measured = 0;
    double bound = 0.0;
};

/// Class count against c_chi * log n / log log n (natural logs). Requires n >= 3.
ClassCountCheck check_class_count(const EquitableColouring& c, int n, double c_chi);

/// True iff classes partition the vertices, every class is independent, and
/// sizes differ by at most one.
bool colouring_is_valid(const Graph& g, const EquitableColouring& c);

}  // namespace legal
