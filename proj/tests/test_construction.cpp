#include <doctest.h>

#include <cmath>

#include "legal/construction.hpp"
#include "legal/random_models.hpp"
#include "oracles.hpp"

using legal::ConstructionResult;
using legal::Graph;
using legal::MainParams;
using legal::VertexSet;

namespace {

Graph k4_minus_edge() { return Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// K_{5,5} on 0..9 plus a pendant vertex 10 joined to the non-adjacent 0 and 1.
Graph bipartite_with_low_degree_vertex() {
    Graph g(11);
    for (int a = 0; a < 5; ++a) {
        for (int b = 5; b < 10; ++b) g.add_edge(a, b);
    }
    g.add_edge(10, 0);
    g.add_edge(10, 1);
    return g;
}

}  // namespace

TEST_CASE("dense construction on K4 minus an edge") {
    Graph g = k4_minus_edge();
    legal::RandomStream rng(1);
    auto res = legal::construct_dense(g, rng);
    REQUIRE(res.ok());
    const auto& t = *res.transcript;
    REQUIRE(t.complement_matching->pairs.size() == 1);
    CHECK(t.complement_matching->pairs[0] == std::pair<int, int>{0, 1});
    CHECK(t.s == oracle::vset(4, {0}));
    CHECK(t.moves.moves[0] == oracle::vset(4, {0, 1}));
    CHECK(t.moves.moves[1] == oracle::vset(4, {0, 1}));
    CHECK(t.moves.moves[2] == oracle::vset(4, {2}));
    CHECK(t.moves.moves[3] == oracle::vset(4, {3}));
    CHECK_FALSE(legal::validate_moves(g, t.moves).has_value());
    CHECK(legal::check_star_condition(g, *t.complement_matching).empty());
    auto cert = legal::verify(g, t.s, t.moves);
    CHECK(cert.legal);
    CHECK(cert.states_checked == 8);
}

TEST_CASE("dense construction rejects complete graphs") {
    legal::RandomStream rng(1);
    auto res = legal::construct_dense(oracle::complete(5), rng);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error->code == "graph_complete");
}

TEST_CASE("dense construction on the empty graph is refuted by the verifier") {
    legal::RandomStream rng(1);
    Graph g(4);
    auto res = legal::construct_dense(g, rng);
    REQUIRE(res.ok());
    CHECK(res.transcript->complement_matching->pairs.size() == 2);
    CHECK(res.transcript->s.count() == 2);
    auto cert = legal::verify(g, res.transcript->s, res.transcript->moves);
    CHECK_FALSE(cert.legal);
    CHECK(legal::recheck_certificate(g, res.transcript->s, res.transcript->moves, cert));
}

TEST_CASE("dense orbits are closed under complement") {
    legal::RandomStream rng(4);
    for (uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = legal::gnm(40, 700, seed);
        legal::RandomStream crng(seed);
        auto res = legal::construct_dense(g, crng);
        REQUIRE(res.ok());
        CHECK(legal::orbit_closed_under_complement(res.transcript->moves, 40));
    }
}

TEST_CASE("star condition") {
    SUBCASE("empty matching never violates") {
        Graph g = oracle::complete(4);
        CHECK(legal::check_star_condition(g, legal::Matching{}).empty());
    }
    SUBCASE("complement star: unmatched leaves touch the centre's pair") {
        // H = star with centre 0 on 4 vertices, so G is its complement. The
        // matching takes the centre plus one leaf; every other leaf reaches
        // the pair through the centre, while the pair itself is exempt.
        Graph h = oracle::star(3);
        Graph g = h.complement();
        legal::RandomStream rng(2);
        auto f = legal::greedy_maximal_matching(h, rng);
        REQUIRE(f.pairs.size() == 1);
        auto violating = legal::check_star_condition(g, f);
        legal::VertexSet cov = f.covered(4);
        for (int v = 0; v < 4; ++v) {
            bool is_violating = std::find(violating.begin(), violating.end(), v) != violating.end();
            CHECK(is_violating == !cov.test(v));
        }
    }
    SUBCASE("isolated-in-complement vertex never violates") {
        Graph g = k4_minus_edge();
        legal::Matching f;
        f.pairs = {{0, 1}};
        auto violating = legal::check_star_condition(g, f);
        CHECK(std::find(violating.begin(), violating.end(), 2) == violating.end());
        CHECK(std::find(violating.begin(), violating.end(), 3) == violating.end());
    }
}

TEST_CASE("colouring construction reproduces the worked example's moves on the cherry") {
    Graph g = oracle::cherry();
    int legal_seeds = 0;
    for (uint64_t seed = 0; seed < 16; ++seed) {
        legal::RandomStream rng(seed);
        legal::RandomStream crng = rng.split(legal::stream::kColouring);
        auto colouring = legal::equitable_colouring(g, crng);
        auto res = legal::construct_colouring(g, colouring, rng);
        REQUIRE(res.ok());
        const auto& t = *res.transcript;
        CHECK(t.moves.moves[0] == oracle::vset(3, {0}));
        CHECK(t.moves.moves[1] == oracle::vset(3, {1, 2}));
        CHECK(t.moves.moves[2] == oracle::vset(3, {1, 2}));
        CHECK_FALSE(legal::validate_moves(g, t.moves).has_value());
        auto cert = legal::verify(g, t.s, t.moves);
        if (cert.legal) {
            ++legal_seeds;
            CHECK(cert.states_checked == 4);
        }
    }
    // Initial states holding exactly one leaf give the worked example; a fair
    // coin over 3 vertices hits that half the time.
    CHECK(legal_seeds > 0);
}

TEST_CASE("colouring construction on C4 diagonals") {
    Graph g = oracle::cycle(4);
    legal::EquitableColouring diag;
    diag.classes = {oracle::vset(4, {0, 2}), oracle::vset(4, {1, 3})};
    diag.class_of = {0, 1, 0, 1};
    REQUIRE(legal::colouring_is_valid(g, diag));
    // Any state with one vertex per diagonal has the four adjacent pairs as
    // its orbit.
    std::vector<VertexSet> moves{diag.classes[0], diag.classes[1], diag.classes[0],
                                 diag.classes[1]};
    auto m = legal::MoveSet::from_moves(std::move(moves));
    auto cert = legal::verify(g, oracle::vset(4, {0, 1}), m);
    CHECK(cert.legal);
    CHECK(cert.states_checked == 4);
}

TEST_CASE("colouring construction on a complete graph is refuted") {
    Graph g = oracle::complete(5);
    legal::RandomStream rng(3);
    legal::RandomStream crng = rng.split(legal::stream::kColouring);
    auto colouring = legal::equitable_colouring(g, crng);
    REQUIRE(colouring.count() == 5);
    auto res = legal::construct_colouring(g, colouring, rng);
    REQUIRE(res.ok());
    auto cert = legal::verify(g, res.transcript->s, res.transcript->moves);
    CHECK_FALSE(cert.legal);
}

TEST_CASE("colouring-move states restrict to a class side") {
    // For every span element, the state meets each class in either S's part
    // or its complement within the class.
    Graph g = legal::gnp(60, 0.25, 9);
    legal::RandomStream rng(9);
    legal::RandomStream crng = rng.split(legal::stream::kColouring);
    auto colouring = legal::equitable_colouring(g, crng);
    auto res = legal::construct_colouring(g, colouring, rng);
    REQUIRE(res.ok());
    const auto& t = *res.transcript;
    legal::RandomStream sample(4);
    for (int trial = 0; trial < 100; ++trial) {
        VertexSet gvec(60);
        for (const auto& b : t.moves.basis) {
            if (sample.next() & 1) gvec ^= b;
        }
        VertexSet state = t.s ^ gvec;
        for (const auto& cls : colouring.classes) {
            VertexSet meet = state & cls;
            CHECK((meet == (t.s & cls) || meet == (cls ^ (t.s & cls))));
        }
    }
}

TEST_CASE("kappa") {
    SUBCASE("empty set scores zero") {
        legal::SignedColouring sc{{oracle::vset(8, {0, 1, 2, 3})}, oracle::vset(8, {0, 1})};
        CHECK(legal::kappa(VertexSet(8), sc) == 0);
    }
    SUBCASE("single class takes the smaller side") {
        // 7 members, 5 plus and 2 minus, U covers the class.
        VertexSet cls = oracle::vset(8, {0, 1, 2, 3, 4, 5, 6});
        VertexSet plus = oracle::vset(8, {0, 1, 2, 3, 4});
        legal::SignedColouring sc{{cls}, plus};
        CHECK(legal::kappa(cls, sc) == 2);
    }
    SUBCASE("matches the brute-force sign minimum") {
        legal::RandomStream rng(21);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 12;
            int m = 1 + int(rng.below(3));
            std::vector<VertexSet> classes(static_cast<size_t>(m), VertexSet(n));
            for (int v = 0; v < n; ++v) classes[rng.below(uint64_t(m))].set(v);
            VertexSet plus(n), u(n);
            for (int v = 0; v < n; ++v) {
                if (rng.next() & 1) plus.set(v);
                if (rng.next() & 1) u.set(v);
            }
            std::vector<VertexSet> nonempty;
            for (auto& c : classes) {
                if (c.any()) nonempty.push_back(c);
            }
            legal::SignedColouring sc{nonempty, plus};
            CHECK(legal::kappa(u, sc) == oracle::kappa_brute(u, sc));
        }
    }
}

TEST_CASE("main construction degenerates to the colouring construction") {
    // min degree 2 with no vertex under the degree cutoff and the kappa
    // cutoff disabled: no repairs, class moves everywhere.
    Graph g = oracle::cycle(8);
    MainParams params;
    params.d0_factor = 0.01;
    params.d1_threshold = 0.0;  // kappa is never negative
    legal::RandomStream rng(5);
    auto res = legal::construct_main(g, params, rng);
    REQUIRE(res.ok());
    const auto& t = *res.transcript;
    CHECK(t.d0->empty());
    CHECK(t.d1->empty());
    CHECK(t.n0_pairs.empty());
    CHECK(t.n1_pairs.empty());
    for (int v = 0; v < 8; ++v) {
        // every move is the colour class containing the vertex
        bool is_class_move = false;
        for (const auto& cls : t.signing->classes) {
            if (cls.test(v) && t.moves.moves[size_t(v)] == cls) is_class_move = true;
        }
        CHECK(is_class_move);
    }
    CHECK(t.s == t.signing->plus);
}

TEST_CASE("main construction repairs a single low-degree vertex") {
    Graph g = bipartite_with_low_degree_vertex();
    MainParams params;
    params.d0_factor = 1.0;     // cutoff log(11) ~ 2.4 catches only vertex 10
    params.d1_threshold = 0.0;  // disable the kappa repair for this trace
    legal::RandomStream rng(8);
    auto res = legal::construct_main(g, params, rng);
    REQUIRE(res.ok());
    const auto& t = *res.transcript;
    CHECK(*t.d0 == oracle::vset(11, {10}));
    REQUIRE(t.n0_pairs.size() == 1);
    const auto& p = t.n0_pairs[0];
    CHECK(p.repaired == 10);
    CHECK(p.plus_vertex == 0);
    CHECK(p.minus_vertex == 1);
    CHECK_FALSE(p.split_moves);
    // singleton move for the repaired vertex, the pair move for both others
    CHECK(t.moves.moves[10] == oracle::vset(11, {10}));
    CHECK(t.moves.moves[0] == oracle::vset(11, {0, 1}));
    CHECK(t.moves.moves[1] == oracle::vset(11, {0, 1}));
    CHECK(t.s.test(0));
    CHECK_FALSE(t.s.test(1));
    CHECK_FALSE(legal::validate_moves(g, t.moves).has_value());
}

TEST_CASE("main construction on sparse random graphs: valid moves and pair invariants") {
    int built = 0;
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 400;
        double p = 2.2 * std::log(double(n)) / n;
        Graph g = legal::gnp(n, p, seed);
        if (g.min_degree() < 2) continue;
        MainParams params = MainParams{};
        params.d0_factor = 0.6;
        params.d1_threshold = 1.0;
        params.attempts = 3;
        legal::RandomStream rng(seed);
        auto res = legal::construct_main(g, params, rng);
        if (!res.ok()) continue;
        ++built;
        const auto& t = *res.transcript;
        CHECK_FALSE(legal::validate_moves(g, t.moves).has_value());
        CHECK(legal::orbit_closed_under_complement(t.moves, n));

        // Every repaired vertex's pair: disjoint, inside the neighbourhood,
        // exactly one endpoint in S, and one endpoint in every orbit state.
        VertexSet used(n);
        auto check_pair = [&](const legal::PairAssignment& pa) {
            if (pa.split_moves) return;
            CHECK_FALSE(used.test(pa.plus_vertex));
            CHECK_FALSE(used.test(pa.minus_vertex));
            used.set(pa.plus_vertex);
            used.set(pa.minus_vertex);
            CHECK(g.adjacent(pa.repaired, pa.plus_vertex));
            CHECK(g.adjacent(pa.repaired, pa.minus_vertex));
            CHECK(int(t.s.test(pa.plus_vertex)) + int(t.s.test(pa.minus_vertex)) == 1);
        };
        for (const auto& pa : t.n0_pairs) check_pair(pa);
        for (const auto& pa : t.n1_pairs) check_pair(pa);

        legal::RandomStream sample(seed * 31 + 7);
        for (int trial = 0; trial < 50; ++trial) {
            VertexSet gvec(n);
            for (const auto& b : t.moves.basis) {
                if (sample.next() & 1) gvec ^= b;
            }
            VertexSet state = t.s ^ gvec;
            for (const auto& pa : t.n0_pairs) {
                if (!pa.split_moves) {
                    CHECK(int(state.test(pa.plus_vertex)) + int(state.test(pa.minus_vertex)) ==
                          1);
                }
            }
            for (const auto& pa : t.n1_pairs) {
                CHECK(int(state.test(pa.plus_vertex)) + int(state.test(pa.minus_vertex)) == 1);
            }
        }
    }
    CHECK(built >= 4);
}

TEST_CASE("main construction demands minimum degree 2") {
    Graph g = oracle::star(5);
    MainParams params;
    legal::RandomStream rng(2);
    auto res = legal::construct_main(g, params, rng);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error->code == "min_degree");
}
