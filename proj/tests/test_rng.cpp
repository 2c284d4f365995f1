#include <doctest.h>

#include <set>
#include <vector>

#include "legal/rng.hpp"

using legal::RandomStream;

TEST_CASE("identical seeds give identical sequences") {
    RandomStream a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("different seeds and splits diverge") {
    RandomStream a(1), b(2);
    CHECK(a.next() != b.next());
    RandomStream parent(1);
    RandomStream c1 = parent.split(1), c2 = parent.split(2);
    CHECK(c1.next() != c2.next());
    // Splitting does not consume parent draws.
    RandomStream fresh(1);
    (void)fresh.split(1);
    RandomStream control(1);
    CHECK(fresh.next() == control.next());
}

TEST_CASE("below stays in range and hits all residues") {
    RandomStream rng(3);
    std::set<uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        uint64_t x = rng.below(7);
        CHECK(x < 7);
        seen.insert(x);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("next_unit lies in the unit interval") {
    RandomStream rng(11);
    for (int i = 0; i < 1000; ++i) {
        double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("partial shuffle prefixes nest") {
    std::vector<int> base(50);
    for (int i = 0; i < 50; ++i) base[size_t(i)] = i;

    auto prefix = [&](size_t k) {
        std::vector<int> v = base;
        RandomStream rng(9);
        rng.partial_shuffle(v, k);
        v.resize(k);
        return v;
    };
    auto p10 = prefix(10), p25 = prefix(25);
    for (size_t i = 0; i < 10; ++i) CHECK(p10[i] == p25[i]);
}
