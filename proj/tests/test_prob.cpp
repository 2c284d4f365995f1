#include <doctest.h>

#include <cmath>

#include "legal/prob.hpp"
#include "oracles.hpp"

using legal::binomial_half;
using legal::convolve;
using legal::dominates;
using legal::ExactDistribution;
using legal::folded_min;

TEST_CASE("binomial pmfs") {
    auto d0 = binomial_half(0);
    CHECK(d0.max_value() == 0);
    CHECK(d0.num[0] == 1);

    auto d2 = binomial_half(2);
    CHECK(d2.num == std::vector<legal::uint128>{1, 2, 1});
    CHECK(d2.log2_denom == 2);

    auto d10 = binomial_half(10);
    legal::uint128 c = 1;
    for (int k = 0; k <= 10; ++k) {
        CHECK(d10.num[size_t(k)] == c);
        c = c * legal::uint128(10 - k) / legal::uint128(k + 1);
    }
}

TEST_CASE("folded minimum examples") {
    auto f1 = folded_min(1);
    CHECK(f1.max_value() == 0);
    CHECK(f1.num[0] == 2);  // both outcomes give 0
    CHECK(f1.log2_denom == 1);

    auto f2 = folded_min(2);
    CHECK(f2.num == std::vector<legal::uint128>{2, 2});

    // m = 5: matches enumeration of all 32 outcomes
    CHECK(folded_min(5) == oracle::folded_sum_by_enumeration({5}));
}

TEST_CASE("dominance basics") {
    auto b4 = binomial_half(4);
    CHECK(dominates(b4, b4));
    CHECK(dominates(ExactDistribution::point_mass(1), ExactDistribution::point_mass(0)));
    CHECK_FALSE(dominates(ExactDistribution::point_mass(0), ExactDistribution::point_mass(1)));
}

TEST_CASE("folded minimum dominates the half-length binomial for every m up to 64") {
    for (int m = 1; m <= 64; ++m) {
        CAPTURE(m);
        CHECK(dominates(folded_min(m), binomial_half(m / 2)));
    }
}

TEST_CASE("dominance is transitive and antisymmetric on sampled triples") {
    std::vector<ExactDistribution> ds{folded_min(3), folded_min(6), binomial_half(1),
                                      binomial_half(3), ExactDistribution::point_mass(0),
                                      ExactDistribution::point_mass(2)};
    for (const auto& a : ds) {
        for (const auto& b : ds) {
            if (dominates(a, b) && dominates(b, a)) {
                // equal CDFs
                int top = std::max(a.max_value(), b.max_value());
                for (int t = 0; t <= top; ++t) {
                    CHECK(double(a.cdf(t)) == doctest::Approx(double(b.cdf(t))).epsilon(1e-12));
                }
            }
            for (const auto& c : ds) {
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("convolution identities") {
    auto f = folded_min(4);
    auto single = convolve(std::span<const ExactDistribution>(&f, 1));
    CHECK(single == f);

    auto two = convolve(ExactDistribution::point_mass(1), ExactDistribution::point_mass(1));
    CHECK(two == ExactDistribution::point_mass(2));
}

TEST_CASE("convolution commutes and associates in exact arithmetic") {
    auto a = folded_min(3), b = binomial_half(4), c = folded_min(5);
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
}

TEST_CASE("summed folded minima dominate the pooled binomial (3,4,5)") {
    std::vector<ExactDistribution> parts{folded_min(3), folded_min(4), folded_min(5)};
    auto x = convolve(parts);
    CHECK(x == oracle::folded_sum_by_enumeration({3, 4, 5}));
    CHECK(dominates(x, binomial_half(1 + 2 + 2)));
}

TEST_CASE("binomial lower tails") {
    CHECK(legal::binomial_lower_tail(0, 1.0) == 1.0L);
    CHECK(legal::binomial_lower_tail(10, 0.0) == 0.0L);
    // P(Bin(4, 1/2) < 2) = (1 + 4) / 16
    CHECK(double(legal::binomial_lower_tail(4, 2.0)) == doctest::Approx(5.0 / 16));
    // the mechanism at a scale where the asymptotic inequality actually holds
    CHECK(double(legal::binomial_lower_tail(2000, 72.0)) < 1e-90);
}

TEST_CASE("sized1 tail reporting") {
    auto desk = legal::sized1_tail(1e6);
    CHECK(desk.trials == 0);  // log(1e6)/202 < 1
    CHECK(desk.tail == 1.0L);
    CHECK_FALSE(desk.bound_holds);

    auto symbolic = legal::sized1_tail_from_log(404.0);
    CHECK(symbolic.trials == 2);
    CHECK(symbolic.threshold == doctest::Approx(2 * std::log(404.0) * std::log(404.0)));
    CHECK(symbolic.tail == 1.0L);  // threshold 72 clears the whole support

    auto big = legal::sized1_tail_from_log(1e7);
    CHECK(big.trials == 49504);
    CHECK(big.bound_holds);  // far past the crossover, the claim holds
}

TEST_CASE("float mode keeps mass near one for large binomials") {
    auto big = binomial_half(200);
    CHECK_FALSE(big.exact);
    long double total = 0;
    for (auto m : big.mass) total += m;
    CHECK(std::fabs(double(total - 1.0L)) < 1e-12);
}
