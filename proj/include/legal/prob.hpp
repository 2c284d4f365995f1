#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace legal {

using uint128 = unsigned __int128;

/// Distribution on {0,...,k}. In exact mode mass i is num[i] / 2^log2_denom
/// with unsigned 128-bit numerators; float mode keeps long double masses
/// with a tracked absolute error bound. The claims this module verifies are
/// CDF inequalities between tiny tails, so the exact mode is the default
/// wherever the numerators fit.
struct ExactDistribution {
    bool exact = true;
    int log2_denom = 0;
    std::vector<uint128> num;        // exact mode
    std::vector<long double> mass;   // both modes
    long double error_bound = 0.0L;  // float mode

    int max_value() const { return int(mass.size()) - 1; }
    long double cdf(int t) const;

    static ExactDistribution point_mass(int at);
    static ExactDistribution from_counts(std::vector<uint128> counts, int log2_denom);

    bool operator==(const ExactDistribution& o) const;
};

/// Exact Bin(m, 1/2).
ExactDistribution binomial_half(int m);

/// Distribution of min(Y, m-Y) for Y ~ Bin(m, 1/2). Requires m >= 1.
ExactDistribution folded_min(int m);

/// True iff a stochastically dominates b: CDF of a <= CDF of b pointwise.
/// Exact when both sides are exact with denominators up to 2^126.
bool dominates(const ExactDistribution& a, const ExactDistribution& b);

/// Distribution of the independent sum.
ExactDistribution convolve(std::span<const ExactDistribution> parts);
ExactDistribution convolve(const ExactDistribution& a, const ExactDistribution& b);

/// P(Bin(trials, 1/2) < threshold), in long double (log-space for large
/// trial counts; values far below double underflow are still meaningful).
long double binomial_lower_tail(long long trials, double threshold);

/// The tail P(Bin(floor(log n / 202), 1/2) < 2 (log log n)^2) together with
/// the claimed n^(-1/300) bound. Reported, not asserted: the inequality only
/// bites for enormous n. sized1_tail_from_log takes log n directly so
/// astronomically large n stay representable.
struct Sized1Tail {
    long long trials = 0;
    double threshold = 0.0;
    long double tail = 0.0L;
    double claimed_bound = 0.0;
    bool bound_holds = false;
};

Sized1Tail sized1_tail(double n);
Sized1Tail sized1_tail_from_log(double log_n);

}  // namespace legal
