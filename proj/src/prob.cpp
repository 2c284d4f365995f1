#include "legal/prob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace legal {

namespace {

constexpr int kMaxExactLog2Denom = 126;

void fill_mass(ExactDistribution& d) {
    d.mass.assign(d.num.size(), 0.0L);
    long double scale = std::scalbn(1.0L, -d.log2_denom);
    for (size_t i = 0; i < d.num.size(); ++i) {
        d.mass[i] = (long double)(d.num[i]) * scale;
    }
}

}  // namespace

long double ExactDistribution::cdf(int t) const {
    if (t < 0) return 0.0L;
    long double s = 0.0L;
    for (int i = 0; i <= t && i <= max_value(); ++i) s += mass[i];
    return std::min(s, 1.0L);
}

ExactDistribution ExactDistribution::point_mass(int at) {
    ExactDistribution d;
    d.num.assign(size_t(at) + 1, 0);
    d.num[size_t(at)] = 1;
    d.log2_denom = 0;
    fill_mass(d);
    return d;
}

ExactDistribution ExactDistribution::from_counts(std::vector<uint128> counts, int log2_denom) {
    ExactDistribution d;
    d.num = std::move(counts);
    d.log2_denom = log2_denom;
    uint128 total = 0;
    for (uint128 c : d.num) total += c;
    if (log2_denom > kMaxExactLog2Denom || total != (uint128{1} << log2_denom)) {
        throw std::invalid_argument("counts do not sum to 2^log2_denom");
    }
    fill_mass(d);
    return d;
}

ExactDistribution binomial_half(int m) {
    if (m < 0) throw std::invalid_argument("negative trial count");
    if (m <= kMaxExactLog2Denom) {
        std::vector<uint128> c(size_t(m) + 1, 0);
        c[0] = 1;
        for (int row = 1; row <= m; ++row) {
            for (int k = row; k >= 1; --k) c[size_t(k)] += c[size_t(k) - 1];
        }
        ExactDistribution d;
        d.num = std::move(c);
        d.log2_denom = m;
        fill_mass(d);
        return d;
    }
    // Float mode for large m: log-space binomial pmf.
    ExactDistribution d;
    d.exact = false;
    d.log2_denom = 0;
    d.mass.assign(size_t(m) + 1, 0.0L);
    long double log2l = std::log(2.0L);
    for (int k = 0; k <= m; ++k) {
        long double lg = std::lgamma((long double)m + 1) - std::lgamma((long double)k + 1) -
                         std::lgamma((long double)(m - k) + 1) - m * log2l;
        d.mass[size_t(k)] = std::exp(lg);
    }
    d.error_bound = (long double)(m + 1) * std::numeric_limits<long double>::epsilon() * 8;
    return d;
}

ExactDistribution folded_min(int m) {
    if (m < 1) throw std::invalid_argument("folded_min requires m >= 1");
    ExactDistribution y = binomial_half(m);
    if (!y.exact) throw std::invalid_argument("folded_min supports exact m only");
    std::vector<uint128> c(size_t(m / 2) + 1, 0);
    for (int k = 0; k <= m; ++k) {
        c[size_t(std::min(k, m - k))] += y.num[size_t(k)];
    }
    ExactDistribution d;
    d.num = std::move(c);
    d.log2_denom = m;
    fill_mass(d);
    return d;
}

bool ExactDistribution::operator==(const ExactDistribution& o) const {
    if (exact && o.exact) {
        int common = std::max(log2_denom, o.log2_denom);
        int top = std::max(max_value(), o.max_value());
        for (int i = 0; i <= top; ++i) {
            uint128 a = i <= max_value() ? num[size_t(i)] << (common - log2_denom) : 0;
            uint128 b = i <= o.max_value() ? o.num[size_t(i)] << (common - o.log2_denom) : 0;
            if (a != b) return false;
        }
        return true;
    }
    if (mass.size() != o.mass.size()) return false;
    for (size_t i = 0; i < mass.size(); ++i) {
        if (std::fabs(mass[i] - o.mass[i]) > 1e-15L) return false;
    }
    return true;
}

bool dominates(const ExactDistribution& a, const ExactDistribution& b) {
    int top = std::max(a.max_value(), b.max_value());
    if (a.exact && b.exact && a.log2_denom <= kMaxExactLog2Denom &&
        b.log2_denom <= kMaxExactLog2Denom) {
        int common = std::max(a.log2_denom, b.log2_denom);
        if (common <= kMaxExactLog2Denom) {
            uint128 cdf_a = 0, cdf_b = 0;
            for (int t = 0; t <= top; ++t) {
                if (t <= a.max_value()) cdf_a += a.num[size_t(t)] << (common - a.log2_denom);
                if (t <= b.max_value()) cdf_b += b.num[size_t(t)] << (common - b.log2_denom);
                if (cdf_a > cdf_b) return false;
            }
            return true;
        }
    }
    long double margin = a.error_bound + b.error_bound;
    long double cdf_a = 0, cdf_b = 0;
    for (int t = 0; t <= top; ++t) {
        if (t <= a.max_value()) cdf_a += a.mass[size_t(t)];
        if (t <= b.max_value()) cdf_b += b.mass[size_t(t)];
        if (cdf_a > cdf_b + margin) return false;
    }
    return true;
}

ExactDistribution convolve(const ExactDistribution& a, const ExactDistribution& b) {
    bool exact = a.exact && b.exact && a.log2_denom + b.log2_denom <= kMaxExactLog2Denom;
    ExactDistribution d;
    if (exact) {
        d.log2_denom = a.log2_denom + b.log2_denom;
        d.num.assign(size_t(a.max_value() + b.max_value()) + 1, 0);
        for (int i = 0; i <= a.max_value(); ++i) {
            if (a.num[size_t(i)] == 0) continue;
            for (int j = 0; j <= b.max_value(); ++j) {
                d.num[size_t(i + j)] += a.num[size_t(i)] * b.num[size_t(j)];
            }
        }
        fill_mass(d);
        return d;
    }
    d.exact = false;
    d.mass.assign(size_t(a.max_value() + b.max_value()) + 1, 0.0L);
    for (int i = 0; i <= a.max_value(); ++i) {
        for (int j = 0; j <= b.max_value(); ++j) {
            d.mass[size_t(i + j)] += a.mass[size_t(i)] * b.mass[size_t(j)];
        }
    }
    d.error_bound = a.error_bound + b.error_bound +
                    (long double)d.mass.size() * std::numeric_limits<long double>::epsilon() * 8;
    return d;
}

ExactDistribution convolve(std::span<const ExactDistribution> parts) {
    if (parts.empty()) return ExactDistribution::point_mass(0);
    ExactDistribution acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = convolve(acc, parts[i]);
    return acc;
}

long double binomial_lower_tail(long long trials, double threshold) {
    if (trials < 0) throw std::invalid_argument("negative trial count");
    if (threshold <= 0) return 0.0L;
    long double log2l = std::log(2.0L);
    long double sum = 0.0L;
    for (long long j = 0; j < trials + 1 && (double)j < threshold; ++j) {
        long double lg = std::lgamma((long double)trials + 1) -
                         std::lgamma((long double)j + 1) -
                         std::lgamma((long double)(trials - j) + 1) - trials * log2l;
        sum += std::exp(lg);
    }
    return std::min(sum, 1.0L);
}

Sized1Tail sized1_tail_from_log(double log_n) {
    if (log_n < std::log(16.0)) throw std::invalid_argument("requires n >= 16");
    Sized1Tail r;
    r.trials = (long long)std::floor(log_n / 202.0);
    double loglog = std::log(log_n);
    r.threshold = 2.0 * loglog * loglog;
    r.tail = binomial_lower_tail(r.trials, r.threshold);
    r.claimed_bound = std::exp(-log_n / 300.0);
    r.bound_holds = (double)r.tail <= r.claimed_bound;
    return r;
}

Sized1Tail sized1_tail(double n) { return sized1_tail_from_log(std::log(n)); }

}  // namespace legal
