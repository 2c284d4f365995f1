#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace legal {

/// Deterministic counter-based random stream.
///
/// Output i is fin(key + (i+1) * GOLDEN) where fin is the splitmix64
/// finalizer (Steele, Lea, Flood 2014) and GOLDEN = floor(2^64 / phi).
/// All arithmetic is 64-bit two's complement, so sequences are identical
/// across platforms. split(tag) derives an independent child stream whose
/// key mixes the parent key with the tag; child draws never collide with
/// parent draws in practice (distinct keys feed the same bijective mixer).
class RandomStream {
public:
    explicit RandomStream(uint64_t seed) : key_(fin(seed ^ kSeedSalt)) {}

    RandomStream split(uint64_t tag) const {
        RandomStream child(0);
        child.key_ = fin(key_ ^ fin(tag * kGolden + kSplitSalt));
        child.ctr_ = 0;
        return child;
    }

    uint64_t next() { return fin(key_ + (++ctr_) * kGolden); }

    /// Uniform in [0,1), 53 random bits.
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Uniform in [0, bound), rejection-sampled to remove modulo bias.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int uniform_int(int lo, int hi_exclusive) {
        return lo + int(below(uint64_t(hi_exclusive - lo)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Shuffles only the first k positions (draws are independent of k, so
    /// prefixes of the same seeded permutation nest as k grows).
    template <typename T>
    void partial_shuffle(std::vector<T>& v, size_t k) {
        size_t m = k < v.size() ? k : v.size();
        for (size_t i = 0; i < m; ++i) {
            size_t j = i + size_t(below(v.size() - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr uint64_t kSeedSalt = 0x5851F42D4C957F2DULL;
    static constexpr uint64_t kSplitSalt = 0xD6E8FEB86659FD93ULL;

    static uint64_t fin(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t key_;
    uint64_t ctr_ = 0;
};

/// Stream tags for the independent sources of randomness; the construction's
/// graph space and colouring/sign space must never share a stream.
namespace stream {
constexpr uint64_t kGraph = 1;
constexpr uint64_t kSigns = 2;
constexpr uint64_t kMatching = 3;
constexpr uint64_t kColouring = 4;
constexpr uint64_t kSampling = 5;
constexpr uint64_t kSearch = 6;
}  // namespace stream

}  // namespace legal
