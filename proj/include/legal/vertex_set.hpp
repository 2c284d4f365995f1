#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace legal {

/// A subset of {0,...,n-1}, stored as packed 64-bit words. Doubles as a
/// GF(2) vector of length n: addition of two sets is symmetric difference.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.clear_padding();
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void flip(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) {
            if (w) return false;
        }
        return true;
    }

    bool any() const { return !empty(); }

    /// Index of the lowest set bit, or -1 if the set is empty.
    int lowest() const {
        for (size_t k = 0; k < words_.size(); ++k) {
            if (words_[k]) return int(k * 64 + std::countr_zero(words_[k]));
        }
        return -1;
    }

    VertexSet& operator^=(const VertexSet& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    /// Remove every element of o from this set.
    VertexSet& subtract(const VertexSet& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    /// Set complement within the universe {0,...,n-1}.
    VertexSet complemented() const {
        VertexSet r(*this);
        for (auto& w : r.words_) w = ~w;
        r.clear_padding();
        return r;
    }

    bool operator==(const VertexSet&) const = default;

    bool intersects(const VertexSet& o) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & o.words_[k]) return true;
        }
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~o.words_[k]) return false;
        }
        return true;
    }

    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                f(int(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    /// Hex encoding of the n-bit value, most significant nibble first,
    /// exactly ceil(n/4) digits (vertex 0 is the least significant bit).
    std::string to_hex() const;
    static VertexSet from_hex(const std::string& hex, int n);

    uint64_t hash() const {
        uint64_t h = 0x9E3779B97F4A7C15ULL ^ uint64_t(n_);
        for (uint64_t w : words_) {
            h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

private:
    void clear_padding() {
        if (n_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
        }
        if (n_ == 0) words_.clear();
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    uint64_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace legal
