#include "legal/vertex_set.hpp"

#include <stdexcept>

namespace legal {

std::string VertexSet::to_hex() const {
    int digits = (n_ + 3) / 4;
    std::string out(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (int d = 0; d < digits; ++d) {
        int bit = d * 4;
        unsigned nib = unsigned(words_[bit >> 6] >> (bit & 63)) & 0xF;
        if ((bit & 63) > 60 && size_t(bit >> 6) + 1 < words_.size()) {
            nib |= unsigned(words_[(bit >> 6) + 1] << (64 - (bit & 63))) & 0xF;
        }
        out[digits - 1 - d] = kHex[nib];
    }
    return out;
}

VertexSet VertexSet::from_hex(const std::string& hex, int n) {
    int digits = (n + 3) / 4;
    if (int(hex.size()) != digits) {
        throw std::invalid_argument("hex bitstring has wrong length for universe size");
    }
    VertexSet s(n);
    for (int d = 0; d < digits; ++d) {
        char c = hex[digits - 1 - d];
        unsigned nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = 10 + (c - 'a');
        else if (c >= 'A' && c <= 'F') nib = 10 + (c - 'A');
        else throw std::invalid_argument("invalid hex digit in bitstring");
        for (int b = 0; b < 4; ++b) {
            int i = d * 4 + b;
            if (nib & (1u << b)) {
                if (i >= n) throw std::invalid_argument("hex bitstring sets bit outside universe");
                s.set(i);
            }
        }
    }
    return s;
}

}  // namespace legal
