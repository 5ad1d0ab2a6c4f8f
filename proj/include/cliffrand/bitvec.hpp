#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliffrand {

/// Packed GF(2) vector. Bit i lives in word i/64 at offset i%64; bits at
/// positions >= nbits are kept zero by every operation.
struct BitVec {
    std::size_t nbits = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::size_t n) : nbits(n), w((n + 63) / 64, 0) {}

    std::size_t size() const { return nbits; }
    std::size_t word_count() const { return w.size(); }

    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            w[i >> 6] |= mask;
        } else {
            w[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void clear() {
        for (auto& word : w) {
            word = 0;
        }
    }

    bool none() const {
        for (auto word : w) {
            if (word != 0) {
                return false;
            }
        }
        return true;
    }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (auto word : w) {
            total += static_cast<std::size_t>(std::popcount(word));
        }
        return total;
    }

    // zero the unused bits of the last word
    void mask_tail() {
        if (nbits & 63) {
            w.back() &= (std::uint64_t{1} << (nbits & 63)) - 1;
        }
    }

    bool operator==(const BitVec&) const = default;
};

/// Parity of the bitwise AND of two equal-length vectors: <a, b> over GF(2).
inline bool parity_of_and(const BitVec& a, const BitVec& b) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        acc ^= a.w[i] & b.w[i];
    }
    return std::popcount(acc) & 1;
}

/// ceil(log2 k) for k >= 1.
inline constexpr std::size_t ceil_log2(std::size_t k) {
    return k <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(k - 1));
}

}  // namespace cliffrand
