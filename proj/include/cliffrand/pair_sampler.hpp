#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffrand/pauli.hpp"
#include "cliffrand/rng.hpp"

namespace cliffrand {

namespace detail {
/// Refill row bits uniformly from the stream. Word order: x then z, low
/// words first, with the tail word masked to k bits.
inline void fill_row(PauliRow& r, RngStream& rng) {
    for (auto& w : r.x.w) {
        w = rng.next();
    }
    r.x.mask_tail();
    for (auto& w : r.z.w) {
        w = rng.next();
    }
    r.z.mask_tail();
}
}  // namespace detail

/// Uniform unsigned k-qubit Pauli: 2k independent bits, sign left at +.
inline PauliRow sample_pauli(std::size_t k, RngStream& rng) {
    if (k == 0) {
        throw std::invalid_argument("sample_pauli: k must be positive");
    }
    PauliRow r(k);
    detail::fill_row(r, rng);
    return r;
}

struct SampledPair {
    PauliRow a;
    PauliRow b;
    std::uint64_t trials = 0;  // candidate pairs drawn, including the accepted one
};

/// Every signed anticommuting ordered pair on k qubits, 2^(2k+1) * (4^k - 1)
/// in total. Exhaustive-test plumbing; meant for small k.
inline std::vector<std::pair<PauliRow, PauliRow>> all_anticommuting_pairs(std::size_t k) {
    if (k == 0 || k > 8) {
        throw std::invalid_argument("all_anticommuting_pairs: k out of range");
    }
    const std::uint64_t codes = 1ull << (2 * k);
    auto decode = [k](std::uint64_t code, bool sign) {
        PauliRow r(k);
        r.x.w[0] = code & ((1ull << k) - 1);
        r.z.w[0] = code >> k;
        r.sign = sign;
        return r;
    };
    std::vector<std::pair<PauliRow, PauliRow>> out;
    for (std::uint64_t ca = 0; ca < codes; ++ca) {
        for (std::uint64_t cb = 0; cb < codes; ++cb) {
            const PauliRow a = decode(ca, false);
            const PauliRow b = decode(cb, false);
            if (!anticommutes(a, b)) continue;
            for (int s = 0; s < 4; ++s) {
                out.emplace_back(decode(ca, s & 1), decode(cb, (s >> 1) & 1));
            }
        }
    }
    return out;
}

/// Draw a uniform signed anticommuting pair on k qubits by rejection: redraw
/// both unsigned rows until they anticommute (acceptance (1 - 4^-k) / 2, at
/// least 3/8), then draw both signs from one extra word.
inline SampledPair sample_anticommuting_pair(std::size_t k, RngStream& rng) {
    if (k == 0) {
        throw std::invalid_argument("sample_anticommuting_pair: k must be positive");
    }
    SampledPair p{PauliRow(k), PauliRow(k), 0};
    do {
        ++p.trials;
        detail::fill_row(p.a, rng);
        detail::fill_row(p.b, rng);
    } while (!anticommutes(p.a, p.b));
    const std::uint64_t s = rng.next();
    p.a.sign = s & 1;
    p.b.sign = (s >> 1) & 1;
    return p;
}

}  // namespace cliffrand
