#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cliffrand/bitvec.hpp"

namespace cliffrand {

/// Single-qubit Pauli label. The (x, z) bit pair of a tableau column maps to
/// (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y.
enum class Pauli : std::uint8_t { I, X, Y, Z };

inline char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

/// One signed n-qubit Pauli operator: x/z bit vectors plus a sign bit for the
/// phase (-1)^sign. Also a single tableau row, so the conjugation updates for
/// the gate set live here as per-row bit operations.
struct PauliRow {
    std::size_t n = 0;
    BitVec x;
    BitVec z;
    bool sign = false;

    PauliRow() = default;
    explicit PauliRow(std::size_t nq) : n(nq), x(nq), z(nq) {}

    static PauliRow identity(std::size_t nq) { return PauliRow(nq); }

    bool is_identity() const { return x.none() && z.none(); }

    Pauli component(std::size_t j) const {
        const bool xb = x.get(j);
        const bool zb = z.get(j);
        if (xb && zb) return Pauli::Y;
        if (xb) return Pauli::X;
        if (zb) return Pauli::Z;
        return Pauli::I;
    }

    // H(a): sign ^= x_a z_a, then swap x_a and z_a
    void conj_h(std::size_t a) {
        const bool xb = x.get(a);
        const bool zb = z.get(a);
        sign ^= xb && zb;
        x.set(a, zb);
        z.set(a, xb);
    }

    // S(a): sign ^= x_a z_a, then z_a ^= x_a
    void conj_s(std::size_t a) {
        const bool xb = x.get(a);
        const bool zb = z.get(a);
        sign ^= xb && zb;
        z.set(a, zb ^ xb);
    }

    // S^dag(a): sign ^= x_a (1 ^ z_a), then z_a ^= x_a
    void conj_sdg(std::size_t a) {
        const bool xb = x.get(a);
        const bool zb = z.get(a);
        sign ^= xb && !zb;
        z.set(a, zb ^ xb);
    }

    // CX(a, b): sign ^= x_a z_b (x_b ^ z_a ^ 1), then x_b ^= x_a, z_a ^= z_b
    void conj_cx(std::size_t a, std::size_t b) {
        const bool xa = x.get(a);
        const bool za = z.get(a);
        const bool xb = x.get(b);
        const bool zb = z.get(b);
        sign ^= xa && zb && !(xb ^ za);
        x.set(b, xb ^ xa);
        z.set(a, za ^ zb);
    }

    // Conjugation by a Pauli gate flips the sign iff the row's component at
    // qubit a anticommutes with the gate.
    void conj_pauli(Pauli g, std::size_t a) {
        const bool xb = x.get(a);
        const bool zb = z.get(a);
        switch (g) {
            case Pauli::X: sign ^= zb; break;
            case Pauli::Y: sign ^= xb ^ zb; break;
            case Pauli::Z: sign ^= xb; break;
            case Pauli::I: break;
        }
    }

    bool operator==(const PauliRow&) const = default;
};

/// True iff p and q anticommute: the binary symplectic inner product
/// <x^p, z^q> ^ <z^p, x^q> is odd.
inline bool anticommutes(const PauliRow& p, const PauliRow& q) {
    if (p.n != q.n) {
        throw std::invalid_argument("anticommutes: qubit counts differ");
    }
    return parity_of_and(p.x, q.z) ^ parity_of_and(p.z, q.x);
}

/// Readable form, e.g. "-XIZ" or "+YY".
inline std::string to_string(const PauliRow& r) {
    std::string s;
    s.reserve(r.n + 1);
    s.push_back(r.sign ? '-' : '+');
    for (std::size_t j = 0; j < r.n; ++j) {
        s.push_back(pauli_char(r.component(j)));
    }
    return s;
}

}  // namespace cliffrand
