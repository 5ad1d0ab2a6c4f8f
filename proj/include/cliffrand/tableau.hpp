#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>

#include "cliffrand/gate.hpp"
#include "cliffrand/pauli.hpp"

namespace cliffrand {

/// Anything that exposes a set of tableau rows over a fixed qubit count.
template <typename T>
concept TableauLike = requires(T& t) {
    { t.num_qubits() } -> std::convertible_to<std::size_t>;
    { t.rows() };
};

namespace detail {
inline void check_qubit(std::size_t a, std::size_t n) {
    if (a >= n) {
        throw std::out_of_range("qubit index out of range");
    }
}
}  // namespace detail

/// Conjugate every row by H(a).
template <TableauLike T>
void apply_h(T& t, std::size_t a) {
    detail::check_qubit(a, t.num_qubits());
    for (PauliRow& r : t.rows()) {
        r.conj_h(a);
    }
}

/// Conjugate every row by S(a).
template <TableauLike T>
void apply_s(T& t, std::size_t a) {
    detail::check_qubit(a, t.num_qubits());
    for (PauliRow& r : t.rows()) {
        r.conj_s(a);
    }
}

/// Conjugate every row by S^dag(a).
template <TableauLike T>
void apply_sdg(T& t, std::size_t a) {
    detail::check_qubit(a, t.num_qubits());
    for (PauliRow& r : t.rows()) {
        r.conj_sdg(a);
    }
}

/// Conjugate every row by CX(a, b), a = control, b = target.
template <TableauLike T>
void apply_cx(T& t, std::size_t a, std::size_t b) {
    detail::check_qubit(a, t.num_qubits());
    detail::check_qubit(b, t.num_qubits());
    if (a == b) {
        throw std::invalid_argument("apply_cx: control equals target");
    }
    for (PauliRow& r : t.rows()) {
        r.conj_cx(a, b);
    }
}

/// Conjugate every row by the Pauli gate g on qubit a. Only signs change.
template <TableauLike T>
void apply_pauli_gate(T& t, Pauli g, std::size_t a) {
    detail::check_qubit(a, t.num_qubits());
    for (PauliRow& r : t.rows()) {
        r.conj_pauli(g, a);
    }
}

template <TableauLike T>
void apply_gate(T& t, const Gate& g) {
    switch (g.kind) {
        case GateKind::H: apply_h(t, g.a); break;
        case GateKind::S: apply_s(t, g.a); break;
        case GateKind::SDG: apply_sdg(t, g.a); break;
        case GateKind::CX: apply_cx(t, g.a, g.b); break;
        case GateKind::X: apply_pauli_gate(t, Pauli::X, g.a); break;
        case GateKind::Y: apply_pauli_gate(t, Pauli::Y, g.a); break;
        case GateKind::Z: apply_pauli_gate(t, Pauli::Z, g.a); break;
    }
}

/// The two-row working tableau. Columns below the window offset are identity
/// in both rows; each iteration loads a freshly sampled pair into the active
/// columns [window, n) and sweeps it in place.
class WorkTableau {
  public:
    explicit WorkTableau(std::size_t n) : n_(n), rows_{PauliRow(n), PauliRow(n)} {
        if (n == 0) {
            throw std::invalid_argument("WorkTableau: qubit count must be positive");
        }
    }

    std::size_t num_qubits() const { return n_; }
    std::size_t window() const { return window_; }
    std::size_t active_count() const { return n_ - window_; }

    void set_window(std::size_t w) {
        if (w >= n_) {
            throw std::out_of_range("WorkTableau: window offset out of range");
        }
        window_ = w;
    }

    PauliRow& row_a() { return rows_[0]; }
    PauliRow& row_b() { return rows_[1]; }
    const PauliRow& row_a() const { return rows_[0]; }
    const PauliRow& row_b() const { return rows_[1]; }

    std::span<PauliRow, 2> rows() { return rows_; }
    std::span<const PauliRow, 2> rows() const { return rows_; }

    /// Place a k-Pauli pair into the active columns; everything below the
    /// window is reset to identity.
    void load_window(const PauliRow& a, const PauliRow& b) {
        const std::size_t k = active_count();
        if (a.n != k || b.n != k) {
            throw std::invalid_argument("load_window: pair size does not match window");
        }
        for (std::size_t r = 0; r < 2; ++r) {
            const PauliRow& src = r == 0 ? a : b;
            PauliRow& dst = rows_[r];
            copy_shifted(src.x, dst.x);
            copy_shifted(src.z, dst.z);
            dst.sign = src.sign;
        }
    }

    /// Both rows identity on all columns below the window.
    bool window_clear() const {
        const std::size_t full = window_ / 64;
        const std::size_t rem = window_ % 64;
        for (const PauliRow& r : rows_) {
            for (const BitVec* v : {&r.x, &r.z}) {
                for (std::size_t i = 0; i < full; ++i) {
                    if (v->w[i] != 0) return false;
                }
                if (rem != 0 && (v->w[full] & ((1ull << rem) - 1)) != 0) return false;
            }
        }
        return true;
    }

  private:
    // Copy src bit i to dst bit window_ + i; dst bits below the window become 0.
    void copy_shifted(const BitVec& src, BitVec& dst) const {
        dst.clear();
        const std::size_t base = window_ / 64;
        const std::size_t off = window_ % 64;
        for (std::size_t j = 0; j < src.word_count(); ++j) {
            dst.w[base + j] |= src.w[j] << off;
            if (off != 0 && base + j + 1 < dst.word_count()) {
                dst.w[base + j + 1] |= src.w[j] >> (64 - off);
            }
        }
    }

    std::size_t n_;
    std::size_t window_ = 0;
    std::array<PauliRow, 2> rows_;
};

}  // namespace cliffrand
