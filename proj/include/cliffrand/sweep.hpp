#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cliffrand/gate.hpp"
#include "cliffrand/tableau.hpp"

namespace cliffrand {

namespace detail {

template <GateSink Sink>
void emit(WorkTableau& t, Sink& sink, const Gate& g) {
    sink.gate(g);
    apply_gate(t, g);
}

/// Set-bit positions of v at or above `from`, ascending.
inline std::vector<std::size_t> support_indices(const BitVec& v, std::size_t from) {
    std::vector<std::size_t> out;
    std::size_t wi = from / 64;
    if (wi >= v.word_count()) return out;
    std::uint64_t word = v.w[wi] & (~0ull << (from % 64));
    for (;;) {
        while (word != 0) {
            const int b = std::countr_zero(word);
            out.push_back(wi * 64 + static_cast<std::size_t>(b));
            word &= word - 1;
        }
        if (++wi >= v.word_count()) break;
        word = v.w[wi];
    }
    return out;
}

inline bool is_pm_z_at(const PauliRow& r, std::size_t ell) {
    return r.x.none() && r.z.get(ell) && r.z.popcount() == 1;
}

}  // namespace detail

/// Turn every Y or Z component of the given row (within the active window)
/// into X: S(j) where the component is Y, H(j) where it is Z.
template <GateSink Sink>
void clear_z_block(WorkTableau& t, std::size_t row, Sink& sink) {
    const PauliRow& r = t.rows()[row];
    for (std::size_t j : detail::support_indices(r.z, t.window())) {
        detail::emit(t, sink, r.x.get(j) ? Gate::s(j) : Gate::h(j));
    }
}

/// Fold the x-support of the given row down to a single column with a
/// balanced CX tree: pair up neighbours, keep the left of each pair, repeat.
/// The row must be x-only on the window. Returns the surviving column, which
/// is the minimum of the original support. Depth is ceil(log2 |support|).
template <GateSink Sink>
std::size_t cx_reduction_tree(WorkTableau& t, std::size_t row, Sink& sink) {
    std::vector<std::size_t> J = detail::support_indices(t.rows()[row].x, t.window());
    if (J.empty()) {
        throw std::invalid_argument("cx_reduction_tree: row has no x-support in the window");
    }
    while (J.size() > 1) {
        for (std::size_t i = 0; i + 1 < J.size(); i += 2) {
            detail::emit(t, sink, Gate::cx(static_cast<std::uint32_t>(J[i]),
                                           static_cast<std::uint32_t>(J[i + 1])));
        }
        for (std::size_t i = 0; 2 * i < J.size(); ++i) {
            J[i] = J[2 * i];
        }
        J.resize((J.size() + 1) / 2);
    }
    return J[0];
}

/// Swap column `from` with the window front if they differ (three CX gates).
template <GateSink Sink>
void move_to_front(WorkTableau& t, std::size_t from, Sink& sink) {
    if (from < t.window() || from >= t.num_qubits()) {
        throw std::out_of_range("move_to_front: column outside the active window");
    }
    const auto ell = static_cast<std::uint32_t>(t.window());
    const auto j = static_cast<std::uint32_t>(from);
    if (j == ell) return;
    detail::emit(t, sink, Gate::cx(ell, j));
    detail::emit(t, sink, Gate::cx(j, ell));
    detail::emit(t, sink, Gate::cx(ell, j));
}

/// Conjugate the loaded anticommuting pair to (+X_ell, +Z_ell), ell the
/// window front, emitting every gate used. Gate budget per call, k the
/// active count: at most 2k+2 H/S, at most 2k+1 CX, at most one Pauli.
template <GateSink Sink>
void sweep(WorkTableau& t, Sink& sink) {
    if (!anticommutes(t.row_a(), t.row_b())) {
        throw std::invalid_argument("sweep: loaded rows must anticommute");
    }
    if (!t.window_clear()) {
        throw std::invalid_argument("sweep: rows touch columns below the window");
    }
    const std::size_t ell = t.window();

    // Row A to +-X_ell: make it x-only, fold to one column, bring to front.
    clear_z_block(t, 0, sink);
    const std::size_t survivor = cx_reduction_tree(t, 0, sink);
    move_to_front(t, survivor, sink);
    assert(t.row_a().x.get(ell) && t.row_a().x.popcount() == 1 && t.row_a().z.none());
    // B still anticommutes with A, so its component at ell is Y or Z.
    assert(t.row_b().z.get(ell));

    // Row B to +-Z_ell. H(ell) maps A to Z_ell, which every gate below
    // preserves: ell is the minimum of B's x-support, hence always the
    // control in the tree.
    if (!detail::is_pm_z_at(t.row_b(), ell)) {
        detail::emit(t, sink, Gate::h(static_cast<std::uint32_t>(ell)));
        clear_z_block(t, 1, sink);
        [[maybe_unused]] const std::size_t b_survivor = cx_reduction_tree(t, 1, sink);
        assert(b_survivor == ell);
        detail::emit(t, sink, Gate::h(static_cast<std::uint32_t>(ell)));
    }

    // Signs: one Pauli fixes both, since X_ell flips only row B, Z_ell only
    // row A, and Y_ell both.
    const bool sa = t.row_a().sign;
    const bool sb = t.row_b().sign;
    const auto q = static_cast<std::uint32_t>(ell);
    if (sa && sb) {
        detail::emit(t, sink, Gate::y(q));
    } else if (sa) {
        detail::emit(t, sink, Gate::z(q));
    } else if (sb) {
        detail::emit(t, sink, Gate::x(q));
    }
    assert(detail::is_pm_z_at(t.row_b(), ell) && !t.row_b().sign);
    assert(t.row_a().x.get(ell) && t.row_a().x.popcount() == 1 && t.row_a().z.none() &&
           !t.row_a().sign);
}

}  // namespace cliffrand
