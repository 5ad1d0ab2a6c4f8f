#pragma once

#include <cstdint>
#include <vector>

#include "cliffrand/bitvec.hpp"
#include "cliffrand/gate.hpp"
#include "cliffrand/tableau.hpp"

namespace cliffrand {

/// A gate list over n qubits. `segments` holds the start offset of each
/// sweep iteration's gates, in emission order; it is empty for circuits that
/// were parsed from a format without segment markers.
struct Circuit {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<Gate> gates;
    std::vector<std::size_t> segments;

    bool operator==(const Circuit&) const = default;
};

/// Collects emitted gates into a Circuit, recording segment boundaries.
class CircuitBuilder {
  public:
    CircuitBuilder(std::size_t n, std::uint64_t seed) {
        c_.n = n;
        c_.seed = seed;
    }

    void begin_segment(std::uint32_t) { c_.segments.push_back(c_.gates.size()); }
    void gate(const Gate& g) { c_.gates.push_back(g); }

    Circuit take() { return std::move(c_); }
    const Circuit& circuit() const { return c_; }

  private:
    Circuit c_;
};

template <TableauLike T>
void apply_circuit(T& t, const Circuit& c) {
    for (const Gate& g : c.gates) {
        apply_gate(t, g);
    }
}

/// Circuit depth under the usual scheduling model: each gate runs one step
/// after the latest earlier gate sharing a qubit with it.
inline std::size_t depth(const Circuit& c) {
    std::vector<std::size_t> level(c.n, 0);
    std::size_t d = 0;
    for (const Gate& g : c.gates) {
        std::size_t t = level[g.a];
        if (is_two_qubit(g.kind) && level[g.b] > t) {
            t = level[g.b];
        }
        ++t;
        level[g.a] = t;
        if (is_two_qubit(g.kind)) {
            level[g.b] = t;
        }
        if (t > d) {
            d = t;
        }
    }
    return d;
}

/// Inverse circuit: gates reversed, S and Sdg exchanged, everything else its
/// own inverse. Segment structure does not survive reversal.
inline Circuit adjoint(const Circuit& c) {
    Circuit out;
    out.n = c.n;
    out.seed = c.seed;
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::S) {
            g.kind = GateKind::SDG;
        } else if (g.kind == GateKind::SDG) {
            g.kind = GateKind::S;
        }
        out.gates.push_back(g);
    }
    return out;
}

/// Worst-case total gate count of a sampled n-qubit circuit: summing the
/// per-iteration budget 4k+3 over k = 1..n gives exactly 5n + 2n^2.
inline constexpr std::uint64_t gate_count_bound(std::uint64_t n) { return 5 * n + 2 * n * n; }

/// Worst-case depth: each iteration on k active qubits contributes at most
/// 8 + 2*ceil(log2 k) layers.
inline constexpr std::uint64_t depth_bound(std::uint64_t n) {
    std::uint64_t d = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        d += 8 + 2 * ceil_log2(k);
    }
    return d;
}

}  // namespace cliffrand
