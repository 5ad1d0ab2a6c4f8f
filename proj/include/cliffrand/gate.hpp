#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace cliffrand {

/// Gate set emitted by the sampler, plus SDG so adjoint circuits have a
/// faithful inverse of S.
enum class GateKind : std::uint8_t { H, S, SDG, CX, X, Y, Z };

inline bool is_two_qubit(GateKind k) { return k == GateKind::CX; }

inline std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::SDG: return "sdg";
        case GateKind::CX: return "cx";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
    }
    return "?";
}

/// One gate instance. Qubit indices are 0-based; b is meaningful only for CX
/// (a = control, b = target) and mirrors a otherwise.
struct Gate {
    GateKind kind = GateKind::H;
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    static Gate h(std::uint32_t q) { return {GateKind::H, q, q}; }
    static Gate s(std::uint32_t q) { return {GateKind::S, q, q}; }
    static Gate sdg(std::uint32_t q) { return {GateKind::SDG, q, q}; }
    static Gate cx(std::uint32_t c, std::uint32_t t) { return {GateKind::CX, c, t}; }
    static Gate x(std::uint32_t q) { return {GateKind::X, q, q}; }
    static Gate y(std::uint32_t q) { return {GateKind::Y, q, q}; }
    static Gate z(std::uint32_t q) { return {GateKind::Z, q, q}; }

    bool operator==(const Gate&) const = default;
};

/// Receives gates in the exact order their tableau updates are applied.
template <typename T>
concept GateSink = requires(T& t, const Gate& g) {
    t.gate(g);
};

/// A gate sink that is also told when iteration segment l (1-based) starts.
template <typename T>
concept SegmentSink = GateSink<T> && requires(T& t, std::uint32_t l) {
    t.begin_segment(l);
};

/// Sink that counts gates and does nothing else.
struct CountingSink {
    std::size_t count = 0;
    void gate(const Gate&) { ++count; }
    void begin_segment(std::uint32_t) {}
};

/// Appends gates to a caller-owned vector, ignoring segment marks.
struct GateVectorSink {
    std::vector<Gate>& out;
    void gate(const Gate& g) { out.push_back(g); }
    void begin_segment(std::uint32_t) {}
};

}  // namespace cliffrand
