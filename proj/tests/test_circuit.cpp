#include <gtest/gtest.h>

#include "cliffrand/circuit.hpp"
#include "cliffrand/sampler.hpp"

using namespace cliffrand;

namespace {

TEST(Circuit, DepthCountsParallelLayers) {
    Circuit c;
    c.n = 4;
    EXPECT_EQ(depth(c), 0u);
    // h0 and h1 share a layer; cx(0,1) must follow both; h3 is independent.
    c.gates = {Gate::h(0), Gate::h(1), Gate::cx(0, 1), Gate::h(3)};
    EXPECT_EQ(depth(c), 2u);
    // A chain on one qubit is purely sequential.
    c.gates = {Gate::h(2), Gate::s(2), Gate::h(2)};
    EXPECT_EQ(depth(c), 3u);
    // Two-qubit gates serialize on the shared qubit.
    c.gates = {Gate::cx(0, 1), Gate::cx(1, 2), Gate::cx(2, 3)};
    EXPECT_EQ(depth(c), 3u);
    c.gates = {Gate::cx(0, 1), Gate::cx(2, 3)};
    EXPECT_EQ(depth(c), 1u);
}

TEST(Circuit, AdjointReversesAndInvertsS) {
    Circuit c;
    c.n = 2;
    c.seed = 3;
    c.gates = {Gate::h(0), Gate::s(1), Gate::sdg(0), Gate::cx(0, 1)};
    const Circuit a = adjoint(c);
    EXPECT_EQ(a.n, c.n);
    EXPECT_EQ(a.seed, c.seed);
    const std::vector<Gate> want = {Gate::cx(0, 1), Gate::s(0), Gate::sdg(1), Gate::h(0)};
    EXPECT_EQ(a.gates, want);
    EXPECT_TRUE(a.segments.empty());
}

TEST(Circuit, GateCountBoundFormula) {
    EXPECT_EQ(gate_count_bound(1), 7u);
    EXPECT_EQ(gate_count_bound(4), 52u);
    EXPECT_EQ(gate_count_bound(64), 8512u);
}

TEST(Circuit, DepthBoundFormula) {
    // Sum over k = 1..n of 8 + 2*ceil(log2 k).
    EXPECT_EQ(depth_bound(1), 8u);
    EXPECT_EQ(depth_bound(2), 18u);   // 8 + 10
    EXPECT_EQ(depth_bound(4), 42u);   // 8 + 10 + 12 + 12
    EXPECT_EQ(depth_bound(8), 98u);
}

TEST(Circuit, BuilderRecordsSegmentsInEmissionOrder) {
    CircuitBuilder b(3, 11);
    b.begin_segment(1);
    b.gate(Gate::h(0));
    b.gate(Gate::cx(0, 1));
    b.begin_segment(2);
    b.gate(Gate::s(1));
    b.begin_segment(3);
    const Circuit c = b.take();
    EXPECT_EQ(c.n, 3u);
    EXPECT_EQ(c.seed, 11u);
    EXPECT_EQ(c.gates.size(), 3u);
    const std::vector<std::size_t> want = {0, 2, 3};
    EXPECT_EQ(c.segments, want);
}

TEST(Circuit, SampledCircuitHasOneSegmentPerIteration) {
    const Circuit c = sample_clifford(5, 21);
    ASSERT_EQ(c.segments.size(), 5u);
    EXPECT_EQ(c.segments[0], 0u);
    for (std::size_t i = 1; i < c.segments.size(); ++i) {
        EXPECT_LE(c.segments[i - 1], c.segments[i]);
    }
    EXPECT_LE(c.segments.back(), c.gates.size());
}

TEST(Circuit, SampledGatesRespectBothBounds) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (std::size_t n : {1u, 2u, 3u, 8u, 17u}) {
            const Circuit c = sample_clifford(n, seed);
            ASSERT_LE(c.gates.size(), gate_count_bound(n)) << "n=" << n << " seed=" << seed;
            ASSERT_LE(depth(c), depth_bound(n)) << "n=" << n << " seed=" << seed;
        }
    }
}

TEST(Circuit, SegmentGatesStayInTheirWindow) {
    const Circuit c = sample_clifford(6, 2);
    for (std::size_t s = 0; s < c.segments.size(); ++s) {
        const std::size_t lo = c.segments[s];
        const std::size_t hi = s + 1 < c.segments.size() ? c.segments[s + 1] : c.gates.size();
        for (std::size_t i = lo; i < hi; ++i) {
            // Iteration s+1 works on columns >= s.
            EXPECT_GE(c.gates[i].a, s);
            EXPECT_GE(c.gates[i].b, s);
        }
    }
}

// Watches the draw counters of every iteration's stream as gates arrive.
struct LatencyProbeSink {
    const std::vector<RngStream>& streams;
    CircuitBuilder& inner;
    std::size_t current = 0;  // 1-based segment being generated
    bool segment_has_gates = false;

    void begin_segment(std::uint32_t ell) {
        inner.begin_segment(ell);
        current = ell;
        segment_has_gates = false;
    }
    void gate(const Gate& g) {
        if (!segment_has_gates) {
            segment_has_gates = true;
            // First gate of segment `current`: later iterations have not
            // consumed any randomness yet.
            for (std::size_t j = current; j < streams.size(); ++j) {
                EXPECT_EQ(streams[j].draws(), 0u) << "segment " << current;
            }
            EXPECT_GT(streams[current - 1].draws(), 0u);
        }
        inner.gate(g);
    }
};

TEST(Circuit, StreamsEachSegmentBeforeTouchingLaterRandomness) {
    const std::size_t n = 9;
    const std::uint64_t seed = 77;
    std::vector<RngStream> streams;
    for (std::size_t ell = 1; ell <= n; ++ell) {
        streams.emplace_back(seed, stream_id_for(0, ell));
    }
    WorkTableau t(n);
    CircuitBuilder b(n, seed);
    LatencyProbeSink probe{streams, b};
    for (std::size_t ell = 1; ell <= n; ++ell) {
        sample_segment(t, ell, streams[ell - 1], probe);
    }
    EXPECT_EQ(b.take(), sample_clifford(n, seed));
}

TEST(Circuit, ParallelMatchesSerialExactly) {
    for (std::size_t n : {1u, 2u, 9u, 40u}) {
        const Circuit serial = sample_clifford(n, 5, 3);
        EXPECT_EQ(sample_clifford_parallel(n, 5, 3), serial) << "n=" << n;
        EXPECT_EQ(sample_clifford_parallel(n, 5, 3, 4), serial) << "n=" << n;
    }
}

}  // namespace
