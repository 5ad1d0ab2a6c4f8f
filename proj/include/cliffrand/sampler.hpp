#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "cliffrand/circuit.hpp"
#include "cliffrand/gate.hpp"
#include "cliffrand/pair_sampler.hpp"
#include "cliffrand/rng.hpp"
#include "cliffrand/sweep.hpp"
#include "cliffrand/tableau.hpp"

namespace cliffrand {

/// Run sweep iteration ell (1-based): sample an anticommuting pair on the
/// k = n+1-ell active qubits from rng, load it at window ell-1, and sweep it
/// to (+X_ell, +Z_ell), emitting gates into sink. Returns the number of
/// candidate pairs the rejection loop consumed. Iterations are independent:
/// neither the gates nor the randomness of one depends on another, which is
/// what permits out-of-order and concurrent generation.
template <SegmentSink Sink>
std::uint64_t sample_segment(WorkTableau& t, std::size_t ell, RngStream& rng, Sink& sink) {
    t.set_window(ell - 1);
    const SampledPair p = sample_anticommuting_pair(t.active_count(), rng);
    t.load_window(p.a, p.b);
    sink.begin_segment(static_cast<std::uint32_t>(ell));
    sweep(t, sink);
    return p.trials;
}

/// Stream a uniformly random n-qubit Clifford circuit into sink, segment by
/// segment. Iteration ell draws from stream id (circuit_index << 32) | ell.
template <SegmentSink Sink>
void sample_clifford_stream(std::size_t n, std::uint64_t seed, Sink& sink,
                            std::uint64_t circuit_index = 0) {
    WorkTableau t(n);
    for (std::size_t ell = 1; ell <= n; ++ell) {
        RngStream rng(seed, stream_id_for(circuit_index, ell));
        sample_segment(t, ell, rng, sink);
    }
}

/// Serial sampling into an in-memory circuit.
inline Circuit sample_clifford(std::size_t n, std::uint64_t seed, std::uint64_t circuit_index = 0) {
    CircuitBuilder b(n, seed);
    sample_clifford_stream(n, seed, b, circuit_index);
    return b.take();
}

/// Generate the n segments concurrently, then concatenate in iteration
/// order. Bit-identical to sample_clifford with the same arguments.
inline Circuit sample_clifford_parallel(std::size_t n, std::uint64_t seed,
                                        std::uint64_t circuit_index = 0,
                                        std::size_t num_threads = 0) {
    if (num_threads == 0) {
        num_threads = std::thread::hardware_concurrency();
        if (num_threads == 0) num_threads = 1;
    }
    if (num_threads > n) num_threads = n;

    std::vector<std::vector<Gate>> segs(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        WorkTableau t(n);
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            const std::size_t ell = i + 1;
            RngStream rng(seed, stream_id_for(circuit_index, ell));
            GateVectorSink vs{segs[i]};
            sample_segment(t, ell, rng, vs);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(num_threads);
    for (std::size_t i = 0; i < num_threads; ++i) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }

    Circuit c;
    c.n = n;
    c.seed = seed;
    for (std::size_t i = 0; i < n; ++i) {
        c.segments.push_back(c.gates.size());
        c.gates.insert(c.gates.end(), segs[i].begin(), segs[i].end());
    }
    return c;
}

}  // namespace cliffrand
