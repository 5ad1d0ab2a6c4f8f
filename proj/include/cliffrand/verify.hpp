#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cliffrand/circuit.hpp"
#include "cliffrand/clifford_tableau.hpp"
#include "cliffrand/dense_oracle.hpp"
#include "cliffrand/pair_sampler.hpp"
#include "cliffrand/sampler.hpp"
#include "cliffrand/sweep.hpp"
#include "cliffrand/tableau.hpp"

namespace cliffrand {

/// Upper 0.1% quantiles of the chi-squared distribution, frozen from an
/// independent computation. df = 23: the 24 one-qubit Cliffords; df = 479:
/// the 480 signed anticommuting pair settings at k = 2.
inline constexpr double kChi2Crit23 = 49.7282324664315;
inline constexpr double kChi2Crit479 = 580.3723043136472;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline double chi_squared_uniform(const std::vector<std::uint64_t>& counts, double expected) {
    double stat = 0.0;
    for (std::uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

/// Dense-matrix conjugation agrees with the tableau simulation on sampled
/// circuits for every n the oracle can afford.
inline CheckResult check_dense_oracle(std::uint64_t circuits_per_n = 1000) {
    CheckResult r{"dense-oracle equivalence", true, ""};
    for (std::size_t n = 1; n <= dense::kMaxQubits; ++n) {
        for (std::uint64_t i = 0; i < circuits_per_n; ++i) {
            const Circuit c = sample_clifford(n, i, i);
            if (!dense_oracle_check(c)) {
                r.pass = false;
                std::ostringstream os;
                os << "mismatch at n=" << n << " seed=" << i;
                r.detail = os.str();
                return r;
            }
        }
    }
    std::ostringstream os;
    os << circuits_per_n << " circuits per n <= " << dense::kMaxQubits << " all match";
    r.detail = os.str();
    return r;
}

/// The 24 one-qubit Cliffords appear uniformly across sampled circuits.
inline CheckResult check_uniformity_n1(std::uint64_t samples = 24000, std::uint64_t seed = 1) {
    CheckResult r{"n=1 uniformity", false, ""};
    std::unordered_map<std::string, std::uint64_t> hits;
    for (std::uint64_t i = 0; i < samples; ++i) {
        hits[simulate(sample_clifford(1, seed, i)).canonical_key()] += 1;
    }
    std::vector<std::uint64_t> counts;
    counts.reserve(hits.size());
    for (const auto& [key, c] : hits) {
        counts.push_back(c);
    }
    const double expected = static_cast<double>(samples) / 24.0;
    const double stat = chi_squared_uniform(counts, expected);
    std::ostringstream os;
    os << hits.size() << " keys, chi2=" << stat << " (crit " << kChi2Crit23 << ", df 23)";
    r.detail = os.str();
    r.pass = hits.size() == 24 && stat < kChi2Crit23;
    return r;
}

/// Every one of the 480 * 24 two-qubit sampler settings yields a distinct
/// Clifford operator.
inline CheckResult check_injectivity_n2() {
    CheckResult r{"n=2 injectivity", false, ""};
    const auto outer = all_anticommuting_pairs(2);
    const auto inner = all_anticommuting_pairs(1);
    std::unordered_set<std::string> keys;
    keys.reserve(outer.size() * inner.size());
    for (const auto& [a1, b1] : outer) {
        for (const auto& [a2, b2] : inner) {
            WorkTableau t(2);
            CircuitBuilder builder(2, 0);
            t.set_window(0);
            t.load_window(a1, b1);
            builder.begin_segment(1);
            sweep(t, builder);
            t.set_window(1);
            t.load_window(a2, b2);
            builder.begin_segment(2);
            sweep(t, builder);
            keys.insert(simulate(builder.take()).canonical_key());
        }
    }
    const std::size_t want = outer.size() * inner.size();
    std::ostringstream os;
    os << keys.size() << " distinct Cliffords from " << want << " settings";
    r.detail = os.str();
    r.pass = keys.size() == want && want == 11520;
    return r;
}

/// Exhaustive sweep postcondition at k <= 3: end state is (+X_1, +Z_1) on
/// the window front, and replaying the emitted gates through the tableau
/// update rules on a fresh copy reproduces that end state.
inline CheckResult check_sweep_exhaustive() {
    CheckResult r{"sweep totality k<=3", true, ""};
    std::uint64_t swept = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& [a, b] : all_anticommuting_pairs(k)) {
            WorkTableau t(k);
            t.load_window(a, b);
            CircuitBuilder builder(k, 0);
            builder.begin_segment(1);
            sweep(t, builder);
            const bool a_ok = t.row_a().x.get(0) && t.row_a().x.popcount() == 1 &&
                              t.row_a().z.none() && !t.row_a().sign;
            const bool b_ok = t.row_b().z.get(0) && t.row_b().z.popcount() == 1 &&
                              t.row_b().x.none() && !t.row_b().sign;

            WorkTableau replay(k);
            replay.load_window(a, b);
            apply_circuit(replay, builder.circuit());
            const bool replay_ok =
                replay.row_a() == t.row_a() && replay.row_b() == t.row_b();

            if (!a_ok || !b_ok || !replay_ok) {
                r.pass = false;
                std::ostringstream os;
                os << "failed at k=" << k << " pair (" << to_string(a) << ", " << to_string(b)
                   << ")";
                r.detail = os.str();
                return r;
            }
            ++swept;
        }
    }
    std::ostringstream os;
    os << swept << " pairs swept, replayed, and verified";
    r.detail = os.str();
    return r;
}

inline std::vector<CheckResult> run_quick_checks() {
    return {check_dense_oracle(), check_uniformity_n1()};
}

inline std::vector<CheckResult> run_full_checks() {
    auto out = run_quick_checks();
    out.push_back(check_injectivity_n2());
    out.push_back(check_sweep_exhaustive());
    return out;
}

}  // namespace cliffrand
