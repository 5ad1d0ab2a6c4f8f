#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cliffrand/circuit.hpp"
#include "cliffrand/sampler.hpp"
#include "cliffrand/serialize.hpp"
#include "cliffrand/verify.hpp"

namespace cliffrand {

/// Exit codes, fixed contract: 0 success, 2 usage error, 3 verification or
/// bound failure, 4 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitIo = 4;

namespace detail {

struct RunConfig {
    std::uint64_t n = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string mode = "serial";
    std::string out_path;
};

inline int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "cannot open " << cfg.out_path << " for writing\n";
            return kExitIo;
        }
        os = &file;
    }
    const Format fmt = format_from_name(cfg.format);
    const auto n = static_cast<std::size_t>(cfg.n);
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        if (cfg.mode == "parallel") {
            write_circuit(*os, sample_clifford_parallel(n, cfg.seed, i), fmt);
        } else {
            SerialWriter w(*os, fmt, n, cfg.seed);
            sample_clifford_stream(n, cfg.seed, w, i);
        }
    }
    os->flush();
    if (!os->good()) {
        err << "write failure\n";
        return kExitIo;
    }
    return kExitOk;
}

inline int cmd_stats(const RunConfig& cfg, std::ostream& out) {
    const auto n = static_cast<std::size_t>(cfg.n);
    const std::uint64_t gate_bound = gate_count_bound(cfg.n);
    const std::uint64_t dep_bound = depth_bound(cfg.n);
    std::uint64_t gc_min = ~0ull, gc_max = 0, gc_sum = 0;
    std::uint64_t dp_min = ~0ull, dp_max = 0, dp_sum = 0;
    bool within = true;
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        const Circuit c = sample_clifford(n, cfg.seed, i);
        const std::uint64_t gc = c.gates.size();
        const std::uint64_t dp = depth(c);
        gc_min = std::min(gc_min, gc);
        gc_max = std::max(gc_max, gc);
        gc_sum += gc;
        dp_min = std::min(dp_min, dp);
        dp_max = std::max(dp_max, dp);
        dp_sum += dp;
        within = within && gc <= gate_bound && dp <= dep_bound;
    }
    const double cnt = static_cast<double>(cfg.count);
    out << "n=" << cfg.n << " count=" << cfg.count << " seed=" << cfg.seed << "\n";
    out << "gates: min=" << gc_min << " mean=" << std::fixed << std::setprecision(2)
        << static_cast<double>(gc_sum) / cnt << " max=" << gc_max << " bound=" << gate_bound
        << "\n";
    out << "depth: min=" << dp_min << " mean=" << static_cast<double>(dp_sum) / cnt
        << " max=" << dp_max << " bound=" << dep_bound << "\n";
    out << "bounds: " << (within ? "PASS" : "FAIL") << "\n";
    out.unsetf(std::ios::fixed);
    return within ? kExitOk : kExitVerifyFailed;
}

inline int cmd_verify(const std::string& level, std::ostream& out) {
    const auto results = level == "full" ? run_full_checks() : run_quick_checks();
    bool all = true;
    for (const CheckResult& r : results) {
        out << r.name << ": " << (r.pass ? "PASS" : "FAIL");
        if (!r.detail.empty()) {
            out << " (" << r.detail << ")";
        }
        out << "\n";
        all = all && r.pass;
    }
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace detail

/// Entry point shared by the binary and the in-process CLI tests. Args are
/// in natural order, program name excluded.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"uniform random Clifford circuit sampler"};
    app.require_subcommand(1);

    detail::RunConfig cfg;
    std::string level = "quick";

    const auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());

    CLI::App* sample = app.add_subcommand("sample", "sample circuits and serialize them");
    sample->add_option("--n", cfg.n, "qubit count")->required()->check(positive);
    sample->add_option("--count", cfg.count, "number of circuits")->check(positive);
    sample->add_option("--seed", cfg.seed, "base seed");
    sample->add_option("--format", cfg.format, "qasm | jsonl | text")
        ->check(CLI::IsMember({"qasm", "jsonl", "text"}));
    sample->add_option("--mode", cfg.mode, "serial | parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
    sample->add_option("--out", cfg.out_path, "output file (default stdout)");

    CLI::App* stats = app.add_subcommand("stats", "sample and report gate/depth statistics");
    stats->add_option("--n", cfg.n, "qubit count")->required()->check(positive);
    stats->add_option("--count", cfg.count, "number of circuits")->check(positive);
    stats->add_option("--seed", cfg.seed, "base seed");

    CLI::App* verify = app.add_subcommand("verify", "run self-checks");
    verify->add_option("--level", level, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sample->parsed()) return detail::cmd_sample(cfg, out, err);
        if (stats->parsed()) return detail::cmd_stats(cfg, out);
        return detail::cmd_verify(level, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cliffrand
