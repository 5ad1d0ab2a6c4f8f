#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cliffrand/cli.hpp"
#include "cliffrand/sampler.hpp"
#include "cliffrand/serialize.hpp"

using namespace cliffrand;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

/// Split a multi-circuit stream into chunks, one per circuit header.
std::vector<std::string> split_on(const std::string& text, const std::string& header_prefix) {
    std::vector<std::string> chunks;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind(header_prefix, 0) == 0) {
            chunks.emplace_back();
        }
        if (chunks.empty()) {
            ADD_FAILURE() << "content before first header";
            return {};
        }
        chunks.back() += line + "\n";
    }
    return chunks;
}

TEST(Cli, SampleIsDeterministic) {
    const auto a = run({"sample", "--n", "4", "--count", "2", "--seed", "7"});
    const auto b = run({"sample", "--n", "4", "--count", "2", "--seed", "7"});
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(Cli, SerialAndParallelBytesMatchAcrossFormats) {
    for (const char* fmt : {"qasm", "jsonl", "text"}) {
        const auto serial =
            run({"sample", "--n", "5", "--count", "3", "--seed", "11", "--format", fmt,
                 "--mode", "serial"});
        const auto parallel =
            run({"sample", "--n", "5", "--count", "3", "--seed", "11", "--format", fmt,
                 "--mode", "parallel"});
        EXPECT_EQ(serial.exit_code, 0);
        EXPECT_EQ(parallel.exit_code, 0);
        EXPECT_EQ(serial.out, parallel.out) << fmt;
    }
}

TEST(Cli, CircuitZeroMatchesLibrarySample) {
    const auto r = run({"sample", "--n", "6", "--seed", "42", "--format", "text"});
    ASSERT_EQ(r.exit_code, 0);
    const Circuit parsed = parse(r.out, Format::TEXT);
    const Circuit lib = sample_clifford(6, 42);
    EXPECT_EQ(parsed.n, lib.n);
    EXPECT_EQ(parsed.gates, lib.gates);
    EXPECT_EQ(parsed.segments, lib.segments);
}

TEST(Cli, MultiCircuitJsonlUsesCircuitIndexStreams) {
    const auto r = run({"sample", "--n", "3", "--count", "3", "--seed", "5", "--format",
                        "jsonl"});
    ASSERT_EQ(r.exit_code, 0);
    const auto chunks = split_on(r.out, "{\"n\":");
    ASSERT_EQ(chunks.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        const Circuit got = parse(chunks[i], Format::JSONL);
        const Circuit want = sample_clifford(3, 5, i);
        EXPECT_EQ(got.gates, want.gates) << "circuit " << i;
    }
}

TEST(Cli, QasmOutputParsesBack) {
    const auto r = run({"sample", "--n", "4", "--seed", "3", "--format", "qasm"});
    ASSERT_EQ(r.exit_code, 0);
    const Circuit parsed = parse(r.out, Format::QASM);
    EXPECT_EQ(parsed.gates, sample_clifford(4, 3).gates);
}

TEST(Cli, WritesToFile) {
    const std::string path = std::filesystem::temp_directory_path() / "cliffrand_cli_test.txt";
    const auto r = run({"sample", "--n", "2", "--seed", "1", "--out", path});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), run({"sample", "--n", "2", "--seed", "1"}).out);
    std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"sample"}).exit_code, 2);  // missing --n
    EXPECT_EQ(run({"sample", "--n", "0"}).exit_code, 2);
    EXPECT_EQ(run({"sample", "--n", "2", "--count", "0"}).exit_code, 2);
    EXPECT_EQ(run({"sample", "--n", "2", "--format", "yaml"}).exit_code, 2);
    EXPECT_EQ(run({"sample", "--n", "2", "--mode", "turbo"}).exit_code, 2);
    EXPECT_EQ(run({"stats"}).exit_code, 2);
    EXPECT_EQ(run({"verify", "--level", "paranoid"}).exit_code, 2);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
}

TEST(Cli, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("sample"), std::string::npos);
}

TEST(Cli, IoErrorExitsFour) {
    const auto r = run({"sample", "--n", "2", "--out", "/nonexistent_dir/x.txt"});
    EXPECT_EQ(r.exit_code, 4);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, StatsReportsBoundsAndPasses) {
    const auto r = run({"stats", "--n", "4", "--count", "100", "--seed", "9"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("bound=52"), std::string::npos);
    EXPECT_NE(r.out.find("bound=42"), std::string::npos);
    EXPECT_NE(r.out.find("bounds: PASS"), std::string::npos);
}

TEST(Cli, VerifyQuickPasses) {
    const auto r = run({"verify"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("dense-oracle equivalence: PASS"), std::string::npos);
    EXPECT_NE(r.out.find("n=1 uniformity: PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
