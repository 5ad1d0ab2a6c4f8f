#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "cliffrand/sampler.hpp"
#include "cliffrand/serialize.hpp"

using namespace cliffrand;

namespace {

Circuit fixture_circuit() {
    Circuit c;
    c.n = 3;
    c.seed = 7;
    c.gates = {Gate::h(0), Gate::s(1), Gate::cx(0, 2), Gate::sdg(2), Gate::x(1),
               Gate::cx(2, 1), Gate::y(0), Gate::z(2)};
    c.segments = {0, 5, 8};  // third segment empty
    return c;
}

TEST(Serialize, QasmExactText) {
    Circuit c;
    c.n = 2;
    c.seed = 9;
    c.gates = {Gate::h(0), Gate::cx(0, 1), Gate::s(1)};
    c.segments = {0, 3};
    EXPECT_EQ(serialize(c, Format::QASM),
              "OPENQASM 2.0;\n"
              "include \"qelib1.inc\";\n"
              "qreg q[2];\n"
              "// segment 1\n"
              "h q[0];\n"
              "cx q[0],q[1];\n"
              "s q[1];\n"
              "// segment 2\n");
}

TEST(Serialize, JsonlExactText) {
    Circuit c;
    c.n = 2;
    c.seed = 9;
    c.gates = {Gate::h(0), Gate::cx(0, 1)};
    c.segments = {0, 2};
    EXPECT_EQ(serialize(c, Format::JSONL),
              "{\"n\":2,\"seed\":9}\n"
              "{\"g\":\"h\",\"q\":[0]}\n"
              "{\"g\":\"cx\",\"q\":[0,1]}\n");
}

TEST(Serialize, TextExactTextOneBased) {
    Circuit c;
    c.n = 2;
    c.seed = 9;
    c.gates = {Gate::h(0), Gate::cx(0, 1), Gate::sdg(1)};
    c.segments = {0, 3};
    EXPECT_EQ(serialize(c, Format::TEXT),
              "# n=2 seed=9\n"
              "# segment 1\n"
              "H(1)\n"
              "CX(1,2)\n"
              "SDG(2)\n"
              "# segment 2\n");
}

TEST(Serialize, RoundTripQasmKeepsGatesAndSegments) {
    const Circuit c = fixture_circuit();
    const Circuit back = parse(serialize(c, Format::QASM), Format::QASM);
    EXPECT_EQ(back.n, c.n);
    EXPECT_EQ(back.gates, c.gates);
    EXPECT_EQ(back.segments, c.segments);
    // QASM has no seed field.
    EXPECT_EQ(back.seed, 0u);
}

TEST(Serialize, RoundTripJsonlKeepsGatesAndSeed) {
    const Circuit c = fixture_circuit();
    const Circuit back = parse(serialize(c, Format::JSONL), Format::JSONL);
    EXPECT_EQ(back.n, c.n);
    EXPECT_EQ(back.seed, c.seed);
    EXPECT_EQ(back.gates, c.gates);
    EXPECT_TRUE(back.segments.empty());
}

TEST(Serialize, RoundTripTextKeepsEverything) {
    const Circuit c = fixture_circuit();
    const Circuit back = parse(serialize(c, Format::TEXT), Format::TEXT);
    EXPECT_EQ(back.n, c.n);
    EXPECT_EQ(back.seed, c.seed);
    EXPECT_EQ(back.gates, c.gates);
    EXPECT_EQ(back.segments, c.segments);
}

TEST(Serialize, RoundTripSampledCircuits) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Circuit c = sample_clifford(6, seed);
        for (Format f : {Format::QASM, Format::JSONL, Format::TEXT}) {
            const Circuit back = parse(serialize(c, f), f);
            ASSERT_EQ(back.n, c.n);
            ASSERT_EQ(back.gates, c.gates) << format_name(f) << " seed=" << seed;
            if (f != Format::JSONL) {
                ASSERT_EQ(back.segments, c.segments);
            }
        }
    }
}

TEST(Serialize, ParserToleratesWhitespaceAndCrlf) {
    const std::string qasm =
        "OPENQASM 2.0;\r\n"
        "include \"qelib1.inc\";\r\n"
        "\r\n"
        "qreg q[2];\r\n"
        "  h q[ 1 ];\r\n"
        "cx  q[0] , q[1] ;\r\n";
    const Circuit c = parse(qasm, Format::QASM);
    ASSERT_EQ(c.gates.size(), 2u);
    EXPECT_EQ(c.gates[0], Gate::h(1));
    EXPECT_EQ(c.gates[1], Gate::cx(0, 1));
}

TEST(Serialize, ParserRejectsMalformedInput) {
    EXPECT_THROW(parse("", Format::QASM), std::invalid_argument);
    EXPECT_THROW(parse("OPENQASM 3.0;\n", Format::QASM), std::invalid_argument);
    EXPECT_THROW(parse("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nh q[1];\n",
                       Format::QASM),
                 std::invalid_argument);  // index out of range
    EXPECT_THROW(parse("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0]\n",
                       Format::QASM),
                 std::invalid_argument);  // missing semicolon
    EXPECT_THROW(parse("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[1],q[1];\n",
                       Format::QASM),
                 std::invalid_argument);  // equal operands

    EXPECT_THROW(parse("", Format::JSONL), std::invalid_argument);
    EXPECT_THROW(parse("{\"n\":1,\"seed\":0}\n{\"g\":\"cx\",\"q\":[0]}\n", Format::JSONL),
                 std::invalid_argument);  // wrong arity
    EXPECT_THROW(parse("{\"n\":1,\"seed\":0}\nnot json\n", Format::JSONL),
                 std::invalid_argument);

    EXPECT_THROW(parse("", Format::TEXT), std::invalid_argument);
    EXPECT_THROW(parse("# n=2 seed=0\nH(0)\n", Format::TEXT),
                 std::invalid_argument);  // text is 1-based
    EXPECT_THROW(parse("# n=2 seed=0\nH(3)\n", Format::TEXT), std::invalid_argument);
    EXPECT_THROW(parse("H(1)\n", Format::TEXT), std::invalid_argument);  // no header
}

TEST(Serialize, FormatNames) {
    EXPECT_EQ(format_from_name("qasm"), Format::QASM);
    EXPECT_EQ(format_from_name("jsonl"), Format::JSONL);
    EXPECT_EQ(format_from_name("text"), Format::TEXT);
    EXPECT_THROW(format_from_name("yaml"), std::invalid_argument);
    EXPECT_EQ(format_name(Format::QASM), "qasm");
}

TEST(Serialize, WriterStreamsHeaderBeforeGates) {
    std::ostringstream os;
    SerialWriter w(os, Format::JSONL, 2, 5);
    EXPECT_EQ(os.str(), "{\"n\":2,\"seed\":5}\n");
    w.begin_segment(1);
    w.gate(Gate::h(0));
    EXPECT_EQ(os.str(), "{\"n\":2,\"seed\":5}\n{\"g\":\"h\",\"q\":[0]}\n");
}

}  // namespace
