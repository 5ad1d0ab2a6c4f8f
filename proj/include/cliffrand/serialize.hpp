#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cliffrand/circuit.hpp"
#include "cliffrand/gate.hpp"

namespace cliffrand {

enum class Format { QASM, JSONL, TEXT };

inline Format format_from_name(std::string_view name) {
    if (name == "qasm") return Format::QASM;
    if (name == "jsonl") return Format::JSONL;
    if (name == "text") return Format::TEXT;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

inline std::string_view format_name(Format f) {
    switch (f) {
        case Format::QASM: return "qasm";
        case Format::JSONL: return "jsonl";
        case Format::TEXT: return "text";
    }
    return "";
}

/// Streams one circuit in the chosen format: the header is written up front,
/// every gate as soon as it arrives. QASM and TEXT carry segment marks as
/// comments; JSONL is a pure gate stream after its header object.
class SerialWriter {
  public:
    SerialWriter(std::ostream& os, Format f, std::size_t n, std::uint64_t seed)
        : os_(&os), f_(f) {
        switch (f_) {
            case Format::QASM:
                *os_ << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << n << "];\n";
                break;
            case Format::JSONL:
                *os_ << "{\"n\":" << n << ",\"seed\":" << seed << "}\n";
                break;
            case Format::TEXT:
                *os_ << "# n=" << n << " seed=" << seed << "\n";
                break;
        }
    }

    void begin_segment(std::uint32_t ell) {
        switch (f_) {
            case Format::QASM: *os_ << "// segment " << ell << "\n"; break;
            case Format::JSONL: break;
            case Format::TEXT: *os_ << "# segment " << ell << "\n"; break;
        }
    }

    void gate(const Gate& g) {
        const std::string_view name = gate_name(g.kind);
        switch (f_) {
            case Format::QASM:
                *os_ << name << " q[" << g.a << "]";
                if (is_two_qubit(g.kind)) *os_ << ",q[" << g.b << "]";
                *os_ << ";\n";
                break;
            case Format::JSONL:
                *os_ << "{\"g\":\"" << name << "\",\"q\":[" << g.a;
                if (is_two_qubit(g.kind)) *os_ << "," << g.b;
                *os_ << "]}\n";
                break;
            case Format::TEXT:
                for (char ch : name) *os_ << static_cast<char>(std::toupper(ch));
                *os_ << "(" << g.a + 1;
                if (is_two_qubit(g.kind)) *os_ << "," << g.b + 1;
                *os_ << ")\n";
                break;
        }
    }

  private:
    std::ostream* os_;
    Format f_;
};

inline void write_circuit(std::ostream& os, const Circuit& c, Format f) {
    SerialWriter w(os, f, c.n, c.seed);
    std::size_t next_seg = 0;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        while (next_seg < c.segments.size() && c.segments[next_seg] == i) {
            w.begin_segment(static_cast<std::uint32_t>(next_seg + 1));
            ++next_seg;
        }
        w.gate(c.gates[i]);
    }
    while (next_seg < c.segments.size()) {
        w.begin_segment(static_cast<std::uint32_t>(next_seg + 1));
        ++next_seg;
    }
}

inline std::string serialize(const Circuit& c, Format f) {
    std::ostringstream os;
    write_circuit(os, c, f);
    return os.str();
}

namespace detail {

inline GateKind kind_from_name(std::string_view name, std::size_t line_no) {
    if (name == "h") return GateKind::H;
    if (name == "s") return GateKind::S;
    if (name == "sdg") return GateKind::SDG;
    if (name == "cx") return GateKind::CX;
    if (name == "x") return GateKind::X;
    if (name == "y") return GateKind::Y;
    if (name == "z") return GateKind::Z;
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": unknown gate: " + std::string(name));
}

inline void check_index(std::uint64_t q, std::size_t n, std::size_t line_no) {
    if (q >= n) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": qubit index out of range");
    }
}

[[noreturn]] inline void malformed(std::size_t line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

inline std::uint64_t parse_u64(std::string_view s, std::size_t line_no) {
    if (s.empty()) malformed(line_no, "expected number");
    std::uint64_t v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') malformed(line_no, "expected number");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
}

inline std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

/// `// segment K` or `# segment K`; returns K or 0.
inline std::uint64_t segment_mark(std::string_view line, std::string_view comment,
                                  std::size_t line_no) {
    if (!line.starts_with(comment)) return 0;
    std::string_view rest = trimmed(line.substr(comment.size()));
    if (!rest.starts_with("segment")) return 0;
    rest = trimmed(rest.substr(7));
    const std::uint64_t k = parse_u64(rest, line_no);
    if (k == 0) malformed(line_no, "segment numbers start at 1");
    return k;
}

}  // namespace detail

inline Circuit parse_qasm(std::istream& is) {
    Circuit c;
    std::string raw;
    std::size_t line_no = 0;
    int header = 0;  // lines of preamble seen
    while (std::getline(is, raw)) {
        ++line_no;
        std::string_view line = detail::trimmed(raw);
        if (line.empty()) continue;
        if (line.starts_with("//")) {
            if (const auto k = detail::segment_mark(line, "//", line_no)) {
                if (k != c.segments.size() + 1) {
                    detail::malformed(line_no, "segment numbers must be consecutive");
                }
                c.segments.push_back(c.gates.size());
            }
            continue;
        }
        if (header == 0) {
            if (line != "OPENQASM 2.0;") detail::malformed(line_no, "expected OPENQASM 2.0;");
            header = 1;
            continue;
        }
        if (header == 1) {
            if (line != "include \"qelib1.inc\";") {
                detail::malformed(line_no, "expected include \"qelib1.inc\";");
            }
            header = 2;
            continue;
        }
        if (header == 2) {
            if (!line.starts_with("qreg q[") || !line.ends_with("];")) {
                detail::malformed(line_no, "expected qreg q[n];");
            }
            c.n = detail::parse_u64(detail::trimmed(line.substr(7, line.size() - 9)), line_no);
            if (c.n == 0) detail::malformed(line_no, "qubit count must be positive");
            header = 3;
            continue;
        }
        if (!line.ends_with(";")) detail::malformed(line_no, "missing semicolon");
        line = detail::trimmed(line.substr(0, line.size() - 1));
        const std::size_t sp = line.find(' ');
        if (sp == std::string_view::npos) detail::malformed(line_no, "expected gate operands");
        const GateKind kind = detail::kind_from_name(line.substr(0, sp), line_no);
        std::string_view args = detail::trimmed(line.substr(sp + 1));
        auto take_operand = [&](std::string_view op) -> std::uint64_t {
            op = detail::trimmed(op);
            if (!op.starts_with("q[") || !op.ends_with("]")) {
                detail::malformed(line_no, "expected operand q[i]");
            }
            const std::uint64_t q =
                detail::parse_u64(detail::trimmed(op.substr(2, op.size() - 3)), line_no);
            detail::check_index(q, c.n, line_no);
            return q;
        };
        Gate g{};
        g.kind = kind;
        if (is_two_qubit(kind)) {
            const std::size_t comma = args.find(',');
            if (comma == std::string_view::npos) detail::malformed(line_no, "cx needs two operands");
            g.a = static_cast<std::uint32_t>(take_operand(args.substr(0, comma)));
            g.b = static_cast<std::uint32_t>(take_operand(args.substr(comma + 1)));
            if (g.a == g.b) detail::malformed(line_no, "cx operands must differ");
        } else {
            g.a = static_cast<std::uint32_t>(take_operand(args));
            g.b = g.a;
        }
        c.gates.push_back(g);
    }
    if (header != 3) throw std::invalid_argument("incomplete qasm header");
    return c;
}

inline Circuit parse_jsonl(std::istream& is) {
    Circuit c;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(is, raw)) {
        ++line_no;
        if (detail::trimmed(raw).empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(raw);
        } catch (const nlohmann::json::parse_error& e) {
            detail::malformed(line_no, std::string("bad json: ") + e.what());
        }
        if (!have_header) {
            if (!j.is_object() || !j.contains("n") || !j.contains("seed")) {
                detail::malformed(line_no, "expected header {\"n\":...,\"seed\":...}");
            }
            c.n = j.at("n").get<std::uint64_t>();
            if (c.n == 0) detail::malformed(line_no, "qubit count must be positive");
            c.seed = j.at("seed").get<std::uint64_t>();
            have_header = true;
            continue;
        }
        if (!j.is_object() || !j.contains("g") || !j.contains("q") || !j.at("q").is_array()) {
            detail::malformed(line_no, "expected gate {\"g\":...,\"q\":[...]}");
        }
        Gate g{};
        g.kind = detail::kind_from_name(j.at("g").get<std::string>(), line_no);
        const auto& q = j.at("q");
        const std::size_t want = is_two_qubit(g.kind) ? 2 : 1;
        if (q.size() != want) detail::malformed(line_no, "wrong operand count");
        g.a = q.at(0).get<std::uint32_t>();
        detail::check_index(g.a, c.n, line_no);
        g.b = g.a;
        if (want == 2) {
            g.b = q.at(1).get<std::uint32_t>();
            detail::check_index(g.b, c.n, line_no);
            if (g.a == g.b) detail::malformed(line_no, "cx operands must differ");
        }
        c.gates.push_back(g);
    }
    if (!have_header) throw std::invalid_argument("missing jsonl header");
    return c;
}

inline Circuit parse_text(std::istream& is) {
    Circuit c;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string_view line = detail::trimmed(raw);
        if (line.empty()) continue;
        if (line.starts_with("#")) {
            std::string_view body = detail::trimmed(line.substr(1));
            if (!have_header) {
                if (!body.starts_with("n=")) detail::malformed(line_no, "expected # n=... seed=...");
                const std::size_t sp = body.find(' ');
                if (sp == std::string_view::npos) detail::malformed(line_no, "missing seed");
                c.n = detail::parse_u64(body.substr(2, sp - 2), line_no);
                if (c.n == 0) detail::malformed(line_no, "qubit count must be positive");
                std::string_view rest = detail::trimmed(body.substr(sp + 1));
                if (!rest.starts_with("seed=")) detail::malformed(line_no, "missing seed");
                c.seed = detail::parse_u64(rest.substr(5), line_no);
                have_header = true;
            } else if (const auto k = detail::segment_mark(line, "#", line_no)) {
                if (k != c.segments.size() + 1) {
                    detail::malformed(line_no, "segment numbers must be consecutive");
                }
                c.segments.push_back(c.gates.size());
            }
            continue;
        }
        if (!have_header) detail::malformed(line_no, "gate before header");
        const std::size_t open = line.find('(');
        if (open == std::string_view::npos || !line.ends_with(")")) {
            detail::malformed(line_no, "expected NAME(q) or NAME(q,q)");
        }
        std::string lower;
        for (char ch : line.substr(0, open)) {
            lower.push_back(static_cast<char>(std::tolower(ch)));
        }
        Gate g{};
        g.kind = detail::kind_from_name(lower, line_no);
        std::string_view args = line.substr(open + 1, line.size() - open - 2);
        auto take_index = [&](std::string_view s) -> std::uint32_t {
            const std::uint64_t q = detail::parse_u64(detail::trimmed(s), line_no);
            if (q == 0) detail::malformed(line_no, "qubit numbers start at 1");
            detail::check_index(q - 1, c.n, line_no);
            return static_cast<std::uint32_t>(q - 1);
        };
        const std::size_t comma = args.find(',');
        if (is_two_qubit(g.kind)) {
            if (comma == std::string_view::npos) detail::malformed(line_no, "cx needs two operands");
            g.a = take_index(args.substr(0, comma));
            g.b = take_index(args.substr(comma + 1));
            if (g.a == g.b) detail::malformed(line_no, "cx operands must differ");
        } else {
            if (comma != std::string_view::npos) detail::malformed(line_no, "too many operands");
            g.a = take_index(args);
            g.b = g.a;
        }
        c.gates.push_back(g);
    }
    if (!have_header) throw std::invalid_argument("missing text header");
    return c;
}

inline Circuit parse(std::istream& is, Format f) {
    switch (f) {
        case Format::QASM: return parse_qasm(is);
        case Format::JSONL: return parse_jsonl(is);
        case Format::TEXT: return parse_text(is);
    }
    throw std::invalid_argument("unknown format");
}

inline Circuit parse(const std::string& text, Format f) {
    std::istringstream is(text);
    return parse(is, f);
}

}  // namespace cliffrand
