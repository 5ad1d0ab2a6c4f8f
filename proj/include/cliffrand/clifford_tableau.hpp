#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffrand/circuit.hpp"
#include "cliffrand/pauli.hpp"
#include "cliffrand/tableau.hpp"

namespace cliffrand {

/// Full 2n-row tableau: row 2j is the image of X_{j+1}, row 2j+1 the image
/// of Z_{j+1}, each a signed Pauli. Together they determine the Clifford
/// operator completely.
class CliffordTableau {
  public:
    explicit CliffordTableau(std::size_t n) : n_(n) {
        if (n == 0) {
            throw std::invalid_argument("CliffordTableau: qubit count must be positive");
        }
        rows_.reserve(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            PauliRow x(n), z(n);
            x.x.set(j, true);
            z.z.set(j, true);
            rows_.push_back(std::move(x));
            rows_.push_back(std::move(z));
        }
    }

    std::size_t num_qubits() const { return n_; }
    std::span<PauliRow> rows() { return rows_; }
    std::span<const PauliRow> rows() const { return rows_; }

    const PauliRow& image_of_x(std::size_t j) const { return rows_.at(2 * j); }
    const PauliRow& image_of_z(std::size_t j) const { return rows_.at(2 * j + 1); }

    bool is_basis() const { return *this == CliffordTableau(n_); }

    /// Symplectic condition plus non-identity rows: partners anticommute,
    /// every other pair commutes.
    bool valid() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].is_identity()) {
                return false;
            }
            for (std::size_t j = i + 1; j < rows_.size(); ++j) {
                const bool partners = (i ^ 1) == j;
                if (anticommutes(rows_[i], rows_[j]) != partners) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Injective byte encoding, version 1: 0x01, n as 8 little-endian bytes,
    /// then per row its x words, z words (little-endian), and a sign byte.
    std::string canonical_key() const {
        std::string key;
        const std::size_t words = rows_[0].x.word_count();
        key.reserve(1 + 8 + rows_.size() * (16 * words + 1));
        key.push_back('\x01');
        append_le64(key, n_);
        for (const PauliRow& r : rows_) {
            for (std::uint64_t w : r.x.w) {
                append_le64(key, w);
            }
            for (std::uint64_t w : r.z.w) {
                append_le64(key, w);
            }
            key.push_back(r.sign ? '\x01' : '\x00');
        }
        return key;
    }

    bool operator==(const CliffordTableau&) const = default;

  private:
    static void append_le64(std::string& s, std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            s.push_back(static_cast<char>(v >> (8 * i) & 0xFF));
        }
    }

    std::size_t n_;
    std::vector<PauliRow> rows_;
};

/// Replay a circuit's conjugations onto the basis tableau.
inline CliffordTableau simulate(const Circuit& c) {
    CliffordTableau t(c.n);
    apply_circuit(t, c);
    return t;
}

}  // namespace cliffrand
