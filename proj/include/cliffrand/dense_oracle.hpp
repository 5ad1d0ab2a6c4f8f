#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cliffrand/circuit.hpp"
#include "cliffrand/clifford_tableau.hpp"
#include "cliffrand/gate.hpp"
#include "cliffrand/pauli.hpp"

namespace cliffrand {

/// Dense-matrix ground truth for small n: build the circuit unitary from
/// textbook gate matrices, conjugate each basis Pauli, and decode the result
/// back to a signed Pauli word. Independent of every tableau update rule, so
/// it validates them.
namespace dense {

using cd = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 3;
inline constexpr double kTol = 1e-9;

/// Row-major square matrix of dimension 2^n, n <= 3.
struct Mat {
    std::size_t dim = 0;
    std::vector<cd> a;

    explicit Mat(std::size_t d) : dim(d), a(d * d) {}

    cd& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const cd& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static Mat eye(std::size_t d) {
        Mat m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m.at(i, i) = 1.0;
        }
        return m;
    }
};

inline Mat mul(const Mat& p, const Mat& q) {
    Mat r(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
        for (std::size_t k = 0; k < p.dim; ++k) {
            const cd v = p.at(i, k);
            if (v == cd{}) continue;
            for (std::size_t j = 0; j < p.dim; ++j) {
                r.at(i, j) += v * q.at(k, j);
            }
        }
    }
    return r;
}

inline Mat dagger(const Mat& m) {
    Mat r(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            r.at(i, j) = std::conj(m.at(j, i));
        }
    }
    return r;
}

inline Mat kron(const Mat& p, const Mat& q) {
    Mat r(p.dim * q.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
        for (std::size_t j = 0; j < p.dim; ++j) {
            if (p.at(i, j) == cd{}) continue;
            for (std::size_t k = 0; k < q.dim; ++k) {
                for (std::size_t l = 0; l < q.dim; ++l) {
                    r.at(i * q.dim + k, j * q.dim + l) = p.at(i, j) * q.at(k, l);
                }
            }
        }
    }
    return r;
}

inline bool approx_equal(const Mat& p, const Mat& q, double tol = kTol) {
    if (p.dim != q.dim) return false;
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        if (std::abs(p.a[i] - q.a[i]) > tol) return false;
    }
    return true;
}

inline Mat pauli_mat(Pauli p) {
    Mat m(2);
    const cd i{0.0, 1.0};
    switch (p) {
        case Pauli::I:
            m.at(0, 0) = 1;
            m.at(1, 1) = 1;
            break;
        case Pauli::X:
            m.at(0, 1) = 1;
            m.at(1, 0) = 1;
            break;
        case Pauli::Y:
            m.at(0, 1) = -i;
            m.at(1, 0) = i;
            break;
        case Pauli::Z:
            m.at(0, 0) = 1;
            m.at(1, 1) = -1;
            break;
    }
    return m;
}

/// Tensor product with qubit 0 as the leftmost factor.
inline Mat word_mat(const PauliRow& r) {
    Mat m = Mat::eye(1);
    for (std::size_t j = 0; j < r.n; ++j) {
        m = kron(m, pauli_mat(r.component(j)));
    }
    if (r.sign) {
        for (cd& v : m.a) {
            v = -v;
        }
    }
    return m;
}

/// Single-qubit gate u placed on qubit a of an n-qubit register.
inline Mat embed_single(const Mat& u, std::size_t a, std::size_t n) {
    Mat m = Mat::eye(1);
    for (std::size_t j = 0; j < n; ++j) {
        m = kron(m, j == a ? u : Mat::eye(2));
    }
    return m;
}

/// CX as |0><0|_a (x) I + |1><1|_a (x) X_b.
inline Mat embed_cx(std::size_t a, std::size_t b, std::size_t n) {
    Mat p0(2), p1(2);
    p0.at(0, 0) = 1;
    p1.at(1, 1) = 1;
    Mat lhs = Mat::eye(1), rhs = Mat::eye(1);
    for (std::size_t j = 0; j < n; ++j) {
        lhs = kron(lhs, j == a ? p0 : Mat::eye(2));
        rhs = kron(rhs, j == a ? p1 : (j == b ? pauli_mat(Pauli::X) : Mat::eye(2)));
    }
    Mat m(lhs.dim);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        m.a[i] = lhs.a[i] + rhs.a[i];
    }
    return m;
}

inline Mat gate_mat(const Gate& g, std::size_t n) {
    const double s = 1.0 / std::sqrt(2.0);
    const cd i{0.0, 1.0};
    Mat u(2);
    switch (g.kind) {
        case GateKind::H:
            u.at(0, 0) = s;
            u.at(0, 1) = s;
            u.at(1, 0) = s;
            u.at(1, 1) = -s;
            break;
        case GateKind::S:
            u.at(0, 0) = 1;
            u.at(1, 1) = i;
            break;
        case GateKind::SDG:
            u.at(0, 0) = 1;
            u.at(1, 1) = -i;
            break;
        case GateKind::CX:
            return embed_cx(g.a, g.b, n);
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            u = pauli_mat(g.kind == GateKind::X   ? Pauli::X
                          : g.kind == GateKind::Y ? Pauli::Y
                                                  : Pauli::Z);
            break;
    }
    return embed_single(u, g.a, n);
}

/// Product of the circuit's gate matrices, later gates on the left.
inline Mat circuit_unitary(const Circuit& c) {
    Mat u = Mat::eye(std::size_t{1} << c.n);
    for (const Gate& g : c.gates) {
        u = mul(gate_mat(g, c.n), u);
    }
    return u;
}

/// All 2 * 4^n signed Pauli word matrices on n qubits, in decode order.
struct Candidate {
    PauliRow row;
    Mat mat;
};

inline const std::vector<Candidate>& signed_word_matrices(std::size_t n) {
    static const auto cache = [] {
        std::array<std::vector<Candidate>, kMaxQubits + 1> all;
        for (std::size_t q = 1; q <= kMaxQubits; ++q) {
            const std::uint64_t codes = 1ull << (2 * q);
            for (std::uint64_t code = 0; code < codes; ++code) {
                for (int sign = 0; sign < 2; ++sign) {
                    PauliRow r(q);
                    r.x.w[0] = code & ((1ull << q) - 1);
                    r.z.w[0] = code >> q;
                    r.sign = sign != 0;
                    Mat m = word_mat(r);
                    all[q].push_back({std::move(r), std::move(m)});
                }
            }
        }
        return all;
    }();
    return cache.at(n);
}

/// Match m against every signed Pauli word; empty if nothing is close.
inline std::optional<PauliRow> decode_signed_word(const Mat& m, std::size_t n) {
    for (const Candidate& c : signed_word_matrices(n)) {
        if (approx_equal(m, c.mat)) {
            return c.row;
        }
    }
    return std::nullopt;
}

}  // namespace dense

/// True iff the dense conjugation of every basis Pauli through c's unitary
/// decodes to exactly the corresponding row of t.
inline bool dense_matches(const Circuit& c, const CliffordTableau& t) {
    if (c.n == 0 || c.n > dense::kMaxQubits) {
        throw std::invalid_argument("dense_matches: qubit count outside dense range");
    }
    if (t.num_qubits() != c.n) {
        throw std::invalid_argument("dense_matches: size mismatch");
    }
    const dense::Mat u = dense::circuit_unitary(c);
    const dense::Mat udg = dense::dagger(u);
    for (std::size_t j = 0; j < c.n; ++j) {
        for (int which = 0; which < 2; ++which) {
            PauliRow basis(c.n);
            if (which == 0) {
                basis.x.set(j, true);
            } else {
                basis.z.set(j, true);
            }
            const dense::Mat image = dense::mul(dense::mul(u, dense::word_mat(basis)), udg);
            const auto decoded = dense::decode_signed_word(image, c.n);
            if (!decoded) {
                return false;
            }
            const PauliRow& expect = which == 0 ? t.image_of_x(j) : t.image_of_z(j);
            if (*decoded != expect) {
                return false;
            }
        }
    }
    return true;
}

/// Ground-truth check of the tableau simulation for one circuit.
inline bool dense_oracle_check(const Circuit& c) { return dense_matches(c, simulate(c)); }

}  // namespace cliffrand
