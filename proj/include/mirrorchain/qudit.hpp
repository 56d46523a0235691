// Copyright 2026 The mirrorchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Generalized Pauli operators, the qudit Fourier gate and the two-qudit
 * CPHASE / SUM / SWAP gates as dense matrices over a chain of qudits.
 *
 * Sites are numbered 1..N. Site 1 is the most significant digit of the
 * computational-basis index, i.e. |n_1 n_2 ... n_N> has index
 * sum_a n_a d^(N-a).
 */
#pragma once

#include "core.hpp"

#include <vector>

namespace mirrorchain::qudit {

/// Local Hilbert-space dimension of one qudit, d >= 2.
class QuditDim {
  public:
    explicit QuditDim(int d) : d_(d) { require(d >= 2, "qudit dimension must be >= 2"); }

    [[nodiscard]] int value() const { return d_; }
    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(d_); }

    /// Principal root zeta_d^k = exp(2 pi i k / d); k is reduced mod d first.
    [[nodiscard]] Complex zeta_pow(std::int64_t k) const {
        const auto r = static_cast<double>(mod_floor(k, d_));
        return std::polar(1.0, 2.0 * kPi * r / d_);
    }

    friend bool operator==(QuditDim, QuditDim) = default;

  private:
    int d_;
};

enum class PauliKind { X, Z };
enum class TwoQuditKind { CPHASE, SUM, SWAP };

/// X^power (cyclic shift |j> -> |j+1 mod d>) or Z^power (diag zeta^j).
inline CMatrix generalized_pauli(QuditDim dim, PauliKind kind, std::int64_t power) {
    const int d = dim.value();
    const std::int64_t p = mod_floor(power, d);
    CMatrix m = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        if (kind == PauliKind::X) {
            m(static_cast<int>(mod_floor(j + p, d)), j) = 1.0;
        } else {
            m(j, j) = dim.zeta_pow(p * j);
        }
    }
    return m;
}

/// F^power with F|a> = d^(-1/2) sum_k zeta^(k a) |k>; power is reduced mod 4.
inline CMatrix fourier_gate(QuditDim dim, std::int64_t power) {
    const int d = dim.value();
    const std::int64_t p = mod_floor(power, 4);
    if (p == 0) {
        return CMatrix::Identity(d, d);
    }
    if (p == 2) {
        // F^2 |a> = |-a>
        CMatrix m = CMatrix::Zero(d, d);
        for (int a = 0; a < d; ++a) {
            m(static_cast<int>(mod_floor(-a, d)), a) = 1.0;
        }
        return m;
    }
    // F^3 = F^-1 = F^dag, whose entries are conjugate of F's.
    const double sgn = (p == 1) ? 1.0 : -1.0;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    CMatrix m(d, d);
    for (int k = 0; k < d; ++k) {
        for (int a = 0; a < d; ++a) {
            m(k, a) = norm * dim.zeta_pow(static_cast<std::int64_t>(sgn) * k * a);
        }
    }
    return m;
}

/// Digits (n_1..n_N) of a basis index, site 1 first.
inline std::vector<int> index_to_digits(std::size_t index, int d, int n_sites) {
    std::vector<int> digits(static_cast<std::size_t>(n_sites));
    for (int a = n_sites - 1; a >= 0; --a) {
        digits[static_cast<std::size_t>(a)] = static_cast<int>(index % static_cast<std::size_t>(d));
        index /= static_cast<std::size_t>(d);
    }
    return digits;
}

inline std::size_t digits_to_index(const std::vector<int> &digits, int d) {
    std::size_t index = 0;
    for (int digit : digits) {
        index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(digit);
    }
    return index;
}

/// Kronecker product a (x) b.
inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Single-site operator placed at `site` of an n_sites chain.
inline CMatrix embed_single(const CMatrix &op, int site, int n_sites) {
    require(op.rows() == op.cols() && op.rows() >= 2, "embed_single: op must be square, dim >= 2");
    require(site >= 1 && site <= n_sites, "embed_single: site out of range");
    const auto d = static_cast<std::size_t>(op.rows());
    const auto left = static_cast<Eigen::Index>(ipow(d, static_cast<std::size_t>(site - 1)));
    const auto right = static_cast<Eigen::Index>(ipow(d, static_cast<std::size_t>(n_sites - site)));
    return kron(kron(CMatrix::Identity(left, left), op), CMatrix::Identity(right, right));
}

/**
 * CPHASE (S_(c,t) = sum_n |n><n|_c (x) Z_t^n), SUM (D_(c,t) = sum_n |n><n|_c
 * (x) X_t^n) or SWAP between sites c and t of an n_sites chain.
 */
inline CMatrix two_qudit_gate(QuditDim dim, TwoQuditKind kind, int control, int target,
                              int n_sites) {
    require(control != target, "two_qudit_gate: control and target must differ");
    require(control >= 1 && control <= n_sites && target >= 1 && target <= n_sites,
            "two_qudit_gate: site out of range");
    const int d = dim.value();
    const auto total = static_cast<Eigen::Index>(ipow(dim.size(), static_cast<std::size_t>(n_sites)));
    const auto c = static_cast<std::size_t>(control - 1);
    const auto t = static_cast<std::size_t>(target - 1);
    CMatrix m = CMatrix::Zero(total, total);
    for (Eigen::Index col = 0; col < total; ++col) {
        auto digits = index_to_digits(static_cast<std::size_t>(col), d, n_sites);
        switch (kind) {
        case TwoQuditKind::CPHASE:
            m(col, col) = dim.zeta_pow(static_cast<std::int64_t>(digits[c]) * digits[t]);
            break;
        case TwoQuditKind::SUM:
            digits[t] = static_cast<int>(mod_floor(digits[t] + digits[c], d));
            m(static_cast<Eigen::Index>(digits_to_index(digits, d)), col) = 1.0;
            break;
        case TwoQuditKind::SWAP:
            std::swap(digits[t], digits[c]);
            m(static_cast<Eigen::Index>(digits_to_index(digits, d)), col) = 1.0;
            break;
        }
    }
    return m;
}

/**
 * The circuit obtained from the full two-qudit SWAP when the second input is
 * |0>: F^-1_(1) S F^-1_(1) F^-1_(2) S F_(2) (rightmost factor acts first).
 * On |psi> (x) |0> it reproduces SWAP exactly.
 */
inline CMatrix simplified_swap_on_zero(QuditDim dim) {
    const CMatrix s = two_qudit_gate(dim, TwoQuditKind::CPHASE, 1, 2, 2);
    const CMatrix f = fourier_gate(dim, 1);
    const CMatrix finv = fourier_gate(dim, -1);
    const CMatrix f1inv = embed_single(finv, 1, 2);
    const CMatrix f2inv = embed_single(finv, 2, 2);
    const CMatrix f2 = embed_single(f, 2, 2);
    return f1inv * s * f1inv * f2inv * s * f2;
}

} // namespace mirrorchain::qudit
