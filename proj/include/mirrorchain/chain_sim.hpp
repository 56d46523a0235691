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
 * Dense state-vector simulation of the global-pulse mirror protocol
 * F^{+-2} (F^-1 S)^{N+1} on an N-qudit chain.
 */
#pragma once

#include "qudit.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace mirrorchain::chain {

/// Default cap on d^N; larger chains need an explicit override.
inline constexpr std::size_t kDefaultMaxDim = 4096;

inline std::size_t chain_dim(int d, int n_sites, bool allow_large = false) {
    require(d >= 2, "chain: qudit dimension must be >= 2");
    require(n_sites >= 1, "chain: need at least one site");
    const std::size_t dim = ipow(static_cast<std::size_t>(d), static_cast<std::size_t>(n_sites));
    if (!allow_large && dim > kDefaultMaxDim) {
        throw InvalidArgument("chain: d^N = " + std::to_string(dim) +
                              " exceeds the default cap of 4096 (pass allow_large to override)");
    }
    return dim;
}

/// Normalized pure state of an N-site chain of d-level systems.
class DenseState {
  public:
    DenseState(int d, int n_sites, CVector amplitudes, bool allow_large = false)
        : d_(d), n_(n_sites), amps_(std::move(amplitudes)) {
        const auto dim = chain_dim(d, n_sites, allow_large);
        require(static_cast<std::size_t>(amps_.size()) == dim, "DenseState: amplitude vector has wrong length");
        const double norm = amps_.norm();
        require(norm > 0.0, "DenseState: zero vector");
        if (std::abs(norm - 1.0) > 1e-12) {
            amps_ /= norm;
        }
    }

    static DenseState basis(int d, int n_sites, const std::vector<int> &digits) {
        require(static_cast<int>(digits.size()) == n_sites, "DenseState::basis: one digit per site");
        CVector v = CVector::Zero(static_cast<Eigen::Index>(chain_dim(d, n_sites)));
        v(static_cast<Eigen::Index>(qudit::digits_to_index(digits, d))) = 1.0;
        return {d, n_sites, std::move(v)};
    }

    /// Tensor product of single-site states, site 1 first.
    static DenseState product(int d, const std::vector<CVector> &sites) {
        require(!sites.empty(), "DenseState::product: need at least one site");
        CMatrix acc = CMatrix::Ones(1, 1);
        for (const auto &s : sites) {
            require(s.size() == d, "DenseState::product: site vector has wrong dimension");
            acc = qudit::kron(acc, CMatrix(s));
        }
        return {d, static_cast<int>(sites.size()), CVector(acc.col(0))};
    }

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] int n_sites() const { return n_; }
    [[nodiscard]] const CVector &amplitudes() const { return amps_; }
    [[nodiscard]] CVector &amplitudes() { return amps_; }

  private:
    int d_;
    int n_;
    CVector amps_;
};

/// Apply a single-site d x d operator to `site` of every column of m.
inline void apply_site_op(CMatrix &m, int d, int n_sites, int site, const CMatrix &op) {
    require(site >= 1 && site <= n_sites, "apply_site_op: site out of range");
    const auto right = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), static_cast<std::size_t>(n_sites - site)));
    const auto left = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), static_cast<std::size_t>(site - 1)));
    const CMatrix op_t = op.transpose();
    CMatrix tmp(right, d);
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        Complex *base = m.col(col).data();
        for (Eigen::Index o = 0; o < left; ++o) {
            // rows (o, k, inner) of this column viewed as a right x d column-major block
            Eigen::Map<CMatrix> block(base + o * d * right, right, d);
            tmp.noalias() = block * op_t;
            block = tmp;
        }
    }
}

/// zeta^(sum_j n_j n_{j+1}) for every basis index: the diagonal of the CPHASE ladder.
inline CVector cphase_ladder_diagonal(int d, int n_sites) {
    const qudit::QuditDim dim(d);
    const auto total = static_cast<Eigen::Index>(chain_dim(d, n_sites, true));
    CVector diag(total);
    for (Eigen::Index i = 0; i < total; ++i) {
        const auto digits = qudit::index_to_digits(static_cast<std::size_t>(i), d, n_sites);
        std::int64_t e = 0;
        for (int j = 0; j + 1 < n_sites; ++j) {
            e += static_cast<std::int64_t>(digits[static_cast<std::size_t>(j)]) * digits[static_cast<std::size_t>(j) + 1];
        }
        diag(i) = dim.zeta_pow(e);
    }
    return diag;
}

/// Index of the site-reversed basis state: |n_1..n_N> -> |n_N..n_1>.
inline std::size_t reversed_index(std::size_t index, int d, int n_sites) {
    auto digits = qudit::index_to_digits(index, d, n_sites);
    std::reverse(digits.begin(), digits.end());
    return qudit::digits_to_index(digits, d);
}

/// Site-reversal permutation R as a dense matrix.
inline CMatrix reversal_matrix(int d, int n_sites) {
    const auto total = static_cast<Eigen::Index>(chain_dim(d, n_sites, true));
    CMatrix r = CMatrix::Zero(total, total);
    for (Eigen::Index i = 0; i < total; ++i) {
        r(static_cast<Eigen::Index>(reversed_index(static_cast<std::size_t>(i), d, n_sites)), i) = 1.0;
    }
    return r;
}

inline DenseState reversed(const DenseState &s) {
    CVector out(s.amplitudes().size());
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        out(static_cast<Eigen::Index>(reversed_index(static_cast<std::size_t>(i), s.d(), s.n_sites()))) = s.amplitudes()(i);
    }
    return {s.d(), s.n_sites(), std::move(out), true};
}

// Gate sequence helpers working on a matrix of column states.
namespace detail {
inline void global_fourier(CMatrix &m, int d, int n_sites, int power) {
    if (mod_floor(power, 4) == 0) {
        return;
    }
    const CMatrix f = qudit::fourier_gate(qudit::QuditDim(d), power);
    for (int site = 1; site <= n_sites; ++site) {
        apply_site_op(m, d, n_sites, site, f);
    }
}

inline void global_cphase(CMatrix &m, const CVector &diag) { m = diag.asDiagonal() * m; }

/// F^{final_power} (F^-1 S)^{rounds} F^{lead_power} applied to every column.
inline void run_rounds(CMatrix &m, int d, int n_sites, int rounds, int final_power, int lead_power = 0) {
    global_fourier(m, d, n_sites, lead_power);
    const CVector diag = cphase_ladder_diagonal(d, n_sites);
    for (int k = 0; k < rounds; ++k) {
        global_cphase(m, diag);
        global_fourier(m, d, n_sites, -1);
    }
    global_fourier(m, d, n_sites, final_power);
}
} // namespace detail

/// F^power on every site.
inline DenseState apply_global_fourier(const DenseState &s, int power) {
    CMatrix m = s.amplitudes();
    detail::global_fourier(m, s.d(), s.n_sites(), power);
    return {s.d(), s.n_sites(), CVector(m.col(0)), true};
}

/// prod_j S_(j,j+1); the identity for a single site.
inline DenseState apply_global_cphase(const DenseState &s) {
    CVector v = cphase_ladder_diagonal(s.d(), s.n_sites()).cwiseProduct(s.amplitudes());
    return {s.d(), s.n_sites(), std::move(v), true};
}

/// F^{sign} (F^-1 S)^{N+1} |s>, sign = +2 or -2.
inline DenseState run_mirror_protocol(const DenseState &s, int sign) {
    require(sign == 2 || sign == -2, "run_mirror_protocol: sign must be +2 or -2");
    CMatrix m = s.amplitudes();
    detail::run_rounds(m, s.d(), s.n_sites(), s.n_sites() + 1, sign);
    return {s.d(), s.n_sites(), CVector(m.col(0)), true};
}

/**
 * The protocol with its final segment omitted and the leading Fourier layer
 * kept: (F^-1 S)^N F. It carries the first site of the relay_input_state family
 * to site N but is not the reversal operator.
 */
inline DenseState run_truncated_protocol(const DenseState &s) {
    CMatrix m = s.amplitudes();
    detail::run_rounds(m, s.d(), s.n_sites(), s.n_sites(), 0, 1);
    return {s.d(), s.n_sites(), CVector(m.col(0)), true};
}

/// Dense matrix of the full protocol F^{sign} (F^-1 S)^{N+1}.
inline CMatrix mirror_circuit_matrix(int d, int n_sites, int sign, bool allow_large = false) {
    require(sign == 2 || sign == -2, "mirror_circuit_matrix: sign must be +2 or -2");
    const auto total = static_cast<Eigen::Index>(chain_dim(d, n_sites, allow_large));
    CMatrix m = CMatrix::Identity(total, total);
    detail::run_rounds(m, d, n_sites, n_sites + 1, sign);
    return m;
}

/// Dense matrix of the truncated protocol (F^-1 S)^N F.
inline CMatrix truncated_circuit_matrix(int d, int n_sites) {
    const auto total = static_cast<Eigen::Index>(chain_dim(d, n_sites));
    CMatrix m = CMatrix::Identity(total, total);
    detail::run_rounds(m, d, n_sites, n_sites, 0, 1);
    return m;
}

/// One round U = F^-1 S as a dense matrix.
inline CMatrix round_matrix(int d, int n_sites) {
    const auto total = static_cast<Eigen::Index>(chain_dim(d, n_sites));
    CMatrix m = CMatrix::Identity(total, total);
    detail::run_rounds(m, d, n_sites, 1, 0);
    return m;
}

struct MirrorReport {
    double fidelity = 0.0;
    Complex phase{1.0, 0.0};
    double max_deviation = 0.0;
};

/// |<R in|out>|, the phase of that overlap, and max_i |out_i - phase (R in)_i|.
inline MirrorReport mirror_fidelity(const DenseState &input, const DenseState &output) {
    if (input.d() != output.d() || input.n_sites() != output.n_sites()) {
        throw InvalidArgument("mirror_fidelity: dimension mismatch");
    }
    const CVector expected = reversed(input).amplitudes();
    const Complex overlap = expected.dot(output.amplitudes());
    MirrorReport r;
    r.fidelity = std::abs(overlap);
    r.phase = r.fidelity > 0.0 ? overlap / r.fidelity : Complex{1.0, 0.0};
    r.max_deviation = (output.amplitudes() - r.phase * expected).cwiseAbs().maxCoeff();
    return r;
}

/// Global phase and deviation of an operator from e^{i phi} R.
struct OperatorMirrorCheck {
    Complex phase{1.0, 0.0};
    double max_deviation = 0.0;
};

/**
 * The phase is taken from the largest-modulus entry of U R^dag; the check then
 * compares U with phase * R entrywise.
 */
inline OperatorMirrorCheck operator_mirror_check(const CMatrix &u, int d, int n_sites) {
    const auto total = u.rows();
    require(u.cols() == total && static_cast<std::size_t>(total) == chain_dim(d, n_sites, true),
            "operator_mirror_check: dimension mismatch");
    // (U R^dag)_{ij} = U_{i, rev(j)}
    Complex best{0.0, 0.0};
    for (Eigen::Index j = 0; j < total; ++j) {
        const auto rj = static_cast<Eigen::Index>(reversed_index(static_cast<std::size_t>(j), d, n_sites));
        Eigen::Index i = 0;
        u.col(rj).cwiseAbs().maxCoeff(&i);
        if (std::abs(u(i, rj)) > std::abs(best)) {
            best = u(i, rj);
        }
    }
    OperatorMirrorCheck out;
    out.phase = std::abs(best) > 0.0 ? best / std::abs(best) : Complex{1.0, 0.0};
    double dev = 0.0;
    for (Eigen::Index j = 0; j < total; ++j) {
        const auto rj = static_cast<Eigen::Index>(reversed_index(static_cast<std::size_t>(j), d, n_sites));
        for (Eigen::Index i = 0; i < total; ++i) {
            const Complex expected = (i == rj) ? out.phase : Complex{0.0, 0.0};
            dev = std::max(dev, std::abs(u(i, j) - expected));
        }
    }
    out.max_deviation = dev;
    return out;
}

/// |psi> (x) |0> (x) |+> (x) |0> (x) ... with |+> = F|0> on odd sites >= 3.
inline DenseState relay_input_state(const CVector &psi, int n_sites) {
    const int d = static_cast<int>(psi.size());
    const qudit::QuditDim dim(d);
    const CVector zero = CVector::Unit(d, 0);
    const CVector plus = qudit::fourier_gate(dim, 1).col(0);
    std::vector<CVector> sites{psi.normalized()};
    for (int a = 2; a <= n_sites; ++a) {
        sites.push_back(a % 2 == 0 ? zero : plus);
    }
    return DenseState::product(d, sites);
}

/// Reduced density matrix of one site.
inline CMatrix reduced_site_density(const DenseState &s, int site) {
    const int d = s.d();
    const auto right = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), static_cast<std::size_t>(s.n_sites() - site)));
    const auto left = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), static_cast<std::size_t>(site - 1)));
    CMatrix rho = CMatrix::Zero(d, d);
    for (Eigen::Index o = 0; o < left; ++o) {
        Eigen::Map<const CMatrix> block(s.amplitudes().data() + o * d * right, right, d);
        rho += block.transpose() * block.conjugate();
    }
    return rho;
}

template <class Rng> CVector random_vector(Eigen::Index n, Rng &rng) {
    std::normal_distribution<double> g;
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = Complex{g(rng), g(rng)};
    }
    return v.normalized();
}

/// Haar-like random (generically entangled) state.
template <class Rng> DenseState random_state(int d, int n_sites, Rng &rng) {
    return {d, n_sites, random_vector(static_cast<Eigen::Index>(chain_dim(d, n_sites)), rng)};
}

template <class Rng> DenseState random_product_state(int d, int n_sites, Rng &rng) {
    std::vector<CVector> sites;
    for (int a = 0; a < n_sites; ++a) {
        sites.push_back(random_vector(d, rng));
    }
    return DenseState::product(d, sites);
}

} // namespace mirrorchain::chain
