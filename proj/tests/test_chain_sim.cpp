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

#include "oracle.hpp"

#include <mirrorchain/chain_sim.hpp>
#include <mirrorchain/tracker.hpp>

#include <gtest/gtest.h>

using namespace mirrorchain;
using namespace mirrorchain::chain;

namespace {

// Site-reversal permutation |n_1 ... n_N> -> |n_N ... n_1>, from digit strings.
CMatrix reversal_oracle(int d, int n) {
    const auto total = static_cast<Eigen::Index>(std::pow(d, n));
    CMatrix r = CMatrix::Zero(total, total);
    for (Eigen::Index i = 0; i < total; ++i) {
        Eigen::Index rev = 0;
        auto rest = i;
        for (int a = 0; a < n; ++a) {
            rev = rev * d + rest % d;
            rest /= d;
        }
        r(rev, i) = 1.0;
    }
    return r;
}

CMatrix global_site_op(const CMatrix &op, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int a = 0; a < n; ++a) {
        out = oracle::kron(out, op);
    }
    return out;
}

// |<R in|out>| after removing the global phase.
double fidelity_vs_oracle(const DenseState &in, const DenseState &out) {
    const CVector want = reversal_oracle(in.d(), in.n_sites()) * in.amplitudes();
    return std::abs(want.dot(out.amplitudes()));
}

} // namespace

TEST(ChainSim, GlobalFourierSquareMatchesTensorPower) {
    std::mt19937_64 rng(1);
    const auto s = random_state(3, 3, rng);
    const CMatrix f2 = global_site_op(oracle::power(oracle::dft(3), 2), 3);
    EXPECT_LT((apply_global_fourier(s, 2).amplitudes() - f2 * s.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
    const CMatrix finv = global_site_op(oracle::dft(3).adjoint(), 3);
    EXPECT_LT((apply_global_fourier(s, -1).amplitudes() - finv * s.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ChainSim, CphaseLadderPhase) {
    // |121>: 1*2 + 2*1 = 4 = 1 mod 3.
    const auto s = DenseState::basis(3, 3, {1, 2, 1});
    const auto out = apply_global_cphase(s);
    const auto idx = static_cast<Eigen::Index>(1 * 9 + 2 * 3 + 1);
    EXPECT_LT(std::abs(out.amplitudes()(idx) - oracle::zeta(3, 1)), 1e-12);
    EXPECT_NEAR(out.amplitudes().norm(), 1.0, 1e-14);
}

TEST(ChainSim, QubitPsiTravelsToTheEnd) {
    std::mt19937_64 rng(2);
    const CVector psi = oracle::random_unit(2, rng);
    const CVector zero = CVector::Unit(2, 0);
    const auto in = DenseState::product(2, {psi, zero, zero});
    const auto out = run_mirror_protocol(in, 2);
    const CVector want = oracle::kron(oracle::kron(zero, zero), psi);
    EXPECT_NEAR(std::abs(want.dot(out.amplitudes())), 1.0, 1e-12);
}

TEST(ChainSim, EntangledQutritChain) {
    std::mt19937_64 rng(3);
    const auto in = random_state(3, 4, rng);
    for (int sign : {2, -2}) {
        const auto out = run_mirror_protocol(in, sign);
        EXPECT_NEAR(fidelity_vs_oracle(in, out), 1.0, 1e-10);
        const auto rep = mirror_fidelity(in, out);
        EXPECT_NEAR(rep.fidelity, 1.0, 1e-10);
        EXPECT_LT(rep.max_deviation, 1e-10);
        EXPECT_NEAR(std::abs(rep.phase), 1.0, 1e-12);
    }
}

struct Grid {
    int d;
    int n;
};

std::vector<Grid> mirror_grid() {
    std::vector<Grid> g;
    for (int d : {2, 3, 5}) {
        for (int n = 2; n <= 6; ++n) {
            if (std::pow(d, n) <= 4096) {
                g.push_back({d, n});
            }
        }
    }
    return g;
}

class MirrorGrid : public ::testing::TestWithParam<Grid> {};

TEST_P(MirrorGrid, RandomStatesAreMirroredAndNormKept) {
    const auto [d, n] = GetParam();
    std::mt19937_64 rng(static_cast<std::uint64_t>(31 * d + n));
    for (int trial = 0; trial < 10; ++trial) {
        const auto in = trial % 2 ? random_state(d, n, rng) : random_product_state(d, n, rng);
        const auto out = run_mirror_protocol(in, trial % 3 ? 2 : -2);
        EXPECT_NEAR(out.amplitudes().norm(), 1.0, 1e-12);
        EXPECT_NEAR(fidelity_vs_oracle(in, out), 1.0, 1e-10);
        EXPECT_LE(mirror_fidelity(in, out).fidelity, 1.0 + 1e-12);
    }
}

TEST_P(MirrorGrid, OperatorIsPhaseTimesReversal) {
    const auto [d, n] = GetParam();
    const CMatrix u = mirror_circuit_matrix(d, n, 2);
    const auto chk = operator_mirror_check(u, d, n);
    EXPECT_LT(chk.max_deviation, 1e-10);
    if (u.rows() <= 1024) {
        const CMatrix r = reversal_oracle(d, n);
        const Complex phase = (u * r.adjoint()).trace() / static_cast<double>(u.rows());
        EXPECT_NEAR(std::abs(phase), 1.0, 1e-10);
        EXPECT_LT(oracle::max_dev(u, phase * r), 1e-10);
        EXPECT_LT(std::abs(chk.phase - phase), 1e-10);
    }
}

INSTANTIATE_TEST_SUITE_P(Chains, MirrorGrid, ::testing::ValuesIn(mirror_grid()));

// A mixed input, given by its purification on an extra register: every
// column of the ensemble matrix is mirrored with the same phase.
TEST(ChainSim, MixedInputsAreMirrored) {
    std::mt19937_64 rng(4);
    const int d = 3;
    const int n = 4;
    const auto total = static_cast<Eigen::Index>(std::pow(d, n));
    CMatrix ensemble(total, 3);
    for (int k = 0; k < 3; ++k) {
        ensemble.col(k) = oracle::random_unit(total, rng) * std::sqrt((k + 1) / 6.0);
    }
    const CMatrix rho = ensemble * ensemble.adjoint();
    const CMatrix u = mirror_circuit_matrix(d, n, -2);
    const CMatrix r = reversal_oracle(d, n);
    EXPECT_LT(oracle::max_dev(u * rho * u.adjoint(), r * rho * r.adjoint()), 1e-10);
}

TEST(ChainSim, TruncatedCircuitOnlyTransportsTheSpecialFamily) {
    std::mt19937_64 rng(5);
    for (int d : {2, 3}) {
        for (int n : {3, 4, 5}) {
            const CMatrix t = truncated_circuit_matrix(d, n);
            EXPECT_GT(operator_mirror_check(t, d, n).max_deviation, 0.1);
            const CVector psi = oracle::random_unit(d, rng);
            const auto out = run_truncated_protocol(relay_input_state(psi, n));
            const CMatrix rho = reduced_site_density(out, n);
            EXPECT_NEAR(std::abs(psi.dot(rho * psi)), 1.0, 1e-10) << d << " " << n;
            const auto generic = run_truncated_protocol(random_state(d, n, rng));
            EXPECT_LT(mirror_fidelity(random_state(d, n, rng), generic).fidelity, 0.99);
        }
    }
}

TEST(ChainSim, RelayInputStateLayout) {
    std::mt19937_64 rng(6);
    const CVector psi = oracle::random_unit(3, rng);
    const auto s = relay_input_state(psi, 4);
    const CVector zero = CVector::Unit(3, 0);
    const CVector plus = oracle::dft(3).col(0);
    const CVector want = oracle::kron(oracle::kron(oracle::kron(psi, zero), plus), zero);
    EXPECT_LT((s.amplitudes() - want).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ChainSim, ReducedDensityMatchesPartialTrace) {
    std::mt19937_64 rng(7);
    const auto s = random_state(2, 3, rng);
    const CVector &v = s.amplitudes();
    CMatrix want = CMatrix::Zero(2, 2);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const bool others_match = (i & 0b101) == (j & 0b101);
            if (others_match) {
                want((i >> 1) & 1, (j >> 1) & 1) += v(i) * std::conj(v(j));
            }
        }
    }
    EXPECT_LT(oracle::max_dev(reduced_site_density(s, 2), want), 1e-14);
}

TEST(ChainSim, GeneratorsThroughCircuitReproduceTracker) {
    const int d = 3;
    const int n = 3;
    const auto spec = qudit_chain(d, n);
    const CMatrix u = mirror_circuit_matrix(d, n, 2);
    for (int a = 1; a <= n; ++a) {
        for (bool is_x : {true, false}) {
            const auto w = QuditWord::single(spec.field, a, is_x ? 1 : 0, is_x ? 0 : 1);
            EXPECT_LT(oracle::max_dev(u * realize(w, n) * u.adjoint(), realize(mirror_image(w, spec), n)), 1e-12);
        }
    }
}

TEST(ChainSim, DimensionCapAndValidation) {
    EXPECT_THROW(chain_dim(2, 13), InvalidArgument);
    EXPECT_EQ(chain_dim(2, 13, true), 8192U);
    EXPECT_EQ(chain_dim(2, 12), 4096U);
    EXPECT_THROW(DenseState(2, 2, CVector::Zero(4)), InvalidArgument);
    EXPECT_THROW(DenseState(2, 2, CVector::Ones(3)), InvalidArgument);
    EXPECT_THROW(run_mirror_protocol(DenseState::basis(2, 2, {0, 1}), 1), InvalidArgument);
    std::mt19937_64 rng(8);
    EXPECT_THROW(mirror_fidelity(random_state(2, 2, rng), random_state(2, 3, rng)), InvalidArgument);
}
