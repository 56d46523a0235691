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

#include <mirrorchain/qudit.hpp>

#include <gtest/gtest.h>

using namespace mirrorchain;
using namespace mirrorchain::qudit;

TEST(GeneralizedPauli, QubitX) {
    CMatrix want(2, 2);
    want << 0, 1, 1, 0;
    EXPECT_LT(oracle::max_dev(generalized_pauli(QuditDim(2), PauliKind::X, 1), want), 1e-15);
}

TEST(GeneralizedPauli, QutritClock) {
    const CMatrix z = generalized_pauli(QuditDim(3), PauliKind::Z, 1);
    const Complex w = std::exp(Complex{0.0, 2.0 * kPi / 3.0});
    EXPECT_LT(std::abs(z(0, 0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(z(1, 1) - w), 1e-15);
    EXPECT_LT(std::abs(z(2, 2) - w * w), 1e-15);
    EXPECT_LT(std::abs(z(0, 1)), 1e-15);
}

TEST(GeneralizedPauli, PowerReducedModD) {
    EXPECT_LT(oracle::max_dev(generalized_pauli(QuditDim(5), PauliKind::X, 5), CMatrix::Identity(5, 5)), 1e-15);
    EXPECT_LT(oracle::max_dev(generalized_pauli(QuditDim(5), PauliKind::X, -1),
                              generalized_pauli(QuditDim(5), PauliKind::X, 4)),
              1e-15);
    EXPECT_LT(oracle::max_dev(generalized_pauli(QuditDim(4), PauliKind::Z, 7), oracle::power(oracle::clock(4), 3)),
              1e-12);
}

TEST(GeneralizedPauli, RejectsSmallDimension) {
    EXPECT_THROW(QuditDim(1), InvalidArgument);
    EXPECT_THROW(QuditDim(0), InvalidArgument);
}

TEST(Fourier, QubitIsHadamard) {
    CMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    EXPECT_LT(oracle::max_dev(fourier_gate(QuditDim(2), 1), h), 1e-15);
}

TEST(Fourier, MatchesDftAndFourthPowerIsIdentity) {
    for (int d : {2, 3, 4, 5, 7}) {
        const QuditDim dim(d);
        EXPECT_LT(oracle::max_dev(fourier_gate(dim, 1), oracle::dft(d)), 1e-12) << d;
        EXPECT_LT(oracle::max_dev(fourier_gate(dim, 4), CMatrix::Identity(d, d)), 1e-12) << d;
        EXPECT_LT(oracle::max_dev(fourier_gate(dim, -1), oracle::dft(d).adjoint()), 1e-12) << d;
        EXPECT_LT(oracle::max_dev(fourier_gate(dim, 3), oracle::dft(d).adjoint()), 1e-12) << d;
    }
}

TEST(Fourier, SquareNegatesBasisLabel) {
    const CMatrix f2 = oracle::power(oracle::dft(4), 2);
    const CMatrix lib = fourier_gate(QuditDim(4), 2);
    EXPECT_LT(oracle::max_dev(lib, f2), 1e-12);
    for (int a = 0; a < 4; ++a) {
        EXPECT_NEAR(std::abs(lib((4 - a) % 4, a)), 1.0, 1e-15);
    }
}

class CyclicIdentities : public ::testing::TestWithParam<int> {};

TEST_P(CyclicIdentities, PowersCloseUp) {
    const int d = GetParam();
    const QuditDim dim(d);
    const CMatrix id = CMatrix::Identity(d, d);
    EXPECT_LT(oracle::max_dev(oracle::power(generalized_pauli(dim, PauliKind::X, 1), d), id), 1e-12);
    EXPECT_LT(oracle::max_dev(oracle::power(generalized_pauli(dim, PauliKind::Z, 1), d), id), 1e-12);
    EXPECT_LT(oracle::max_dev(oracle::power(fourier_gate(dim, 1), 4), id), 1e-12);
}

// X^j Z^k = zeta^{-jk} Z^k X^j for the shift/clock pair.
TEST_P(CyclicIdentities, ShiftClockCommutation) {
    const int d = GetParam();
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            const CMatrix xj = oracle::power(oracle::shift(d), j);
            const CMatrix zk = oracle::power(oracle::clock(d), k);
            EXPECT_LT(oracle::max_dev(xj * zk, oracle::zeta(d, -j * k) * zk * xj), 1e-12);
        }
    }
}

TEST_P(CyclicIdentities, SumIsFourierConjugatedCphase) {
    const int d = GetParam();
    const QuditDim dim(d);
    const CMatrix f2 = oracle::on_site(oracle::dft(d), 2, 2);
    const CMatrix cphase = two_qudit_gate(dim, TwoQuditKind::CPHASE, 1, 2, 2);
    EXPECT_LT(oracle::max_dev(two_qudit_gate(dim, TwoQuditKind::SUM, 1, 2, 2), f2.adjoint() * cphase * f2), 1e-12);
}

TEST_P(CyclicIdentities, SwapIsSixGateProduct) {
    const int d = GetParam();
    const QuditDim dim(d);
    const CMatrix d12 = two_qudit_gate(dim, TwoQuditKind::SUM, 1, 2, 2);
    const CMatrix d21 = two_qudit_gate(dim, TwoQuditKind::SUM, 2, 1, 2);
    const CMatrix f2sq = oracle::power(oracle::dft(d), 2);
    const CMatrix a = oracle::on_site(f2sq, 1, 2);
    const CMatrix b = oracle::on_site(f2sq, 2, 2);
    EXPECT_LT(oracle::max_dev(two_qudit_gate(dim, TwoQuditKind::SWAP, 1, 2, 2), d12 * a * d21 * a * d12 * b), 1e-12);
}

TEST_P(CyclicIdentities, SwapExchangesProductStates) {
    const int d = GetParam();
    std::mt19937_64 rng(static_cast<std::uint64_t>(d));
    const CMatrix swap = two_qudit_gate(QuditDim(d), TwoQuditKind::SWAP, 1, 2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const CVector psi = oracle::random_unit(d, rng);
        const CVector phi = oracle::random_unit(d, rng);
        const CVector in = oracle::kron(psi, phi);
        const CVector want = oracle::kron(phi, psi);
        EXPECT_LT((swap * in - want).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST_P(CyclicIdentities, SimplifiedSwapOnZeroAncilla) {
    const int d = GetParam();
    std::mt19937_64 rng(100 + static_cast<std::uint64_t>(d));
    const CMatrix full = two_qudit_gate(QuditDim(d), TwoQuditKind::SWAP, 1, 2, 2);
    const CMatrix simple = simplified_swap_on_zero(QuditDim(d));
    const CVector zero = CVector::Unit(d, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const CVector in = oracle::kron(oracle::random_unit(d, rng), zero);
        EXPECT_LT((simple * in - full * in).cwiseAbs().maxCoeff(), 1e-12);
    }
}

INSTANTIATE_TEST_SUITE_P(Dims, CyclicIdentities, ::testing::Values(2, 3, 4, 5, 7));

TEST(TwoQudit, QubitCphaseIsCz) {
    const CMatrix s = two_qudit_gate(QuditDim(2), TwoQuditKind::CPHASE, 1, 2, 2);
    CMatrix cz = CMatrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    EXPECT_LT(oracle::max_dev(s, cz), 1e-15);
}

TEST(TwoQudit, SumAddsControlIntoTarget) {
    const CMatrix sum = two_qudit_gate(QuditDim(3), TwoQuditKind::SUM, 1, 2, 2);
    // |1>|1> is index 4; |1>|2> is index 5.
    EXPECT_NEAR(std::abs(sum(5, 4)), 1.0, 1e-15);
    EXPECT_NEAR(sum.col(4).norm(), 1.0, 1e-15);
}

TEST(TwoQudit, CphaseOnThreeSitesUsesOnlyItsPair) {
    const QuditDim dim(3);
    const CMatrix s13 = two_qudit_gate(dim, TwoQuditKind::CPHASE, 1, 3, 3);
    // |2, 1, 2>: index 2*9 + 3 + 2 = 23, phase zeta^4 = zeta.
    EXPECT_LT(std::abs(s13(23, 23) - oracle::zeta(3, 1)), 1e-12);
}

TEST(TwoQudit, RejectsBadSites) {
    EXPECT_THROW(two_qudit_gate(QuditDim(3), TwoQuditKind::SUM, 1, 1, 2), InvalidArgument);
    EXPECT_THROW(two_qudit_gate(QuditDim(3), TwoQuditKind::SUM, 0, 1, 2), InvalidArgument);
    EXPECT_THROW(two_qudit_gate(QuditDim(3), TwoQuditKind::SWAP, 1, 3, 2), InvalidArgument);
}
