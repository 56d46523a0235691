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

#include <mirrorchain/gaussian.hpp>

#include <gtest/gtest.h>

using namespace mirrorchain;
using namespace mirrorchain::cv;

namespace {

int xi(int mode) { return 2 * (mode - 1); }
int pi_(int mode) { return 2 * (mode - 1) + 1; }

RMatrix omega_oracle(int n) {
    RMatrix w = RMatrix::Zero(2 * n, 2 * n);
    for (int m = 1; m <= n; ++m) {
        w(xi(m), pi_(m)) = 1.0;
        w(pi_(m), xi(m)) = -1.0;
    }
    return w;
}

// Heisenberg map exp(Omega M) of the unitary exp(-i r.M.r / 2).
RMatrix heisenberg(const RMatrix &m) {
    const RMatrix g = omega_oracle(static_cast<int>(m.rows() / 2)) * m;
    return RMatrix(g.exp());
}

RMatrix sum_oracle(int c, int t, int n) {
    RMatrix m = RMatrix::Zero(2 * n, 2 * n);
    m(xi(c), pi_(t)) = m(pi_(t), xi(c)) = 1.0; // H = x_c p_t
    return heisenberg(m);
}

RMatrix cphase_oracle(int c, int t, int n) {
    RMatrix m = RMatrix::Zero(2 * n, 2 * n);
    m(xi(c), xi(t)) = m(xi(t), xi(c)) = -1.0; // H = -x_c x_t
    return heisenberg(m);
}

// Quarter turn of one oscillator, H = -(pi/2)(x^2 + p^2)/2.
RMatrix fourier_oracle(int mode, int n) {
    RMatrix m = RMatrix::Zero(2 * n, 2 * n);
    m(xi(mode), xi(mode)) = m(pi_(mode), pi_(mode)) = -kPi / 2.0;
    return heisenberg(m);
}

RMatrix reversal_oracle(int n) {
    RMatrix p = RMatrix::Zero(2 * n, 2 * n);
    for (int m = 1; m <= n; ++m) {
        p(xi(n + 1 - m), xi(m)) = 1.0;
        p(pi_(n + 1 - m), pi_(m)) = 1.0;
    }
    return p;
}

double dev(const RMatrix &a, const RMatrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace

TEST(Symplectic, GatesMatchExponentiatedGenerators) {
    const int n = 3;
    for (int c = 1; c <= n; ++c) {
        EXPECT_LT(dev(fourier(c, n).s, fourier_oracle(c, n)), 1e-12);
        EXPECT_LT(dev(fourier(c, n, -1).s, fourier_oracle(c, n).inverse()), 1e-12);
        for (int t = 1; t <= n; ++t) {
            if (t == c) {
                continue;
            }
            EXPECT_LT(dev(sum(c, t, n).s, sum_oracle(c, t, n)), 1e-12);
            EXPECT_LT(dev(cphase(c, t, n).s, cphase_oracle(c, t, n)), 1e-12);
        }
    }
}

TEST(Symplectic, SumActionOnMeans) {
    GaussianState s = GaussianState::vacuum(2);
    s.mean << 0.3, -0.7, 1.1, 0.4;
    const auto out = apply(sum(1, 2, 2), s);
    RVector want(4);
    want << 0.3, -0.7 - 0.4, 1.1 + 0.3, 0.4;
    EXPECT_LT((out.mean - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Symplectic, EveryGateAndProductPreservesOmega) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> pick(1, 5);
    auto m = SymplecticMap::identity(5);
    for (int k = 0; k < 60; ++k) {
        const int a = pick(rng);
        int b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        SymplecticMap g = k % 3 == 0 ? fourier(a, 5, k % 4) : (k % 3 == 1 ? cphase(a, b, 5) : sum(a, b, 5));
        EXPECT_LT(symplectic_defect(g.s), 1e-12);
        m = compose(g, m);
    }
    EXPECT_LT(symplectic_defect(m.s), 1e-10);
    EXPECT_LT(dev(inverse_transpose(m.s), RMatrix(m.s.inverse().transpose())), 1e-9);
}

// The CV counterpart of SUM = F^-1 CPHASE F.
TEST(Symplectic, CphaseIsFourierConjugatedSum) {
    const auto lhs = compose(fourier(2, 2), compose(sum(1, 2, 2), fourier(2, 2, -1)));
    EXPECT_LT(dev(lhs.s, cphase(1, 2, 2).s), 1e-12);
    const auto back = compose(fourier(2, 2, -1), compose(cphase(1, 2, 2), fourier(2, 2)));
    EXPECT_LT(dev(back.s, sum(1, 2, 2).s), 1e-12);
}

class CvMirror : public ::testing::TestWithParam<int> {};

TEST_P(CvMirror, ComposedMapIsModeReversal) {
    const int n = GetParam();
    EXPECT_LT(dev(mirror_map(n).s, reversal_oracle(n)), 1e-9);
    EXPECT_LT(dev(mode_reversal(n), reversal_oracle(n)), 1e-15);
    EXPECT_LT(mirror_map(n).displacement.cwiseAbs().maxCoeff(), 1e-15);
}

// Same circuit assembled from the exponentiated generators only.
TEST_P(CvMirror, OracleCircuitIsModeReversal) {
    const int n = GetParam();
    RMatrix s_bar = RMatrix::Identity(2 * n, 2 * n);
    for (int j = 1; j < n; ++j) {
        s_bar = s_bar * cphase_oracle(j, j + 1, n);
    }
    RMatrix f_inv = RMatrix::Identity(2 * n, 2 * n);
    RMatrix f_sq = RMatrix::Identity(2 * n, 2 * n);
    for (int j = 1; j <= n; ++j) {
        const RMatrix f = fourier_oracle(j, n);
        f_inv = f_inv * f.inverse();
        f_sq = f_sq * f * f;
    }
    RMatrix total = RMatrix::Identity(2 * n, 2 * n);
    for (int k = 0; k <= n; ++k) {
        total = f_inv * s_bar * total;
    }
    total = f_sq * total;
    EXPECT_LT(dev(total, reversal_oracle(n)), 1e-9);
}

TEST_P(CvMirror, HeisenbergTrackingAgreesWithSymplecticMaps) {
    const int n = GetParam();
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> site(1, n);
    for (int trial = 0; trial < 25; ++trial) {
        const auto r = cv_heisenberg_check(u(rng), u(rng), site(rng), n);
        EXPECT_TRUE(r.ok()) << r.checks.front().detail << " / " << r.checks.back().detail;
    }
}

TEST_P(CvMirror, RandomStatesStayPhysicalAndMirror) {
    const int n = GetParam();
    std::mt19937_64 rng(50 + static_cast<std::uint64_t>(n));
    std::normal_distribution<double> g;
    auto s = GaussianState::vacuum(n);
    for (int i = 0; i < 2 * n; ++i) {
        s.mean(i) = g(rng);
    }
    // A random symplectic congruence of the vacuum is a valid pure state.
    auto m = SymplecticMap::identity(n);
    for (int k = 0; k < 4 * n; ++k) {
        const int a = 1 + k % n;
        m = compose(n > 1 ? cphase(a, 1 + (a % n), n) : fourier(1, 1), compose(fourier(a, n), m));
    }
    s.cov = m.s * m.s.transpose();
    const auto out = run_cv_mirror(s);
    EXPECT_LT(mirror_deviation(s, out), 1e-8);
    EXPECT_GT(out.uncertainty_margin(), -1e-8);
}

INSTANTIATE_TEST_SUITE_P(Modes, CvMirror, ::testing::Range(1, 9));

TEST(CvMirror, CoherentStateMovesToLastMode) {
    const auto in = GaussianState::coherent(4, 1, {0.6, -0.2});
    const auto out = run_cv_mirror(in);
    const auto want = GaussianState::coherent(4, 4, {0.6, -0.2});
    EXPECT_LT((out.mean - want.mean).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(dev(out.cov, want.cov), 1e-12);
}

TEST(CvMirror, TwoModeSqueezingIsCarriedToMirroredPair) {
    const auto in = GaussianState::two_mode_squeezed(3, 1, 2, 0.5);
    const auto out = run_cv_mirror(in);
    const RMatrix p = reversal_oracle(3);
    EXPECT_LT(dev(out.cov, p * in.cov * p.transpose()), 1e-12);
    EXPECT_LT(dev(out.cov, GaussianState::two_mode_squeezed(3, 3, 2, 0.5).cov), 1e-12);
    EXPECT_NEAR(in.uncertainty_margin(), 0.0, 1e-12);
    EXPECT_NEAR(out.uncertainty_margin(), 0.0, 1e-10);
}

TEST(CvMirror, HeisenbergExamples) {
    EXPECT_TRUE(cv_heisenberg_check(1.0, 0.0, 1, 3).ok());
    EXPECT_TRUE(cv_heisenberg_check(0.3, -0.8, 2, 5).ok());
    EXPECT_THROW(cv_heisenberg_check(0.3, -0.8, 6, 5), InvalidArgument);
}

TEST(GaussianState, Validation) {
    EXPECT_THROW(GaussianState::vacuum(0), InvalidArgument);
    EXPECT_THROW(GaussianState::coherent(2, 3, {1.0, 0.0}), InvalidArgument);
    EXPECT_THROW(GaussianState::two_mode_squeezed(2, 1, 1, 0.1), InvalidArgument);
    RMatrix bad = RMatrix::Identity(2, 2);
    bad(0, 1) = 0.5;
    EXPECT_THROW((GaussianState{1, RVector::Zero(2), bad}), InvalidArgument);
    EXPECT_THROW(apply(mirror_map(2), GaussianState::vacuum(3)), InvalidArgument);
}
