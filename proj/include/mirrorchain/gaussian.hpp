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
 * Gaussian (symplectic) simulation of the continuous-variable mirror chain.
 *
 * Conventions: hbar = 1, [x, p] = i, quadratures ordered (x1, p1, ..., xN, pN),
 * x = (a + a^dag)/sqrt2. Covariances are V_ij = <{dr_i, dr_j}>, so the vacuum
 * has V = I and physical states satisfy V + i Omega >= 0.
 *
 * A SymplecticMap stores the Heisenberg action U^dag r U = S r + d of a
 * Gaussian unitary U. Gate conventions, fixed by the Pauli-word rules
 * F: X(q) -> Z(q), Z(p) -> X(-p):
 *   F       : x -> -p, p -> x
 *   CPHASE  = exp(i x_c x_t)  : p_c -> p_c + x_t, p_t -> p_t + x_c
 *   SUM     = exp(-i x_c p_t) : x_t -> x_t + x_c, p_c -> p_c - p_t
 */
#pragma once

#include "core.hpp"
#include "pauli_word.hpp"
#include "report.hpp"
#include "tracker.hpp"

#include <Eigen/Eigenvalues>

#include <sstream>
#include <vector>

namespace mirrorchain::cv {

inline Eigen::Index x_index(int mode) { return 2 * (mode - 1); }
inline Eigen::Index p_index(int mode) { return 2 * (mode - 1) + 1; }

/// Standard symplectic form, block-diagonal [[0, 1], [-1, 0]].
inline RMatrix omega(int n_modes) {
    RMatrix w = RMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (int j = 1; j <= n_modes; ++j) {
        w(x_index(j), p_index(j)) = 1.0;
        w(p_index(j), x_index(j)) = -1.0;
    }
    return w;
}

struct SymplecticMap {
    RMatrix s;
    RVector displacement;

    static SymplecticMap identity(int n_modes) {
        return {RMatrix::Identity(2 * n_modes, 2 * n_modes), RVector::Zero(2 * n_modes)};
    }
    [[nodiscard]] int n_modes() const { return static_cast<int>(s.rows() / 2); }
};

/// The map of `second * first` (first acts first on states).
inline SymplecticMap compose(const SymplecticMap &second, const SymplecticMap &first) {
    require(second.s.rows() == first.s.rows(), "compose: mode count mismatch");
    return {second.s * first.s, second.s * first.displacement + second.displacement};
}

/// max |S^T Omega S - Omega|
inline double symplectic_defect(const RMatrix &s) {
    const RMatrix w = omega(static_cast<int>(s.rows() / 2));
    return (s.transpose() * w * s - w).cwiseAbs().maxCoeff();
}

/// S^{-T} = -Omega S Omega, exact for symplectic S.
inline RMatrix inverse_transpose(const RMatrix &s) {
    const RMatrix w = omega(static_cast<int>(s.rows() / 2));
    return -w * s * w;
}

enum class CvGate { Fourier, CPHASE, SUM };

inline SymplecticMap fourier(int mode, int n_modes, int power = 1) {
    require(mode >= 1 && mode <= n_modes, "fourier: mode out of range");
    auto m = SymplecticMap::identity(n_modes);
    Eigen::Matrix2d r;
    r << 0.0, -1.0, 1.0, 0.0;
    Eigen::Matrix2d block = Eigen::Matrix2d::Identity();
    for (int k = 0; k < mod_floor(power, 4); ++k) {
        block = r * block;
    }
    m.s.block<2, 2>(x_index(mode), x_index(mode)) = block;
    return m;
}

inline SymplecticMap cphase(int control, int target, int n_modes) {
    require(control != target && control >= 1 && target >= 1 && control <= n_modes && target <= n_modes,
            "cphase: invalid modes");
    auto m = SymplecticMap::identity(n_modes);
    m.s(p_index(control), x_index(target)) = 1.0;
    m.s(p_index(target), x_index(control)) = 1.0;
    return m;
}

inline SymplecticMap sum(int control, int target, int n_modes) {
    require(control != target && control >= 1 && target >= 1 && control <= n_modes && target <= n_modes,
            "sum: invalid modes");
    auto m = SymplecticMap::identity(n_modes);
    m.s(x_index(target), x_index(control)) = 1.0;
    m.s(p_index(control), p_index(target)) = -1.0;
    return m;
}

/// Heisenberg map of one gate. Fourier takes one mode; CPHASE and SUM take (control, target).
inline SymplecticMap symplectic_for_gate(CvGate gate, const std::vector<int> &modes, int n_modes) {
    switch (gate) {
    case CvGate::Fourier:
        require(modes.size() == 1, "symplectic_for_gate: Fourier acts on one mode");
        return fourier(modes[0], n_modes);
    case CvGate::CPHASE:
        require(modes.size() == 2, "symplectic_for_gate: CPHASE acts on two modes");
        return cphase(modes[0], modes[1], n_modes);
    case CvGate::SUM:
        require(modes.size() == 2, "symplectic_for_gate: SUM acts on two modes");
        return sum(modes[0], modes[1], n_modes);
    }
    throw InvalidArgument("symplectic_for_gate: unknown gate");
}

inline SymplecticMap global_fourier(int n_modes, int power) {
    auto m = SymplecticMap::identity(n_modes);
    for (int j = 1; j <= n_modes; ++j) {
        m = compose(fourier(j, n_modes, power), m);
    }
    return m;
}

inline SymplecticMap global_cphase(int n_modes) {
    auto m = SymplecticMap::identity(n_modes);
    for (int j = 1; j < n_modes; ++j) {
        m = compose(cphase(j, j + 1, n_modes), m);
    }
    return m;
}

/// One round F^-1 S.
inline SymplecticMap round_map(int n_modes) { return compose(global_fourier(n_modes, -1), global_cphase(n_modes)); }

/// F^2 (F^-1 S)^{N+1}.
inline SymplecticMap mirror_map(int n_modes) {
    const auto round = round_map(n_modes);
    auto m = SymplecticMap::identity(n_modes);
    for (int k = 0; k <= n_modes; ++k) {
        m = compose(round, m);
    }
    return compose(global_fourier(n_modes, 2), m);
}

/// Phase-space permutation sending mode j to mode N+1-j.
inline RMatrix mode_reversal(int n_modes) {
    RMatrix p = RMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (int j = 1; j <= n_modes; ++j) {
        const int m = n_modes + 1 - j;
        p(x_index(m), x_index(j)) = 1.0;
        p(p_index(m), p_index(j)) = 1.0;
    }
    return p;
}

struct GaussianState {
    int n_modes = 1;
    RVector mean;
    RMatrix cov;

    GaussianState(int n, RVector m, RMatrix c) : n_modes(n), mean(std::move(m)), cov(std::move(c)) {
        require(n >= 1, "GaussianState: need at least one mode");
        require(mean.size() == 2 * n && cov.rows() == 2 * n && cov.cols() == 2 * n,
                "GaussianState: mean/cov have wrong size");
        require((cov - cov.transpose()).cwiseAbs().maxCoeff() <= 1e-9, "GaussianState: cov must be symmetric");
    }

    static GaussianState vacuum(int n) { return {n, RVector::Zero(2 * n), RMatrix::Identity(2 * n, 2 * n)}; }

    /// Coherent amplitude alpha on `mode`, vacuum elsewhere.
    static GaussianState coherent(int n, int mode, Complex alpha) {
        auto s = vacuum(n);
        require(mode >= 1 && mode <= n, "coherent: mode out of range");
        s.mean(x_index(mode)) = std::sqrt(2.0) * alpha.real();
        s.mean(p_index(mode)) = std::sqrt(2.0) * alpha.imag();
        return s;
    }

    /// Two-mode squeezed vacuum with squeezing r on modes (m1, m2).
    static GaussianState two_mode_squeezed(int n, int m1, int m2, double r) {
        require(m1 != m2 && m1 >= 1 && m2 >= 1 && m1 <= n && m2 <= n, "two_mode_squeezed: invalid modes");
        auto s = vacuum(n);
        const double c = std::cosh(2.0 * r);
        const double sh = std::sinh(2.0 * r);
        for (int m : {m1, m2}) {
            s.cov(x_index(m), x_index(m)) = c;
            s.cov(p_index(m), p_index(m)) = c;
        }
        s.cov(x_index(m1), x_index(m2)) = s.cov(x_index(m2), x_index(m1)) = sh;
        s.cov(p_index(m1), p_index(m2)) = s.cov(p_index(m2), p_index(m1)) = -sh;
        return s;
    }

    /// Smallest eigenvalue of V + i Omega (>= 0 for a physical state).
    [[nodiscard]] double uncertainty_margin() const {
        const CMatrix h = cov.cast<Complex>() + kI * omega(n_modes).cast<Complex>();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
};

inline GaussianState apply(const SymplecticMap &m, const GaussianState &s) {
    require(m.n_modes() == s.n_modes, "apply: mode count mismatch");
    return {s.n_modes, m.s * s.mean + m.displacement, m.s * s.cov * m.s.transpose()};
}

inline GaussianState run_cv_mirror(const GaussianState &s) { return apply(mirror_map(s.n_modes), s); }

/// Largest deviation of a mirror run from the mode-reversed input.
inline double mirror_deviation(const GaussianState &in, const GaussianState &out) {
    const RMatrix p = mode_reversal(in.n_modes);
    const double dm = (out.mean - p * in.mean).cwiseAbs().maxCoeff();
    const double dc = (out.cov - p * in.cov * p.transpose()).cwiseAbs().maxCoeff();
    return std::max(dm, dc);
}

/**
 * Linear form l of a displacement word: e^{i theta} prod_j X(q_j) Z(p_j) equals
 * e^{i theta - i sum q_j p_j / 2} exp(i l.r) with l_x = p, l_p = -q.
 */
inline RVector linear_form(const CvWord &w, int n_modes) {
    RVector l = RVector::Zero(2 * n_modes);
    for (const auto &[site, e] : w.factors()) {
        require(site <= n_modes, "linear_form: site outside the chain");
        l(x_index(site)) = e.z;
        l(p_index(site)) = -e.x;
    }
    return l;
}

/// theta - sum_j q_j p_j / 2: invariant under conjugation by displacement-free Gaussian unitaries.
inline double weyl_phase(const CvWord &w) {
    double theta = w.phase();
    for (const auto &[site, e] : w.factors()) {
        theta -= e.x * e.z / 2.0;
    }
    return theta;
}

/// Image of a word's linear form under conjugation U W U^dag, given U's Heisenberg map.
inline RVector conjugate_linear_form(const SymplecticMap &m, const RVector &l) { return inverse_transpose(m.s) * l; }

namespace detail {
inline bool same_support(const CvWord &w, const RVector &l, double tol, std::string &why) {
    const int n = static_cast<int>(l.size() / 2);
    for (int j = 1; j <= n; ++j) {
        const auto e = w.at(j);
        const double q = -l(p_index(j));
        const double p = l(x_index(j));
        const bool in_word = w.factors().count(j) > 0;
        const bool in_form = std::abs(q) > tol || std::abs(p) > tol;
        if (in_word != in_form) {
            why = "support differs at mode " + std::to_string(j);
            return false;
        }
        if (std::abs(e.x - q) > tol || std::abs(e.z - p) > tol) {
            std::ostringstream os;
            os << "mode " << j << ": tracker (" << e.x << "," << e.z << ") vs symplectic (" << q << "," << p << ")";
            why = os.str();
            return false;
        }
    }
    return true;
}
} // namespace detail

/**
 * Tracks X(q) Z(p) at mode a through every round of the protocol twice: with
 * the CV Pauli tracker and by pushing its phase-space linear form through the
 * composed symplectic maps. Supports must agree, amplitudes to 1e-10, and the
 * Weyl phase must stay at its initial value. The final word must sit at mode
 * N+1-a with (q, p) unchanged.
 */
inline Report cv_heisenberg_check(double q, double p, int a, int n_modes, double tol = 1e-10) {
    require(a >= 1 && a <= n_modes, "cv_heisenberg_check: site out of range");
    Report report;
    const auto spec = cv_chain(n_modes);
    const auto input = CvWord::single(CvField{}, a, q, p);
    const auto traj = mirror_trajectory(input, spec, n_modes + 1);
    const auto round = round_map(n_modes);
    const double phase0 = weyl_phase(input);

    auto m = SymplecticMap::identity(n_modes);
    bool all_rounds = true;
    std::string why;
    for (const auto &step : traj.steps) {
        if (step.k > 0) {
            m = compose(round, m);
        }
        const RVector l = conjugate_linear_form(m, linear_form(input, n_modes));
        if (!detail::same_support(step.word, l, tol, why) || std::abs(weyl_phase(step.word) - phase0) > tol) {
            if (why.empty()) {
                why = "Weyl phase drift at round " + std::to_string(step.k);
            }
            all_rounds = false;
            break;
        }
    }
    std::ostringstream label;
    label << "q=" << q << " p=" << p << " a=" << a << " N=" << n_modes;
    report.add("tracker vs symplectic per round, " + label.str(), all_rounds, why);

    const auto final_word = conjugate_fourier_squared(traj.steps.back().word);
    const RVector lf = conjugate_linear_form(mirror_map(n_modes), linear_form(input, n_modes));
    why.clear();
    const bool final_ok = detail::same_support(final_word, lf, tol, why);
    const auto expected = CvWord::single(CvField{}, n_modes + 1 - a, q, p);
    const bool mirrored = approx_equal(final_word, expected, tol);
    report.add("mirrored displacement, " + label.str(), final_ok && mirrored,
               final_ok ? (mirrored ? "" : "final word is not X(q)Z(p) at the mirrored mode") : why);
    return report;
}

} // namespace mirrorchain::cv
