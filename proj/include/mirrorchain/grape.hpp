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
 * Piecewise-constant control of one resonator mode in the rotating-frame
 * time variable tau:
 *
 *   H(tau) = (1 + C1(tau)/50) a^dag a + (epsilon + C2(tau)/50) X^2,
 *   X = (a + a^dag)/sqrt2,
 *
 * with exact slice gradients and a bounded quasi-Newton ascent.
 */
#pragma once

#include "core.hpp"
#include "parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mirrorchain::grape {

inline constexpr double kControlScale = 50.0;

/// a^dag a on n levels.
inline RMatrix number_operator(int n) {
    require(n >= 2, "number_operator: need n >= 2");
    return RVector::LinSpaced(n, 0.0, n - 1.0).asDiagonal();
}

/// X^2 with X = (a + a^dag)/sqrt2, squared inside the truncated space.
inline RMatrix x_squared(int n) {
    require(n >= 2, "x_squared: need n >= 2");
    RMatrix x = RMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        x(k - 1, k) = x(k, k - 1) = std::sqrt(k / 2.0);
    }
    return x * x;
}

/// exp(i angle X^2) on n levels.
inline CMatrix squeeze_target(int n, double angle) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(x_squared(n));
    const CVector phase = (kI * angle * es.eigenvalues().cast<Complex>()).array().exp();
    const CMatrix v = es.eigenvectors().cast<Complex>();
    return v * phase.asDiagonal() * v.transpose();
}

struct ControlProblem {
    int n_fock = 20;
    /// Kerr ratio 2 chi / omega.
    double epsilon = 1e-3;
    /// Total tau; one free oscillator cycle is 2 pi.
    double duration = 100.0 * kPi;
    int n_slices = 500;
    double c_max = 1.0;
    CMatrix target;
    /// Levels included in the fidelity trace; 0 means all n_fock.
    int fidelity_levels = 0;

    [[nodiscard]] double dt() const { return duration / n_slices; }
    [[nodiscard]] int levels() const { return fidelity_levels > 0 ? fidelity_levels : n_fock; }

    void validate() const {
        require(n_fock >= 2, "ControlProblem: n_fock must be >= 2");
        require(n_slices >= 1, "ControlProblem: n_slices must be >= 1");
        require(duration > 0.0, "ControlProblem: duration must be > 0");
        require(c_max >= 0.0, "ControlProblem: c_max must be >= 0");
        require(target.rows() == n_fock && target.cols() == n_fock, "ControlProblem: target must be n_fock x n_fock");
        require(fidelity_levels >= 0 && fidelity_levels <= n_fock, "ControlProblem: fidelity_levels out of range");
    }
};

/// Target exp(i angle X^2) over `cycles` oscillator periods.
inline ControlProblem squeeze_problem(int n_fock, double angle = 0.1, double cycles = 50.0, int n_slices = 500,
                                      double c_max = 1.0, double epsilon = 1e-3) {
    ControlProblem p;
    p.n_fock = n_fock;
    p.epsilon = epsilon;
    p.duration = 2.0 * kPi * cycles;
    p.n_slices = n_slices;
    p.c_max = c_max;
    p.target = squeeze_target(n_fock, angle);
    p.validate();
    return p;
}

struct ControlPulse {
    RVector c1;
    RVector c2;
    double dt = 0.0;

    static ControlPulse zeros(int n_slices, double dt) {
        return {RVector::Zero(n_slices), RVector::Zero(n_slices), dt};
    }
    [[nodiscard]] int n_slices() const { return static_cast<int>(c1.size()); }
    [[nodiscard]] bool within(double c_max, double slack = 1e-12) const {
        return c1.cwiseAbs().maxCoeff() <= c_max + slack && c2.cwiseAbs().maxCoeff() <= c_max + slack;
    }
};

namespace detail {

struct Operators {
    RMatrix n;
    RMatrix x2;
    explicit Operators(int n_fock) : n(number_operator(n_fock)), x2(x_squared(n_fock)) {}
};

/// exp(-i H dt) = V diag(exp(-i lambda dt)) V^T for one slice.
struct Slice {
    RMatrix v;
    RVector lambda;
    CMatrix u;
};

inline Slice make_slice(const Operators &ops, double epsilon, double c1, double c2, double dt) {
    const RMatrix h = (1.0 + c1 / kControlScale) * ops.n + (epsilon + c2 / kControlScale) * ops.x2;
    Eigen::SelfAdjointEigenSolver<RMatrix> es(h);
    Slice s{es.eigenvectors(), es.eigenvalues(), {}};
    const CVector phase = (-kI * dt * s.lambda.cast<Complex>()).array().exp();
    const CMatrix v = s.v.cast<Complex>();
    s.u = v * phase.asDiagonal() * v.transpose();
    return s;
}

inline void check_pulse(const ControlPulse &pulse, const ControlProblem &prob) {
    prob.validate();
    if (pulse.n_slices() != prob.n_slices || pulse.c2.size() != pulse.c1.size()) {
        throw InvalidArgument("pulse length does not match n_slices");
    }
    if (!pulse.within(prob.c_max)) {
        throw InvalidArgument("pulse violates the control bound c_max");
    }
}

inline std::vector<Slice> make_slices(const ControlPulse &pulse, const ControlProblem &prob) {
    const Operators ops(prob.n_fock);
    std::vector<Slice> slices;
    slices.reserve(static_cast<std::size_t>(prob.n_slices));
    for (int k = 0; k < prob.n_slices; ++k) {
        slices.push_back(make_slice(ops, prob.epsilon, pulse.c1(k), pulse.c2(k), prob.dt()));
    }
    return slices;
}

/// Sum of the first `levels` diagonal entries of target^dag U.
inline Complex overlap(const CMatrix &u, const CMatrix &target, int levels) {
    Complex o{0.0, 0.0};
    for (int i = 0; i < levels; ++i) {
        o += target.col(i).dot(u.col(i));
    }
    return o;
}

} // namespace detail

/// U = U_last ... U_first with U_k = exp(-i H(C1[k], C2[k]) dt).
inline CMatrix propagate_controls(const ControlPulse &pulse, const ControlProblem &prob) {
    detail::check_pulse(pulse, prob);
    CMatrix u = CMatrix::Identity(prob.n_fock, prob.n_fock);
    for (const auto &s : detail::make_slices(pulse, prob)) {
        u = s.u * u;
    }
    return u;
}

/// sqrt(|Tr(P U^dag target)|) / sqrt(Tr(P target^dag target)) with P the first `levels` levels (0 = all).
inline double control_fidelity(const CMatrix &u, const CMatrix &target, int levels = 0) {
    if (u.rows() != target.rows() || u.cols() != target.cols() || u.rows() != u.cols()) {
        throw InvalidArgument("control_fidelity: dimension mismatch");
    }
    const int m = levels > 0 ? levels : static_cast<int>(u.rows());
    require(m <= u.rows(), "control_fidelity: levels exceeds dimension");
    double norm = 0.0;
    for (int i = 0; i < m; ++i) {
        norm += target.col(i).squaredNorm();
    }
    return std::sqrt(std::abs(detail::overlap(u, target, m)) / norm);
}

struct FidelityGradient {
    double fidelity = 0.0;
    RVector d_c1;
    RVector d_c2;
};

/**
 * Fidelity and its exact derivative with respect to every C1[k], C2[k].
 * Each slice derivative uses the eigenbasis divided-difference formula for
 * d exp(-i H dt), contracted against forward and backward partial products.
 */
inline FidelityGradient fidelity_gradient(const ControlPulse &pulse, const ControlProblem &prob) {
    detail::check_pulse(pulse, prob);
    const int n = prob.n_fock;
    const int k_max = prob.n_slices;
    const int m = prob.levels();
    const double dt = prob.dt();
    const detail::Operators ops(n);
    const auto slices = detail::make_slices(pulse, prob);

    // forward[k] = U_{k-1} ... U_0
    std::vector<CMatrix> forward(static_cast<std::size_t>(k_max));
    CMatrix acc = CMatrix::Identity(n, n);
    for (int k = 0; k < k_max; ++k) {
        forward[static_cast<std::size_t>(k)] = acc;
        acc = slices[static_cast<std::size_t>(k)].u * acc;
    }
    const Complex o = detail::overlap(acc, prob.target, m);
    const double abs_o = std::abs(o);
    double norm = 0.0;
    for (int i = 0; i < m; ++i) {
        norm += prob.target.col(i).squaredNorm();
    }

    FidelityGradient out;
    out.fidelity = std::sqrt(abs_o / norm);
    out.d_c1 = RVector::Zero(k_max);
    out.d_c2 = RVector::Zero(k_max);
    if (abs_o < 1e-300) {
        return out;
    }
    const double scale = 1.0 / (2.0 * out.fidelity * norm * abs_o);

    // back = P target^dag U_last ... U_{k+1}
    CMatrix back = CMatrix::Zero(n, n);
    back.topRows(m) = prob.target.leftCols(m).adjoint();
    for (int k = k_max - 1; k >= 0; --k) {
        const auto &s = slices[static_cast<std::size_t>(k)];
        const CMatrix vc = s.v.cast<Complex>();
        // do/dc = Tr(M dU) with M = forward * back, taken in the slice eigenbasis.
        const CMatrix mt = vc.transpose() * (forward[static_cast<std::size_t>(k)] * back) * vc;
        CMatrix f(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double half = 0.5 * (s.lambda(i) - s.lambda(j)) * dt;
                const double sinc = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
                f(i, j) = -kI * dt * std::exp(-kI * 0.5 * (s.lambda(i) + s.lambda(j)) * dt) * sinc;
            }
        }
        const CMatrix w = mt.transpose().cwiseProduct(f);
        const RMatrix hn = s.v.transpose() * ops.n * s.v;
        const RMatrix hx = s.v.transpose() * ops.x2 * s.v;
        const Complex do1 = (w.cwiseProduct(hn.cast<Complex>())).sum() / kControlScale;
        const Complex do2 = (w.cwiseProduct(hx.cast<Complex>())).sum() / kControlScale;
        out.d_c1(k) = scale * (std::conj(o) * do1).real();
        out.d_c2(k) = scale * (std::conj(o) * do2).real();
        back = back * s.u;
    }
    return out;
}

struct OptimizeOptions {
    int max_iter = 1000;
    /// Stop once 1 - F <= tol.
    double tol = 1e-4;
    /// L-BFGS memory.
    int history = 12;
    /// Stop when an accepted step improves F by less than this.
    double stall = 1e-13;
};

struct FidelityTrace {
    /// (iteration, fidelity) after every accepted step, starting at iteration 0.
    std::vector<std::pair<int, double>> iterations;
    ControlPulse final_pulse;
    double best_fidelity = 0.0;
    bool converged = false;
    std::string message;
};

namespace detail {
inline RVector pack(const ControlPulse &p) {
    RVector x(2 * p.c1.size());
    x << p.c1, p.c2;
    return x;
}
inline ControlPulse unpack(const RVector &x, double dt) {
    const Eigen::Index k = x.size() / 2;
    return {x.head(k), x.tail(k), dt};
}
inline RVector project(const RVector &x, double c_max) { return x.cwiseMax(-c_max).cwiseMin(c_max); }
} // namespace detail

/**
 * Maximizes F by L-BFGS restricted to the controls not pinned at a bound,
 * with projection onto |C| <= c_max and a backtracking line search. Only
 * steps that strictly raise F are accepted, so the recorded trace is
 * non-decreasing. Non-convergence returns the best pulse with a message.
 */
inline FidelityTrace optimize_pulse(const ControlProblem &prob, const ControlPulse &init,
                                    const OptimizeOptions &opts = {}) {
    detail::check_pulse(init, prob);
    const double dt = prob.dt();
    const double c_max = prob.c_max;
    auto eval = [&](const RVector &x) {
        const auto g = fidelity_gradient(detail::unpack(x, dt), prob);
        RVector grad(x.size());
        grad << g.d_c1, g.d_c2;
        return std::pair<double, RVector>{g.fidelity, grad};
    };

    RVector x = detail::pack(init);
    auto [f, g] = eval(x);
    FidelityTrace trace;
    trace.iterations.emplace_back(0, f);
    std::deque<std::pair<RVector, RVector>> mem; // (s, y) for the ascent direction

    auto free_mask = [&](const RVector &xv, const RVector &gv) {
        RVector mask = RVector::Ones(xv.size());
        for (Eigen::Index i = 0; i < xv.size(); ++i) {
            if ((xv(i) >= c_max && gv(i) > 0.0) || (xv(i) <= -c_max && gv(i) < 0.0)) {
                mask(i) = 0.0;
            }
        }
        return mask;
    };

    int iter = 0;
    while (true) {
        if (1.0 - f <= opts.tol) {
            trace.converged = true;
            trace.message = "reached tolerance";
            break;
        }
        if (iter >= opts.max_iter) {
            trace.message = "max_iter reached";
            break;
        }
        const RVector mask = free_mask(x, g);
        const RVector gf = g.cwiseProduct(mask);
        if (gf.lpNorm<Eigen::Infinity>() < 1e-14) {
            trace.message = "projected gradient vanished";
            break;
        }

        // Two-loop recursion on the ascent problem (maximize f).
        RVector d = gf;
        std::vector<double> alpha(mem.size());
        for (std::size_t i = mem.size(); i-- > 0;) {
            const auto &[s, y] = mem[i];
            alpha[i] = s.dot(d) / y.dot(s);
            d -= alpha[i] * y;
        }
        if (!mem.empty()) {
            const auto &[s, y] = mem.back();
            d *= s.dot(y) / y.squaredNorm();
        } else {
            d *= 0.05 * std::max(c_max, 1e-3) / gf.lpNorm<Eigen::Infinity>();
        }
        for (std::size_t i = 0; i < mem.size(); ++i) {
            const auto &[s, y] = mem[i];
            d += (alpha[i] - y.dot(d) / y.dot(s)) * s;
        }
        d = d.cwiseProduct(mask);
        bool quasi_newton = !mem.empty();
        if (d.dot(gf) <= 0.0) {
            mem.clear();
            d = gf * (0.05 * std::max(c_max, 1e-3) / gf.lpNorm<Eigen::Infinity>());
            quasi_newton = false;
        }

        bool accepted = false;
        for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
            double step = 1.0;
            for (int ls = 0; ls < 40; ++ls, step *= 0.5) {
                const RVector xn = detail::project(x + step * d, c_max);
                const RVector dx = xn - x;
                if (dx.lpNorm<Eigen::Infinity>() == 0.0) {
                    break;
                }
                auto [fn, gn] = eval(xn);
                if (fn > f && fn >= f + 1e-4 * g.dot(dx) - 1e-15) {
                    const RVector s = dx;
                    const RVector yneg = g - gn; // gradient change of -F
                    if (s.dot(yneg) > 1e-18) {
                        mem.emplace_back(s, yneg);
                        if (static_cast<int>(mem.size()) > opts.history) {
                            mem.pop_front();
                        }
                    }
                    const double gain = fn - f;
                    x = xn;
                    f = fn;
                    g = gn;
                    accepted = true;
                    ++iter;
                    trace.iterations.emplace_back(iter, f);
                    if (gain < opts.stall) {
                        trace.message = "stalled";
                    }
                    break;
                }
            }
            if (!accepted && quasi_newton) {
                mem.clear();
                d = gf * (0.05 * std::max(c_max, 1e-3) / gf.lpNorm<Eigen::Infinity>());
                quasi_newton = false;
            } else if (!accepted) {
                break;
            }
        }
        if (!accepted) {
            trace.message = "line search failed";
            break;
        }
        if (trace.message == "stalled") {
            break;
        }
    }
    trace.final_pulse = detail::unpack(x, dt);
    trace.best_fidelity = f;
    return trace;
}

/// Seeded uniform pulse in [-amplitude, amplitude] * c_max.
inline ControlPulse random_pulse(const ControlProblem &prob, std::uint64_t seed, double amplitude = 0.2) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-amplitude * prob.c_max, amplitude * prob.c_max);
    auto p = ControlPulse::zeros(prob.n_slices, prob.dt());
    for (int k = 0; k < prob.n_slices; ++k) {
        p.c1(k) = u(rng);
        p.c2(k) = u(rng);
    }
    return p;
}

struct MultiStart {
    std::vector<FidelityTrace> runs;
    std::vector<std::uint64_t> seeds;
    std::size_t best = 0;
    [[nodiscard]] const FidelityTrace &best_run() const { return runs.at(best); }
};

/// Independent optimizations from seeds base_seed .. base_seed + n_seeds - 1; the best F wins.
inline MultiStart optimize_multistart(const ControlProblem &prob, int n_seeds, std::uint64_t base_seed,
                                      const OptimizeOptions &opts = {}, double init_amplitude = 0.2,
                                      int jobs = job_limit()) {
    require(n_seeds >= 1, "optimize_multistart: need at least one seed");
    MultiStart out;
    out.runs.resize(static_cast<std::size_t>(n_seeds));
    for (int i = 0; i < n_seeds; ++i) {
        out.seeds.push_back(base_seed + static_cast<std::uint64_t>(i));
    }
    parallel_for(
        out.runs.size(),
        [&](std::size_t i) { out.runs[i] = optimize_pulse(prob, random_pulse(prob, out.seeds[i], init_amplitude), opts); },
        jobs);
    for (std::size_t i = 1; i < out.runs.size(); ++i) {
        if (out.runs[i].best_fidelity > out.runs[out.best].best_fidelity) {
            out.best = i;
        }
    }
    return out;
}

/// Dense power U^k.
inline CMatrix matrix_power(const CMatrix &u, int k) {
    require(k >= 0, "matrix_power: negative exponent");
    CMatrix r = CMatrix::Identity(u.rows(), u.cols());
    for (int i = 0; i < k; ++i) {
        r = u * r;
    }
    return r;
}

/// Free rotation angle sum_k (1 + C1[k]/50) dt of the mode not carrying the Kerr term, reduced to [0, 2 pi).
inline double spectator_angle(const ControlPulse &pulse) {
    const double theta = (pulse.c1.array() / kControlScale + 1.0).sum() * pulse.dt;
    const double r = std::fmod(theta, 2.0 * kPi);
    return r < 0.0 ? r + 2.0 * kPi : r;
}

struct Segment {
    /// Mode carrying the squeezing term: 'a' (sum bias) or 'b' (difference bias).
    char active_mode = 'a';
    int repetition = 0;
};

struct CphaseSchedule {
    std::vector<Segment> segments;
    double total_cycles = 0.0;
    /// Spectator rotations exp(-i theta n) left for the neighbouring Fourier gates; empty when all vanish.
    std::vector<std::pair<char, double>> absorbed_rotations;
    /// 10-fold products against exp(+i X^2) on a' and exp(-i X^2) on b'.
    double fidelity_a = 0.0;
    double fidelity_b = 0.0;
    double peak_c1 = 0.0;
    double peak_c2 = 0.0;
    /// Peak resonator detuning as a fraction of omega: max|C1| / 50.
    double cpw_detuning_fraction = 0.0;
    /// Linearized CPB detuning as a fraction of omega0: max|C2| / (50 epsilon), from chi ~ 1/omega0.
    double cpb_detuning_fraction = 0.0;
};

/**
 * Composite CPHASE schedule: `repetitions` copies of the a' segment under
 * sum bias, a bias switch, then `repetitions` copies of the b' segment.
 * The idle mode of each half rotates freely by the spectator angle; those
 * rotations are returned for absorption into the adjacent Fourier gates.
 */
inline CphaseSchedule assemble_cphase(const ControlProblem &prob, const std::optional<ControlPulse> &pulse_a,
                                      const std::optional<ControlPulse> &pulse_b, int repetitions = 10,
                                      double rotation_tol = 1e-9) {
    if (!pulse_a || !pulse_b) {
        throw InvalidArgument("assemble_cphase: needs optimized pulses for both the a' and b' factors");
    }
    require(repetitions >= 1, "assemble_cphase: repetitions must be >= 1");
    CphaseSchedule out;
    for (char mode : {'a', 'b'}) {
        for (int r = 0; r < repetitions; ++r) {
            out.segments.push_back({mode, r});
        }
    }
    out.total_cycles = 2.0 * repetitions * prob.duration / (2.0 * kPi);

    auto wrap = [](double t) {
        const double r = std::fmod(t, 2.0 * kPi);
        return r < 0.0 ? r + 2.0 * kPi : r;
    };
    // While a' is driven, b' idles, and vice versa.
    const double theta_b = wrap(repetitions * spectator_angle(*pulse_a));
    const double theta_a = wrap(repetitions * spectator_angle(*pulse_b));
    for (auto [mode, theta] : {std::pair<char, double>{'b', theta_b}, std::pair<char, double>{'a', theta_a}}) {
        if (std::min(theta, 2.0 * kPi - theta) > rotation_tol) {
            out.absorbed_rotations.emplace_back(mode, theta);
        }
    }

    auto prob_b = prob;
    prob_b.target = prob.target.conjugate();
    const CMatrix ua = propagate_controls(*pulse_a, prob);
    const CMatrix ub = propagate_controls(*pulse_b, prob_b);
    out.fidelity_a = control_fidelity(matrix_power(ua, repetitions), matrix_power(prob.target, repetitions),
                                      prob.fidelity_levels);
    out.fidelity_b = control_fidelity(matrix_power(ub, repetitions), matrix_power(prob_b.target, repetitions),
                                      prob.fidelity_levels);
    out.peak_c1 = std::max(pulse_a->c1.cwiseAbs().maxCoeff(), pulse_b->c1.cwiseAbs().maxCoeff());
    out.peak_c2 = std::max(pulse_a->c2.cwiseAbs().maxCoeff(), pulse_b->c2.cwiseAbs().maxCoeff());
    out.cpw_detuning_fraction = out.peak_c1 / kControlScale;
    out.cpb_detuning_fraction = prob.epsilon > 0.0 ? out.peak_c2 / (kControlScale * prob.epsilon) : 0.0;
    return out;
}

} // namespace mirrorchain::grape
