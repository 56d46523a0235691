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
 * Two resonator modes coupled through a Cooper-pair box: the full
 * three-body master equation, the model with the box adiabatically
 * eliminated, the decoupling beam-splitter transform, and the
 * full / effective / Hamiltonian-only comparison.
 *
 * Units: frequencies and rates in rad/ns ("GHz"), time in ns, hbar = 1.
 * Subsystem order is (mode a, mode b, box); the box basis is (|g>, |e>) with
 * sigma_z = diag(-1, +1) and sigma_- = |g><e|.
 */
#pragma once

#include "lindblad.hpp"
#include "parallel.hpp"
#include "report.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mirrorchain::cqed {

using lindblad::LindbladModel;
using lindblad::SparseC;

struct DeviceParams {
    double omega0 = 15.0;
    double omega_a = 3.0;
    double omega_b = 3.0;
    double g_a = 0.2;
    double g_b = 0.2;
    double gamma = 0.015;
    double kappa_a = 0.001;
    double kappa_b = 0.001;
    /// +1: sum voltage bias, -1: difference bias.
    int sign = -1;

    void validate() const {
        require(omega0 > 0.0 && omega_a > 0.0 && omega_b > 0.0, "DeviceParams: frequencies must be > 0");
        require(g_a >= 0.0 && g_b >= 0.0 && gamma >= 0.0 && kappa_a >= 0.0 && kappa_b >= 0.0,
                "DeviceParams: couplings and rates must be >= 0");
        require(sign == 1 || sign == -1, "DeviceParams: sign must be +1 or -1");
    }
};

/// Reference device for the two-mode comparison (difference bias).
inline DeviceParams reference_device() { return {}; }

/// Chi and eta of the eliminated box, and which quadrature combination couples.
struct EffectiveParams {
    double chi = 0.0;
    double eta = 0.0;
    /// s = (a + a^dag) + s_sign (b + b^dag)
    int s_sign = -1;
};

/// chi = g^2 w0 / ((gamma/2)^2 + w0^2), eta = g^2 (gamma/2) / ((gamma/2)^2 + w0^2).
inline EffectiveParams effective_params(const DeviceParams &p) {
    p.validate();
    const double half_gamma = 0.5 * p.gamma;
    const double denom = half_gamma * half_gamma + p.omega0 * p.omega0;
    const double g2 = p.g_a * p.g_a;
    return {g2 * p.omega0 / denom, g2 * half_gamma / denom, p.sign};
}

inline std::vector<int> full_dims(int n_fock) { return {n_fock, n_fock, 2}; }
inline std::vector<int> mode_dims(int n_fock) { return {n_fock, n_fock}; }

namespace detail {
inline SparseC sigma_minus() {
    SparseC s(2, 2);
    s.insert(0, 1) = 1.0;
    s.makeCompressed();
    return s;
}
inline SparseC sigma_z() {
    SparseC s(2, 2);
    s.insert(0, 0) = -1.0;
    s.insert(1, 1) = 1.0;
    s.makeCompressed();
    return s;
}
inline SparseC quadrature(const SparseC &a) { return a + SparseC(a.adjoint()); }
inline SparseC number(const SparseC &a) { return SparseC(a.adjoint()) * a; }
} // namespace detail

/**
 * H = w_a a^dag a + w_b b^dag b + (w0/2) sigma_z
 *     - [g_a (a + a^dag) +- g_b (b + b^dag)] (sigma_+ + sigma_-)
 * with dissipators (gamma/2) L(sigma_-), (kappa_a/2) L(a), (kappa_b/2) L(b).
 */
inline LindbladModel build_full_model(const DeviceParams &p, int n_fock) {
    p.validate();
    require(n_fock >= 2, "build_full_model: n_fock must be >= 2");
    const auto dims = full_dims(n_fock);
    const SparseC a = lindblad::embed(lindblad::destroy(n_fock), 0, dims);
    const SparseC b = lindblad::embed(lindblad::destroy(n_fock), 1, dims);
    const SparseC sm = lindblad::embed(detail::sigma_minus(), 2, dims);
    const SparseC sz = lindblad::embed(detail::sigma_z(), 2, dims);
    const SparseC sx = sm + SparseC(sm.adjoint());
    const SparseC coupling = p.g_a * detail::quadrature(a) + (p.sign * p.g_b) * detail::quadrature(b);

    LindbladModel m;
    m.dims = dims;
    m.hamiltonian = p.omega_a * detail::number(a) + p.omega_b * detail::number(b) + (0.5 * p.omega0) * sz -
                    SparseC(coupling * sx);
    m.hamiltonian.prune(Complex{0.0, 0.0});
    m.collapse_ops = {{0.5 * p.gamma, sm, "sigma_-"}, {0.5 * p.kappa_a, a, "a"}, {0.5 * p.kappa_b, b, "b"}};
    return m;
}

struct EffectiveOptions {
    /// Sign of the chi s^2 term; -1 is the shift seen with the box relaxed to |g>.
    int dispersive_sign = -1;
    /// Use kappa/2 for the mode dissipators, matching the full model.
    bool harmonize = false;
    /// Drop every dissipator (the Hamiltonian-only model).
    bool hamiltonian_only = false;
};

/**
 * H_eff = w_a a^dag a + w_b b^dag b + dispersive_sign * chi * s^2, with
 * s = (a + a^dag) +- (b + b^dag) and dissipators kappa_a L(a), kappa_b L(b),
 * eta L(s). Requires g_a = g_b.
 */
inline std::pair<LindbladModel, EffectiveParams> build_effective_model(const DeviceParams &p, int n_fock,
                                                                       const EffectiveOptions &opts = {}) {
    p.validate();
    require(n_fock >= 2, "build_effective_model: n_fock must be >= 2");
    if (p.g_a != p.g_b) {
        throw InvalidArgument("build_effective_model: the eliminated model needs g_a == g_b");
    }
    require(opts.dispersive_sign == 1 || opts.dispersive_sign == -1, "build_effective_model: dispersive_sign must be +-1");
    const auto eff = effective_params(p);
    const auto dims = mode_dims(n_fock);
    const SparseC a = lindblad::embed(lindblad::destroy(n_fock), 0, dims);
    const SparseC b = lindblad::embed(lindblad::destroy(n_fock), 1, dims);
    const SparseC s = detail::quadrature(a) + static_cast<double>(eff.s_sign) * detail::quadrature(b);

    LindbladModel m;
    m.dims = dims;
    m.hamiltonian = p.omega_a * detail::number(a) + p.omega_b * detail::number(b) +
                    (opts.dispersive_sign * eff.chi) * SparseC(s * s);
    m.hamiltonian.prune(Complex{0.0, 0.0});
    if (!opts.hamiltonian_only) {
        const double kscale = opts.harmonize ? 0.5 : 1.0;
        m.collapse_ops = {{kscale * p.kappa_a, a, "a"}, {kscale * p.kappa_b, b, "b"}, {eff.eta, s, "s"}};
    }
    return {m, eff};
}

/// Fock-basis coherent state truncated to n levels (then renormalized).
inline CVector coherent_state(int n, Complex alpha) {
    CVector v(n);
    Complex term = std::exp(-0.5 * std::norm(alpha));
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            term *= alpha / std::sqrt(static_cast<double>(k));
        }
        v(k) = term;
    }
    return v.normalized();
}

enum class BoxState { Ground, Excited };

inline CVector kron_vec(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

/// |alpha> (x) |beta> (x) box as a density matrix on the full space.
inline CMatrix full_initial_state(int n_fock, Complex alpha, Complex beta, BoxState box) {
    const CVector modes = kron_vec(coherent_state(n_fock, alpha), coherent_state(n_fock, beta));
    const CVector psi = kron_vec(modes, CVector::Unit(2, box == BoxState::Ground ? 0 : 1));
    return psi * psi.adjoint();
}

/// |alpha> (x) |beta> on the two-mode space.
inline CMatrix mode_initial_state(int n_fock, Complex alpha, Complex beta) {
    const CVector psi = kron_vec(coherent_state(n_fock, alpha), coherent_state(n_fock, beta));
    return psi * psi.adjoint();
}

/// Observables of one model at one time.
struct Sample {
    double t = 0.0;
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
    double trace = 1.0;
    double purity = 1.0;
    /// Population of the top Fock level of either mode.
    double top_population = 0.0;
};

struct DistanceSample {
    double t = 0.0;
    double full_eff = 0.0;
    double full_ham = 0.0;
    double eff_ham = 0.0;
};

struct ComparisonOptions {
    Complex alpha{1.0, 0.0};
    Complex beta{0.1, 0.0};
    BoxState box = BoxState::Ground;
    EffectiveOptions effective{};
    lindblad::Method method = lindblad::Method::Taylor;
    /// RK4 step bounds h <= 1/(steps_per_unit * omega), omega0 for the full model and omega_a for the others.
    double full_steps_per_unit = 50.0;
    double effective_steps_per_unit = 50.0;
    /// Taylor step for every model.
    double taylor_step = 0.1;
};

struct Comparison {
    DeviceParams params;
    EffectiveParams effective;
    int n_fock = 0;
    std::vector<Sample> full;
    std::vector<Sample> eff;
    std::vector<Sample> ham;
    std::vector<DistanceSample> distances;
    /// Minimum eigenvalue seen in any reduced state.
    double min_eigenvalue = 0.0;
};

namespace detail {
struct ModeObservables {
    SparseC a;
    SparseC b;
    SparseC top_a;
    SparseC top_b;
    explicit ModeObservables(int n_fock) {
        const auto dims = mode_dims(n_fock);
        a = lindblad::embed(lindblad::destroy(n_fock), 0, dims);
        b = lindblad::embed(lindblad::destroy(n_fock), 1, dims);
        SparseC top(n_fock, n_fock);
        top.insert(n_fock - 1, n_fock - 1) = 1.0;
        top_a = lindblad::embed(top, 0, dims);
        top_b = lindblad::embed(top, 1, dims);
    }
    [[nodiscard]] Sample measure(double t, const CMatrix &rho) const {
        Sample s;
        s.t = t;
        s.a = lindblad::expect(a, rho);
        s.b = lindblad::expect(b, rho);
        s.trace = rho.trace().real();
        s.purity = lindblad::purity(rho);
        s.top_population =
            std::max(lindblad::expect(top_a, rho).real(), lindblad::expect(top_b, rho).real());
        return s;
    }
};
} // namespace detail

enum class ModelKind { Full, Effective, Hamiltonian };

inline std::string model_name(ModelKind k) {
    switch (k) {
    case ModelKind::Full:
        return "full";
    case ModelKind::Effective:
        return "effective";
    case ModelKind::Hamiltonian:
        return "hamiltonian";
    }
    return "unknown";
}

/// Two-mode state on t_grid for one model; the full model's box is traced out.
inline std::vector<CMatrix> reduced_trajectory(const DeviceParams &p, const std::vector<double> &t_grid, int n_fock,
                                               ModelKind kind, const ComparisonOptions &opts = {}) {
    const bool rk4 = opts.method == lindblad::Method::RK4;
    lindblad::IntegratorOptions iopts;
    iopts.method = opts.method;
    std::vector<CMatrix> states;
    states.reserve(t_grid.size());
    if (kind == ModelKind::Full) {
        iopts.max_step = rk4 ? 1.0 / (opts.full_steps_per_unit * std::max({p.omega0, p.omega_a, p.omega_b}))
                             : opts.taylor_step;
        lindblad::integrate_lindblad(build_full_model(p, n_fock),
                                     full_initial_state(n_fock, opts.alpha, opts.beta, opts.box), t_grid, iopts,
                                     [&](std::size_t, double, const CMatrix &rho) {
                                         states.push_back(lindblad::partial_trace_last(rho, 2));
                                     });
        return states;
    }
    auto eopts = opts.effective;
    eopts.hamiltonian_only = kind == ModelKind::Hamiltonian;
    iopts.max_step = rk4 ? 1.0 / (opts.effective_steps_per_unit * std::max(p.omega_a, p.omega_b)) : opts.taylor_step;
    lindblad::integrate_lindblad(build_effective_model(p, n_fock, eopts).first,
                                 mode_initial_state(n_fock, opts.alpha, opts.beta), t_grid, iopts,
                                 [&](std::size_t, double, const CMatrix &rho) { states.push_back(rho); });
    return states;
}

/// Observables of a reduced trajectory.
inline std::vector<Sample> measure(const std::vector<CMatrix> &states, const std::vector<double> &t_grid, int n_fock) {
    require(states.size() == t_grid.size(), "measure: one state per grid point");
    const detail::ModeObservables obs(n_fock);
    std::vector<Sample> out;
    out.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        out.push_back(obs.measure(t_grid[i], states[i]));
    }
    return out;
}

/**
 * Integrates the full model (then traces out the box), the effective master
 * equation and the effective Hamiltonian alone from the same mode state, and
 * records observables plus pairwise trace distances on t_grid. The three
 * integrations are independent and run concurrently.
 */
inline Comparison compare_reduced_dynamics(const DeviceParams &p, const std::vector<double> &t_grid, int n_fock,
                                           const ComparisonOptions &opts = {}) {
    Comparison out;
    out.params = p;
    out.n_fock = n_fock;
    out.effective = effective_params(p);

    constexpr std::array<ModelKind, 3> kinds{ModelKind::Full, ModelKind::Effective, ModelKind::Hamiltonian};
    std::array<std::vector<CMatrix>, 3> states;
    parallel_for(3, [&](std::size_t i) { states[i] = reduced_trajectory(p, t_grid, n_fock, kinds[i], opts); });

    out.full = measure(states[0], t_grid, n_fock);
    out.eff = measure(states[1], t_grid, n_fock);
    out.ham = measure(states[2], t_grid, n_fock);
    double min_eig = 1.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        out.distances.push_back({t_grid[i], lindblad::trace_distance(states[0][i], states[1][i]),
                                 lindblad::trace_distance(states[0][i], states[2][i]),
                                 lindblad::trace_distance(states[1][i], states[2][i])});
        min_eig = std::min({min_eig, lindblad::min_eigenvalue(states[0][i]), lindblad::min_eigenvalue(states[1][i])});
    }
    out.min_eigenvalue = min_eig;
    return out;
}

/// Grid of `points` equally spaced times covering `periods` nominal periods 2 pi / omega_a.
inline std::vector<double> period_grid(const DeviceParams &p, double periods, int points) {
    require(points >= 2 && periods > 0.0, "period_grid: need >= 2 points and positive span");
    std::vector<double> t(static_cast<std::size_t>(points));
    const double tmax = periods * 2.0 * kPi / p.omega_a;
    for (int i = 0; i < points; ++i) {
        t[static_cast<std::size_t>(i)] = tmax * i / (points - 1);
    }
    return t;
}

/// T(a, b) = exp(-pi (a^dag b - b^dag a) / 4) on n_fock^2 levels.
inline CMatrix beam_splitter(int n_fock) {
    const auto dims = mode_dims(n_fock);
    const SparseC a = lindblad::embed(lindblad::destroy(n_fock), 0, dims);
    const SparseC b = lindblad::embed(lindblad::destroy(n_fock), 1, dims);
    // a^dag b - b^dag a = -i G with G Hermitian, so T = exp(i pi G / 4).
    const CMatrix g = CMatrix(kI * (SparseC(SparseC(a.adjoint()) * b) - SparseC(SparseC(b.adjoint()) * a)));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
    const CVector phases = (kI * (kPi / 4.0) * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Basis indices |n_a, n_b> with n_a + n_b <= max_total.
inline std::vector<Eigen::Index> low_photon_indices(int n_fock, int max_total) {
    std::vector<Eigen::Index> idx;
    for (int na = 0; na < n_fock; ++na) {
        for (int nb = 0; nb < n_fock; ++nb) {
            if (na + nb <= max_total) {
                idx.push_back(na * n_fock + nb);
            }
        }
    }
    return idx;
}

struct DecoupledModel {
    CMatrix transformed;
    CMatrix expected;
    /// 'a' or 'b': the rotated mode carrying 2 chi X^2.
    char squeezed_mode = 'a';
    /// Max deviation over columns with n_a + n_b <= n_fock - 3 (free of truncation edges).
    double max_deviation = 0.0;
};

/**
 * Rotates an effective Hamiltonian with equal mode frequencies into
 * H' = T^dag H_eff T = w (n_a + n_b) + 2 sigma chi x~^2 on one mode, x~ = a + a^dag:
 * mode a for sum bias, mode b for difference bias.
 */
inline DecoupledModel canonical_transform(const DeviceParams &p, int n_fock, const EffectiveOptions &opts = {}) {
    if (p.omega_a != p.omega_b) {
        throw InvalidArgument("canonical_transform: needs omega_a == omega_b");
    }
    require(n_fock >= 4, "canonical_transform: n_fock must be >= 4");
    const auto [model, eff] = build_effective_model(p, n_fock, opts);
    const CMatrix t = beam_splitter(n_fock);
    DecoupledModel out;
    out.transformed = t.adjoint() * CMatrix(model.hamiltonian) * t;

    const auto dims = mode_dims(n_fock);
    const SparseC a = lindblad::embed(lindblad::destroy(n_fock), 0, dims);
    const SparseC b = lindblad::embed(lindblad::destroy(n_fock), 1, dims);
    out.squeezed_mode = eff.s_sign > 0 ? 'a' : 'b';
    const SparseC xq = detail::quadrature(out.squeezed_mode == 'a' ? a : b);
    out.expected = CMatrix(p.omega_a * (detail::number(a) + detail::number(b)) +
                           (2.0 * opts.dispersive_sign * eff.chi) * SparseC(xq * xq));
    double dev = 0.0;
    for (auto col : low_photon_indices(n_fock, n_fock - 3)) {
        dev = std::max(dev, (out.transformed.col(col) - out.expected.col(col)).cwiseAbs().maxCoeff());
    }
    out.max_deviation = dev;
    return out;
}

/**
 * Checks that the CV CPHASE exp(i x_a x_b), x = (a + a^dag)/sqrt2, separates
 * under the same rotation: T^dag CPHASE T = exp(i x_a^2 / 2) exp(-i x_b^2 / 2),
 * i.e. exp(i X_a'^2) exp(-i X_b'^2) with X = (a + a^dag)/2. Compared on the
 * block n_a + n_b <= max_total of an n_fock-level truncation.
 */
inline double cphase_separation_deviation(int n_fock = 30, int max_total = 4) {
    require(n_fock >= 8 && max_total >= 0 && max_total < n_fock, "cphase_separation_deviation: bad truncation");
    const SparseC a1 = lindblad::destroy(n_fock);
    const CMatrix x = CMatrix(detail::quadrature(a1)) / std::sqrt(2.0);
    Eigen::SelfAdjointEigenSolver<CMatrix> ex(x);
    const RVector lam = ex.eigenvalues();
    const CMatrix u = ex.eigenvectors();
    const auto n2 = static_cast<Eigen::Index>(n_fock) * n_fock;

    // exp(i x (x) x) is diagonal in the product eigenbasis of x.
    CMatrix uu(n2, n2);
    for (Eigen::Index i = 0; i < n_fock; ++i) {
        for (Eigen::Index j = 0; j < n_fock; ++j) {
            uu.block(i * n_fock, j * n_fock, n_fock, n_fock) = u(i, j) * u;
        }
    }
    CVector diag(n2);
    for (Eigen::Index i = 0; i < n_fock; ++i) {
        for (Eigen::Index j = 0; j < n_fock; ++j) {
            diag(i * n_fock + j) = std::polar(1.0, lam(i) * lam(j));
        }
    }
    const CMatrix t = beam_splitter(n_fock);
    const auto idx = low_photon_indices(n_fock, max_total);
    CMatrix cols(n2, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) {
        cols.col(static_cast<Eigen::Index>(k)) = t.col(idx[k]);
    }
    const CMatrix lhs_cols = t.adjoint() * (uu * (diag.asDiagonal() * (uu.adjoint() * cols)));

    const CMatrix x2 = x * x;
    Eigen::SelfAdjointEigenSolver<CMatrix> e2(x2);
    const CMatrix plus = e2.eigenvectors() * (kI * 0.5 * e2.eigenvalues().cast<Complex>()).array().exp().matrix().asDiagonal() *
                         e2.eigenvectors().adjoint();
    const CMatrix minus = plus.conjugate();
    double dev = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const Eigen::Index c = idx[k];
        const Eigen::Index ca = c / n_fock;
        const Eigen::Index cb = c % n_fock;
        for (auto r : idx) {
            const Complex rhs = plus(r / n_fock, ca) * minus(r % n_fock, cb);
            dev = std::max(dev, std::abs(lhs_cols(r, static_cast<Eigen::Index>(k)) - rhs));
        }
    }
    return dev;
}

} // namespace mirrorchain::cqed
