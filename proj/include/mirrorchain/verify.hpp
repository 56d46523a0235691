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
 * The cross-module invariant suite behind `mirrorchain verify-all`. Every
 * check is seeded and its detail text carries no timing, so two runs with
 * the same seed produce identical reports.
 */
#pragma once

#include "chain_sim.hpp"
#include "cqed.hpp"
#include "dense_check.hpp"
#include "gaussian.hpp"
#include "grape.hpp"
#include "qudit.hpp"
#include "report.hpp"
#include "tracker.hpp"

#include <cstdio>
#include <random>
#include <string>

namespace mirrorchain::verify {

/// Short fixed-format number for report details.
inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline std::string grid_label(int d, int n) { return "d=" + std::to_string(d) + " N=" + std::to_string(n); }

inline void add_bound(Report &r, const std::string &name, double value, double bound) {
    r.add(name, value <= bound, "max deviation " + sci(value) + " (bound " + sci(bound) + ")");
}

inline Report qudit_identities(std::mt19937_64 &rng) {
    using namespace qudit;
    Report r;
    for (int d : {2, 3, 5, 7}) {
        const QuditDim dim(d);
        const CMatrix id = CMatrix::Identity(d, d);
        const CMatrix x = generalized_pauli(dim, PauliKind::X, 1);
        const CMatrix z = generalized_pauli(dim, PauliKind::Z, 1);
        double pow_dev = max_abs_diff(generalized_pauli(dim, PauliKind::X, d), id);
        pow_dev = std::max(pow_dev, max_abs_diff(generalized_pauli(dim, PauliKind::Z, d), id));
        pow_dev = std::max(pow_dev, max_abs_diff(fourier_gate(dim, 4), id));
        CMatrix xd = id;
        for (int k = 0; k < d; ++k) {
            xd = x * xd;
        }
        pow_dev = std::max(pow_dev, max_abs_diff(xd, id));
        add_bound(r, "X^d = Z^d = F^4 = I, d=" + std::to_string(d), pow_dev, 1e-12);

        double comm = 0.0;
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                const CMatrix xj = generalized_pauli(dim, PauliKind::X, j);
                const CMatrix zk = generalized_pauli(dim, PauliKind::Z, k);
                comm = std::max(comm, max_abs_diff(xj * zk, dim.zeta_pow(-j * k) * zk * xj));
            }
        }
        add_bound(r, "X^j Z^k = zeta^{-jk} Z^k X^j, d=" + std::to_string(d), comm, 1e-12);

        const CMatrix s12 = two_qudit_gate(dim, TwoQuditKind::CPHASE, 1, 2, 2);
        const CMatrix sum12 = two_qudit_gate(dim, TwoQuditKind::SUM, 1, 2, 2);
        const CMatrix f2 = embed_single(fourier_gate(dim, 1), 2, 2);
        const CMatrix f2inv = embed_single(fourier_gate(dim, -1), 2, 2);
        add_bound(r, "SUM = F_2^-1 CPHASE F_2, d=" + std::to_string(d), max_abs_diff(sum12, f2inv * s12 * f2), 1e-12);

        const CMatrix d12 = sum12;
        const CMatrix d21 = two_qudit_gate(dim, TwoQuditKind::SUM, 2, 1, 2);
        const CMatrix f1sq = embed_single(fourier_gate(dim, 2), 1, 2);
        const CMatrix f2sq = embed_single(fourier_gate(dim, 2), 2, 2);
        const CMatrix six = d12 * f1sq * d21 * f1sq * d12 * f2sq;
        add_bound(r, "SWAP = six-gate SUM/F^2 product, d=" + std::to_string(d),
                  max_abs_diff(two_qudit_gate(dim, TwoQuditKind::SWAP, 1, 2, 2), six), 1e-12);

        const CMatrix simple = simplified_swap_on_zero(dim);
        const CMatrix swap = two_qudit_gate(dim, TwoQuditKind::SWAP, 1, 2, 2);
        double fig1 = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const CVector psi = chain::random_vector(d, rng).normalized();
            const CVector in = kron(CMatrix(psi), CMatrix(CVector::Unit(d, 0))).col(0);
            fig1 = std::max(fig1, max_abs_diff(simple * in, swap * in));
        }
        add_bound(r, "simplified SWAP on |psi>|0>, 20 states, d=" + std::to_string(d), fig1, 1e-12);
    }
    return r;
}

inline Report word_products(std::mt19937_64 &rng) {
    Report r;
    for (int d : {2, 3, 4}) {
        double dev = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_qudit_word(d, 3, rng);
            const auto b = random_qudit_word(d, 3, rng);
            dev = std::max(dev, max_abs_diff(realize(pauli_word_mul(a, b), 3), realize(a, 3) * realize(b, 3)));
        }
        add_bound(r, "word product vs dense, 200 pairs, d=" + std::to_string(d) + " N=3", dev, 1e-12);
    }
    return r;
}

inline Report tracker_checks(std::mt19937_64 &rng) {
    Report r;
    for (int d : {2, 3, 5}) {
        for (int n = 1; n <= 4; ++n) {
            if (chain::chain_dim(d, n, true) > 729) {
                continue;
            }
            const auto spec = qudit_chain(d, n);
            for (int sign : {2, -2}) {
                const auto rep = verify_mirror_relation(spec, sign);
                r.add("mirror relations, sign " + std::to_string(sign) + ", " + grid_label(d, n), rep.ok(),
                      std::to_string(rep.checks.size() - rep.failures()) + "/" + std::to_string(rep.checks.size()) +
                          " generators");
            }
            double round_dev = 0.0;
            double mirror_dev = 0.0;
            for (int a = 1; a <= n; ++a) {
                for (int l = 1; l < d; ++l) {
                    for (bool is_x : {true, false}) {
                        const auto w = is_x ? QuditWord::single(spec.field, a, l, 0) : QuditWord::single(spec.field, a, 0, l);
                        round_dev = std::max(round_dev, chain::relation_defect(w, conjugate_round(w, spec), n, {1, 0}, rng));
                        mirror_dev = std::max(mirror_dev,
                                              chain::relation_defect(w, mirror_image(w, spec), n, {n + 1, 2}, rng));
                    }
                }
            }
            add_bound(r, "one round vs dense, every generator, " + grid_label(d, n), round_dev, 1e-12);
            add_bound(r, "full protocol vs dense, every generator, " + grid_label(d, n), mirror_dev, 1e-12);
            double word_dev = 0.0;
            for (int trial = 0; trial < 20; ++trial) {
                const auto w = random_qudit_word(d, n, rng);
                word_dev = std::max(word_dev, chain::relation_defect(w, conjugate_round(w, spec), n, {1, 0}, rng));
            }
            add_bound(r, "one round vs dense, 20 random words, " + grid_label(d, n), word_dev, 1e-12);
        }
    }
    for (int n = 1; n <= 8; ++n) {
        const auto rep = verify_mirror_relation(cv_chain(n), 2, {0.7, -1.3, 2.5});
        r.add("CV mirror relations, N=" + std::to_string(n), rep.ok(), std::to_string(rep.checks.size()) + " generators");
    }
    return r;
}

inline Report chain_checks(std::mt19937_64 &rng) {
    Report r;
    for (int d : {2, 3, 5}) {
        for (int n = 2; n <= 4; ++n) {
            if (chain::chain_dim(d, n, true) > 729) {
                continue;
            }
            for (int sign : {2, -2}) {
                const auto chk = chain::operator_mirror_check(chain::mirror_circuit_matrix(d, n, sign), d, n);
                add_bound(r, "circuit = phase * reversal, sign " + std::to_string(sign) + ", " + grid_label(d, n),
                          chk.max_deviation, 1e-10);
            }
            double worst = 1.0;
            for (int trial = 0; trial < 10; ++trial) {
                const auto s = chain::random_state(d, n, rng);
                worst = std::min(worst, chain::mirror_fidelity(s, chain::run_mirror_protocol(s, 2)).fidelity);
            }
            r.add("random states mirrored, 10 states, " + grid_label(d, n), worst >= 1.0 - 1e-10,
                  "min fidelity 1 - " + sci(1.0 - worst));
        }
    }
    // Without its final segment the circuit is no longer the reversal, yet still moves the special input.
    for (int d : {2, 3}) {
        const int n = 3;
        const auto trunc = chain::operator_mirror_check(chain::truncated_circuit_matrix(d, n), d, n);
        const CVector psi = chain::random_vector(d, rng).normalized();
        const auto out = chain::run_truncated_protocol(chain::relay_input_state(psi, n));
        const CMatrix rho = chain::reduced_site_density(out, n);
        const double dev = max_abs_diff(rho, CMatrix(psi * psi.adjoint()));
        r.add("truncated circuit: not the reversal, still transports psi, " + grid_label(d, n),
              trunc.max_deviation > 1e-3 && dev <= 1e-10,
              "operator deviation " + sci(trunc.max_deviation) + ", site-N state deviation " + sci(dev));
    }
    return r;
}

inline Report cv_checks(std::mt19937_64 &rng) {
    Report r;
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 1; n <= 8; ++n) {
        const auto m = cv::mirror_map(n);
        add_bound(r, "CV mirror map = mode reversal, N=" + std::to_string(n),
                  std::max(max_abs_diff(m.s, cv::mode_reversal(n)), m.displacement.cwiseAbs().maxCoeff()), 1e-9);
        add_bound(r, "CV mirror map symplectic, N=" + std::to_string(n), cv::symplectic_defect(m.s), 1e-10);
        std::uniform_int_distribution<int> site(1, n);
        bool ok = true;
        for (int trial = 0; trial < 10; ++trial) {
            ok = ok && cv::cv_heisenberg_check(u(rng), u(rng), site(rng), n).ok();
        }
        r.add("displacement tracking vs symplectic, 10 triples, N=" + std::to_string(n), ok);
    }
    const auto sq = cv::GaussianState::two_mode_squeezed(3, 1, 2, 0.4);
    add_bound(r, "two-mode squeezed pair mirrored, N=3", cv::mirror_deviation(sq, cv::run_cv_mirror(sq)), 1e-9);
    return r;
}

inline Report cqed_checks(std::mt19937_64 &rng) {
    Report r;
    std::uniform_real_distribution<double> pos(0.01, 20.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        cqed::DeviceParams p;
        p.omega0 = pos(rng);
        p.g_a = p.g_b = pos(rng) * 0.05;
        p.gamma = pos(rng) * 0.1;
        const auto e = cqed::effective_params(p);
        const double lhs = e.chi * p.gamma / 2.0;
        const double rhs = e.eta * p.omega0;
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
    }
    r.add("chi gamma/2 = eta omega0, 100 parameter sets", worst < 1e-12, "max relative error " + sci(worst));

    const auto p = cqed::reference_device();
    const auto full = cqed::build_full_model(p, 6);
    r.add("full Hamiltonian Hermitian", lindblad::is_hermitian(full.hamiltonian, 1e-12));
    for (int sign : {1, -1}) {
        auto q = p;
        q.sign = sign;
        const auto ct = cqed::canonical_transform(q, 12);
        add_bound(r, std::string("beam-splitter decoupling, ") + (sign > 0 ? "sum" : "difference") + " bias",
                  ct.max_deviation, 1e-8);
    }
    add_bound(r, "CPHASE separates into single-mode factors", cqed::cphase_separation_deviation(30, 4), 1e-8);

    // One decaying mode: <a>(t) = alpha exp(-kappa t / 2) exp(-i omega t).
    lindblad::LindbladModel m;
    const int nf = 12;
    const double omega = 1.3;
    const double kappa = 0.2;
    const Complex alpha{0.8, 0.3};
    const auto a = lindblad::destroy(nf);
    m.dims = {nf};
    m.hamiltonian = omega * lindblad::SparseC(lindblad::SparseC(a.adjoint()) * a);
    m.collapse_ops = {{kappa / 2.0, a, "a"}};
    const CVector psi = cqed::coherent_state(40, alpha).head(nf).normalized();
    const std::vector<double> grid{0.0, 1.0, 2.0};
    lindblad::IntegratorOptions opts;
    opts.max_step = 1e-3;
    double dev = 0.0;
    const auto states = lindblad::integrate_lindblad(m, psi * psi.adjoint(), grid, opts);
    const Complex a0 = lindblad::expect(a, states.front());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Complex expected = a0 * std::exp(-0.5 * kappa * grid[i]) * std::exp(-kI * omega * grid[i]);
        dev = std::max(dev, std::abs(lindblad::expect(a, states[i]) - expected));
    }
    add_bound(r, "damped mode amplitude vs closed form", dev, 1e-6);
    return r;
}

inline Report grape_checks(std::mt19937_64 &rng) {
    Report r;
    const auto prob = grape::squeeze_problem(10, 0.1, 2.0, 40);
    const auto pulse = grape::random_pulse(prob, rng(), 0.5);
    const auto g = grape::fidelity_gradient(pulse, prob);
    const double h = 1e-6;
    double num = 0.0;
    double den = 0.0;
    for (int k = 0; k < prob.n_slices; ++k) {
        for (int which = 0; which < 2; ++which) {
            auto plus = pulse;
            auto minus = pulse;
            (which == 0 ? plus.c1 : plus.c2)(k) += h;
            (which == 0 ? minus.c1 : minus.c2)(k) -= h;
            const double fd = (grape::control_fidelity(grape::propagate_controls(plus, prob), prob.target) -
                               grape::control_fidelity(grape::propagate_controls(minus, prob), prob.target)) /
                              (2.0 * h);
            const double an = which == 0 ? g.d_c1(k) : g.d_c2(k);
            num += (fd - an) * (fd - an);
            den += fd * fd;
        }
    }
    const double rel = std::sqrt(num / den);
    r.add("analytic vs central-difference gradient, n_fock=10", rel < 1e-5, "relative error " + sci(rel));

    const auto big = grape::squeeze_problem(20, 0.1, 5.0, 50);
    add_bound(r, "slice propagator product unitary, n_fock=20",
              unitarity_defect(grape::propagate_controls(grape::random_pulse(big, rng(), 1.0), big)), 1e-9);
    return r;
}

/// Runs every module suite with one seeded generator, in a fixed order.
inline Report verify_all(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Report all;
    auto section = [&](const std::string &prefix, const Report &rep) {
        for (auto c : rep.checks) {
            c.name = prefix + ": " + c.name;
            all.checks.push_back(std::move(c));
        }
    };
    section("qudit", qudit_identities(rng));
    section("words", word_products(rng));
    section("tracker", tracker_checks(rng));
    section("chain", chain_checks(rng));
    section("cv", cv_checks(rng));
    section("cqed", cqed_checks(rng));
    section("grape", grape_checks(rng));
    return all;
}

} // namespace mirrorchain::verify
