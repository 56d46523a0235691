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
 * Dense cross-checks of symbolic word relations: realize(out) C = C realize(in)
 * for C = F^{final} (F^-1 S)^{rounds}. Small chains compare full matrices;
 * larger ones compare both sides on random probe vectors.
 */
#pragma once

#include "chain_sim.hpp"
#include "pauli_word.hpp"

#include <random>

namespace mirrorchain::chain {

/// Multiplies every column of m by the dense word (phase included).
inline void apply_word(CMatrix &m, const QuditWord &w, int n_sites) {
    require(w.empty() || (w.min_site() >= 1 && w.max_site() <= n_sites), "apply_word: site out of range");
    const int d = w.field().d;
    const qudit::QuditDim dim(d);
    for (const auto &[site, e] : w.factors()) {
        const CMatrix local = qudit::generalized_pauli(dim, qudit::PauliKind::X, e.x) *
                              qudit::generalized_pauli(dim, qudit::PauliKind::Z, e.z);
        apply_site_op(m, d, n_sites, site, local);
    }
    m *= w.phase_value();
}

/// Circuit F^{final_power} (F^-1 S)^{rounds}.
struct CircuitSpec {
    int rounds = 1;
    int final_power = 0;
};

/// max |realize(out) C - C realize(in)| over all entries.
inline double relation_defect_dense(const QuditWord &in, const QuditWord &out, int n_sites, CircuitSpec c) {
    const int d = in.field().d;
    const auto total = static_cast<Eigen::Index>(chain_dim(d, n_sites));
    CMatrix lhs = CMatrix::Identity(total, total);
    detail::run_rounds(lhs, d, n_sites, c.rounds, c.final_power);
    apply_word(lhs, out, n_sites);
    CMatrix rhs = CMatrix::Identity(total, total);
    apply_word(rhs, in, n_sites);
    detail::run_rounds(rhs, d, n_sites, c.rounds, c.final_power);
    return max_abs_diff(lhs, rhs);
}

/// max |realize(out) C v - C realize(in) v| over `probes` random Gaussian vectors v.
template <class Rng>
double relation_defect_probe(const QuditWord &in, const QuditWord &out, int n_sites, CircuitSpec c, Rng &rng,
                             int probes = 2) {
    const int d = in.field().d;
    const auto total = static_cast<Eigen::Index>(chain_dim(d, n_sites, true));
    std::normal_distribution<double> g;
    CMatrix v(total, probes);
    for (Eigen::Index j = 0; j < probes; ++j) {
        for (Eigen::Index i = 0; i < total; ++i) {
            v(i, j) = Complex(g(rng), g(rng));
        }
    }
    CMatrix lhs = v;
    detail::run_rounds(lhs, d, n_sites, c.rounds, c.final_power);
    apply_word(lhs, out, n_sites);
    CMatrix rhs = v;
    apply_word(rhs, in, n_sites);
    detail::run_rounds(rhs, d, n_sites, c.rounds, c.final_power);
    return max_abs_diff(lhs, rhs);
}

/// Largest chain dimension for which relation_defect compares full matrices.
inline constexpr std::size_t kDenseRelationLimit = 1024;

/// Full-matrix comparison up to kDenseRelationLimit, random probes beyond.
template <class Rng>
double relation_defect(const QuditWord &in, const QuditWord &out, int n_sites, CircuitSpec c, Rng &rng) {
    if (chain_dim(in.field().d, n_sites, true) <= kDenseRelationLimit) {
        return relation_defect_dense(in, out, n_sites, c);
    }
    return relation_defect_probe(in, out, n_sites, c, rng);
}

} // namespace mirrorchain::chain
