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
 * Heisenberg-picture propagation of Pauli words through the global round
 * U = F^-1 S (global inverse Fourier after the nearest-neighbour CPHASE
 * ladder) and through the full mirror protocol F^{+-2} U^{N+1}.
 *
 * conjugate_round returns w' with U w = w' U. The single-site rules are
 *   X^l_a -> X^l_{a-1} Z^{-l}_a X^l_{a+1},   Z^l_a -> X^l_a,
 * with the neighbour factor dropped at the chain ends (the CPHASE ladder has
 * no gate there). The same code runs for qudit and CV exponents; nothing
 * here relies on X^d = Z^d = I.
 */
#pragma once

#include "pauli_word.hpp"
#include "report.hpp"

#include <sstream>
#include <vector>

namespace mirrorchain {

template <class Field> struct ChainSpec {
    int n_sites = 1;
    Field field{};

    ChainSpec(int n, Field f) : n_sites(n), field(f) {
        require(n >= 1, "ChainSpec: need at least one site");
    }
};

using QuditChain = ChainSpec<QuditField>;
using CvChain = ChainSpec<CvField>;

inline QuditChain qudit_chain(int d, int n) {
    require(d >= 2, "ChainSpec: qudit dimension must be >= 2");
    return {n, QuditField{d}};
}
inline CvChain cv_chain(int n) { return {n, CvField{}}; }

template <class Field> PauliWord<Field> conjugate_round(const PauliWord<Field> &w, const ChainSpec<Field> &spec) {
    if (!(w.field() == spec.field)) {
        throw InvalidArgument("conjugate_round: word and chain use different exponent fields");
    }
    if (!w.empty() && (w.min_site() < 1 || w.max_site() > spec.n_sites)) {
        throw InvalidArgument("conjugate_round: site out of range");
    }
    const int n = spec.n_sites;
    PauliWord<Field> out(spec.field);
    for (const auto &[a, e] : w.factors()) {
        PauliWord<Field> x_image(spec.field);
        if (a > 1) {
            x_image.set(a - 1, e.x, {});
        }
        x_image.set(a, {}, -e.x);
        if (a < n) {
            x_image.set(a + 1, e.x, {});
        }
        const auto z_image = PauliWord<Field>::single(spec.field, a, e.z, {});
        out = pauli_word_mul(out, pauli_word_mul(x_image, z_image));
    }
    out.add_phase(w.phase());
    return out;
}

/// Conjugation by the final global F^{+-2}: X^x Z^z -> X^-x Z^-z at every site.
template <class Field> PauliWord<Field> conjugate_fourier_squared(const PauliWord<Field> &w) {
    PauliWord<Field> out(w.field());
    for (const auto &[a, e] : w.factors()) {
        out.set(a, -e.x, -e.z);
    }
    out.add_phase(w.phase());
    return out;
}

template <class Field> struct TrajectoryStep {
    int k = 0;
    PauliWord<Field> word;
};

/// steps[k] is the word after k rounds; steps[0] is the input.
template <class Field> struct Trajectory {
    ChainSpec<Field> spec;
    int rounds = 0;
    std::vector<TrajectoryStep<Field>> steps;
};

template <class Field>
Trajectory<Field> mirror_trajectory(const PauliWord<Field> &w, const ChainSpec<Field> &spec, int rounds) {
    require(rounds >= 0, "mirror_trajectory: rounds must be >= 0");
    Trajectory<Field> t{spec, rounds, {}};
    t.steps.reserve(static_cast<std::size_t>(rounds) + 1);
    t.steps.push_back({0, w});
    for (int k = 1; k <= rounds; ++k) {
        t.steps.push_back({k, conjugate_round(t.steps.back().word, spec)});
    }
    return t;
}

/// Image of w under the whole protocol F^{+-2} (F^-1 S)^{N+1}.
template <class Field> PauliWord<Field> mirror_image(const PauliWord<Field> &w, const ChainSpec<Field> &spec) {
    auto t = mirror_trajectory(w, spec, spec.n_sites + 1);
    return conjugate_fourier_squared(t.steps.back().word);
}

namespace detail {
template <class Field> std::string describe(const PauliWord<Field> &w) {
    std::ostringstream os;
    os << "phase=" << w.phase();
    for (const auto &[a, e] : w.factors()) {
        os << " [" << a << ":X^" << e.x << " Z^" << e.z << "]";
    }
    return os.str();
}

template <class Field>
void check_generator(Report &report, const ChainSpec<Field> &spec, int a, typename Field::value_type l, bool is_x) {
    const int n = spec.n_sites;
    const int mirror = n + 1 - a;
    const auto input = is_x ? PauliWord<Field>::single(spec.field, a, l, {})
                            : PauliWord<Field>::single(spec.field, a, {}, l);
    const auto after_rounds = mirror_trajectory(input, spec, n + 1).steps.back().word;
    const auto flipped_expected = is_x ? PauliWord<Field>::single(spec.field, mirror, -l, {})
                                       : PauliWord<Field>::single(spec.field, mirror, {}, -l);
    const auto final_expected = is_x ? PauliWord<Field>::single(spec.field, mirror, l, {})
                                     : PauliWord<Field>::single(spec.field, mirror, {}, l);
    const auto final_word = conjugate_fourier_squared(after_rounds);
    std::ostringstream name;
    name << (is_x ? "X" : "Z") << "^" << l << " at site " << a;
    const bool ok = approx_equal(after_rounds, flipped_expected) && approx_equal(final_word, final_expected);
    report.add(name.str(), ok, ok ? "" : "after N+1 rounds: " + describe(after_rounds) + "; final: " + describe(final_word));
}
} // namespace detail

/**
 * Checks that F^{sign} (F^-1 S)^{N+1} maps X^l_a -> X^l_{N+1-a} and
 * Z^l_a -> Z^l_{N+1-a}, and that before the final F^{sign} the exponent is
 * -l. Qudit mode covers every l in 1..d-1. F^{+2} and F^{-2} act identically
 * on words, so `sign` only labels the report.
 */
inline Report verify_mirror_relation(const QuditChain &spec, int sign) {
    require(sign == 2 || sign == -2, "verify_mirror_relation: sign must be +2 or -2");
    Report report;
    for (int a = 1; a <= spec.n_sites; ++a) {
        for (int l = 1; l < spec.field.d; ++l) {
            detail::check_generator(report, spec, a, l, true);
            detail::check_generator(report, spec, a, l, false);
        }
    }
    return report;
}

/// CV mode: every site, for each sampled real exponent.
inline Report verify_mirror_relation(const CvChain &spec, int sign, const std::vector<double> &samples) {
    require(sign == 2 || sign == -2, "verify_mirror_relation: sign must be +2 or -2");
    Report report;
    for (int a = 1; a <= spec.n_sites; ++a) {
        for (double l : samples) {
            if (l == 0.0) {
                continue;
            }
            detail::check_generator(report, spec, a, l, true);
            detail::check_generator(report, spec, a, l, false);
        }
    }
    return report;
}

} // namespace mirrorchain
