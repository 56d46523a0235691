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
 * Symbolic products of site-indexed generalized Pauli factors.
 *
 * A word is  e^{i phase * unit} * prod_a X_a^{x_a} Z_a^{z_a}  in normal order
 * (X left of Z at every site). Exponents and the phase live in an exponent
 * field: integers mod d for qudits (unit = 2 pi / d), reals for continuous
 * variables (unit = 1, hbar = 1). Both fields share every algorithm; only
 * `reduce` differs.
 */
#pragma once

#include "core.hpp"
#include "qudit.hpp"

#include <map>
#include <random>
#include <string>
#include <variant>

namespace mirrorchain {

/// Exponents of qudit Paulis: integers reduced into {0, ..., d-1}.
struct QuditField {
    using value_type = std::int64_t;
    int d = 2;

    [[nodiscard]] value_type reduce(value_type v) const { return mod_floor(v, d); }
    [[nodiscard]] bool is_zero(value_type v) const { return reduce(v) == 0; }
    [[nodiscard]] Complex phase_value(value_type m) const { return qudit::QuditDim(d).zeta_pow(m); }
    [[nodiscard]] double phase_angle(value_type m) const {
        return 2.0 * kPi * static_cast<double>(reduce(m)) / d;
    }
    [[nodiscard]] std::string name() const { return "qudit"; }
    friend bool operator==(const QuditField &, const QuditField &) = default;
};

/// Exponents of CV displacements X(q) = e^{-i q p}, Z(p) = e^{i p x}: reals.
struct CvField {
    using value_type = double;
    /// Exponents this close to zero are cancellation residue and drop out.
    double zero_tol = 1e-12;

    [[nodiscard]] value_type reduce(value_type v) const { return is_zero(v) ? 0.0 : v; }
    [[nodiscard]] bool is_zero(value_type v) const { return std::abs(v) <= zero_tol; }
    [[nodiscard]] Complex phase_value(value_type theta) const { return std::polar(1.0, theta); }
    [[nodiscard]] double phase_angle(value_type theta) const { return theta; }
    [[nodiscard]] std::string name() const { return "cv"; }
    friend bool operator==(const CvField &, const CvField &) = default;
};

template <class Field> struct SiteExponents {
    typename Field::value_type x{};
    typename Field::value_type z{};
    friend bool operator==(const SiteExponents &, const SiteExponents &) = default;
};

template <class Field> class PauliWord {
  public:
    using value_type = typename Field::value_type;
    using Factors = std::map<int, SiteExponents<Field>>;

    explicit PauliWord(Field field = {}) : field_(field) {}

    /// X^x Z^z at one site.
    static PauliWord single(Field field, int site, value_type x, value_type z) {
        PauliWord w(field);
        w.set(site, x, z);
        return w;
    }

    [[nodiscard]] const Field &field() const { return field_; }
    [[nodiscard]] const Factors &factors() const { return factors_; }
    /// Phase in field units: the scalar is field().phase_value(phase()).
    [[nodiscard]] value_type phase() const { return phase_; }
    [[nodiscard]] Complex phase_value() const { return field_.phase_value(phase_); }
    [[nodiscard]] bool empty() const { return factors_.empty(); }

    [[nodiscard]] SiteExponents<Field> at(int site) const {
        auto it = factors_.find(site);
        return it == factors_.end() ? SiteExponents<Field>{} : it->second;
    }

    /// Overwrite the factor at `site`; a (0,0) pair removes the site.
    void set(int site, value_type x, value_type z) {
        require(site >= 1, "PauliWord: sites are numbered from 1");
        x = field_.reduce(x);
        z = field_.reduce(z);
        if (field_.is_zero(x) && field_.is_zero(z)) {
            factors_.erase(site);
        } else {
            factors_[site] = {x, z};
        }
    }

    void add_phase(value_type delta) { phase_ = field_.reduce(phase_ + delta); }

    [[nodiscard]] int max_site() const { return factors_.empty() ? 0 : factors_.rbegin()->first; }
    [[nodiscard]] int min_site() const { return factors_.empty() ? 0 : factors_.begin()->first; }

    friend bool operator==(const PauliWord &, const PauliWord &) = default;

  private:
    Field field_;
    Factors factors_;
    value_type phase_{};
};

using QuditWord = PauliWord<QuditField>;
using CvWord = PauliWord<CvField>;

/**
 * Product a*b in normal order. Moving Z^{z_a} of `a` past X^{x_b} of `b` at a
 * shared site uses Z^k X^j = zeta^{jk} X^j Z^k (qudit) or
 * Z(p) X(q) = e^{i q p} X(q) Z(p) (CV).
 */
template <class Field> PauliWord<Field> pauli_word_mul(const PauliWord<Field> &a, const PauliWord<Field> &b) {
    if (!(a.field() == b.field())) {
        throw InvalidArgument("pauli_word_mul: mode or dimension mismatch");
    }
    PauliWord<Field> out = a;
    out.add_phase(b.phase());
    for (const auto &[site, eb] : b.factors()) {
        const auto ea = a.at(site);
        out.add_phase(ea.z * eb.x);
        out.set(site, ea.x + eb.x, ea.z + eb.z);
    }
    return out;
}

/// Exact comparison for qudit words.
inline bool approx_equal(const QuditWord &a, const QuditWord &b, double /*tol*/ = 0.0) { return a == b; }

/// Same support, exponents within tol, phase angle within tol (mod 2 pi).
inline bool approx_equal(const CvWord &a, const CvWord &b, double tol = 1e-10) {
    if (a.factors().size() != b.factors().size()) {
        return false;
    }
    for (const auto &[site, ea] : a.factors()) {
        auto it = b.factors().find(site);
        if (it == b.factors().end() || std::abs(ea.x - it->second.x) > tol || std::abs(ea.z - it->second.z) > tol) {
            return false;
        }
    }
    return std::abs(a.phase_value() - b.phase_value()) <= tol;
}

/// Dense realization of a qudit word on an n_sites chain.
inline CMatrix realize(const QuditWord &w, int n_sites) {
    require(w.empty() || (w.min_site() >= 1 && w.max_site() <= n_sites),
            "realize: word has sites outside the chain");
    const qudit::QuditDim dim(w.field().d);
    CMatrix out = CMatrix::Identity(1, 1);
    for (int site = 1; site <= n_sites; ++site) {
        const auto e = w.at(site);
        const CMatrix local = generalized_pauli(dim, qudit::PauliKind::X, e.x) *
                              generalized_pauli(dim, qudit::PauliKind::Z, e.z);
        out = qudit::kron(out, local);
    }
    return w.phase_value() * out;
}

/// Uniformly random qudit word over sites 1..n_sites (random phase included).
template <class Rng> QuditWord random_qudit_word(int d, int n_sites, Rng &rng) {
    std::uniform_int_distribution<std::int64_t> pick(0, d - 1);
    QuditWord w(QuditField{d});
    for (int site = 1; site <= n_sites; ++site) {
        const auto x = pick(rng);
        const auto z = pick(rng);
        w.set(site, x, z);
    }
    w.add_phase(pick(rng));
    return w;
}

} // namespace mirrorchain
