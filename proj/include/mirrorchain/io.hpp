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
 * Machine-readable output: JSON documents for trajectories, mirror runs,
 * Gaussian states and reports, plus CSV writers for time series and pulses.
 * Every floating value is rounded to 12 significant digits before it is
 * emitted, so identical runs give byte-identical files.
 */
#pragma once

#include "chain_sim.hpp"
#include "cqed.hpp"
#include "gaussian.hpp"
#include "grape.hpp"
#include "report.hpp"
#include "tracker.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

namespace mirrorchain::io {

using Json = nlohmann::ordered_json;

/// v rounded to 12 significant digits (-0 becomes 0).
inline double sig12(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

/// 12-significant-digit text for CSV cells.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", sig12(v));
    return buf;
}

inline Json complex_json(Complex z) { return {{"re", sig12(z.real())}, {"im", sig12(z.imag())}}; }

inline Json vector_json(const RVector &v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(sig12(v(i)));
    }
    return a;
}

inline Json matrix_json(const RMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        rows.push_back(vector_json(m.row(i).transpose()));
    }
    return rows;
}

/// Symmetric representative of e mod d in (-d/2, d/2].
inline std::int64_t signed_exponent(std::int64_t e, int d) {
    const auto r = mod_floor(e, d);
    return 2 * r > d ? r - d : r;
}

inline Json word_factors_json(const QuditWord &w) {
    Json f = Json::array();
    const int d = w.field().d;
    for (const auto &[site, e] : w.factors()) {
        const auto xs = signed_exponent(e.x, d);
        const auto zs = signed_exponent(e.z, d);
        f.push_back({{"site", site},
                     {"x_exp", e.x},
                     {"z_exp", e.z},
                     {"x_signed", xs},
                     {"z_signed", zs},
                     {"x_sign", xs > 0 ? 1 : (xs < 0 ? -1 : 0)},
                     {"z_sign", zs > 0 ? 1 : (zs < 0 ? -1 : 0)}});
    }
    return f;
}

inline Json word_factors_json(const CvWord &w) {
    Json f = Json::array();
    for (const auto &[site, e] : w.factors()) {
        f.push_back({{"site", site},
                     {"x_exp", sig12(e.x)},
                     {"z_exp", sig12(e.z)},
                     {"x_sign", e.x > 0 ? 1 : (e.x < 0 ? -1 : 0)},
                     {"z_sign", e.z > 0 ? 1 : (e.z < 0 ? -1 : 0)}});
    }
    return f;
}

/// Qudit phases are exact integers in units of 2 pi / d; "phase" is the angle in radians.
inline Json trajectory_json(const Trajectory<QuditField> &t) {
    Json steps = Json::array();
    const int d = t.spec.field.d;
    for (const auto &s : t.steps) {
        steps.push_back({{"k", s.k},
                         {"factors", word_factors_json(s.word)},
                         {"phase", sig12(2.0 * kPi * static_cast<double>(s.word.phase()) / d)},
                         {"phase_units", s.word.phase()}});
    }
    return {{"mode", "qudit"}, {"d", d}, {"N", t.spec.n_sites}, {"rounds", t.rounds}, {"steps", steps}};
}

inline Json trajectory_json(const Trajectory<CvField> &t) {
    Json steps = Json::array();
    for (const auto &s : t.steps) {
        steps.push_back({{"k", s.k}, {"factors", word_factors_json(s.word)}, {"phase", sig12(s.word.phase())}});
    }
    return {{"mode", "cv"}, {"N", t.spec.n_sites}, {"rounds", t.rounds}, {"steps", steps}};
}

inline Json report_json(const Report &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"passed", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

inline Json gaussian_json(const cv::GaussianState &s) {
    return {{"N", s.n_modes}, {"mean", vector_json(s.mean)}, {"cov", matrix_json(s.cov)}};
}

/// Parses {N, mean:[2N], cov:[[2N]]}; throws InvalidArgument on schema errors.
inline cv::GaussianState gaussian_from_json(const Json &j) {
    try {
        const int n = j.at("N").get<int>();
        const auto mean = j.at("mean").get<std::vector<double>>();
        const auto cov = j.at("cov").get<std::vector<std::vector<double>>>();
        require(n >= 1, "state: N must be >= 1");
        require(static_cast<int>(mean.size()) == 2 * n && static_cast<int>(cov.size()) == 2 * n,
                "state: mean and cov must have 2N entries");
        RVector m = Eigen::Map<const RVector>(mean.data(), 2 * n);
        RMatrix c(2 * n, 2 * n);
        for (int i = 0; i < 2 * n; ++i) {
            require(static_cast<int>(cov[static_cast<std::size_t>(i)].size()) == 2 * n, "state: cov must be square");
            for (int k = 0; k < 2 * n; ++k) {
                c(i, k) = cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            }
        }
        return {n, m, c};
    } catch (const Json::exception &e) {
        throw InvalidArgument(std::string("state: ") + e.what());
    }
}

inline Json device_json(const cqed::DeviceParams &p) {
    return {{"omega0", sig12(p.omega0)}, {"omega_a", sig12(p.omega_a)}, {"omega_b", sig12(p.omega_b)},
            {"g_a", sig12(p.g_a)},       {"g_b", sig12(p.g_b)},         {"gamma", sig12(p.gamma)},
            {"kappa_a", sig12(p.kappa_a)}, {"kappa_b", sig12(p.kappa_b)}, {"sign", p.sign}};
}

/// Missing keys keep the reference_device() values.
inline cqed::DeviceParams device_from_json(const Json &j) {
    cqed::DeviceParams p;
    try {
        p.omega0 = j.value("omega0", p.omega0);
        p.omega_a = j.value("omega_a", p.omega_a);
        p.omega_b = j.value("omega_b", p.omega_b);
        p.g_a = j.value("g_a", p.g_a);
        p.g_b = j.value("g_b", p.g_b);
        p.gamma = j.value("gamma", p.gamma);
        p.kappa_a = j.value("kappa_a", p.kappa_a);
        p.kappa_b = j.value("kappa_b", p.kappa_b);
        p.sign = j.value("sign", p.sign);
    } catch (const Json::exception &e) {
        throw InvalidArgument(std::string("device params: ") + e.what());
    }
    p.validate();
    return p;
}

inline Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

inline void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument("cannot write " + path);
    }
    out << text;
}

inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

/// Header comment lines ("# key: value") followed by t, Re<a>, Im<a>, Re<b>, Im<b>, trace, purity, top_population.
inline void write_samples_csv(std::ostream &os, const Json &header, const std::vector<cqed::Sample> &samples) {
    os << "# " << header.dump() << "\n";
    os << "t,re_a,im_a,re_b,im_b,trace,purity,top_population\n";
    for (const auto &s : samples) {
        os << fmt12(s.t) << ',' << fmt12(s.a.real()) << ',' << fmt12(s.a.imag()) << ',' << fmt12(s.b.real()) << ','
           << fmt12(s.b.imag()) << ',' << fmt12(s.trace) << ',' << fmt12(s.purity) << ',' << fmt12(s.top_population)
           << "\n";
    }
}

inline void write_distances_csv(std::ostream &os, const Json &header, const std::vector<cqed::DistanceSample> &d) {
    os << "# " << header.dump() << "\n";
    os << "t,full_eff,full_ham,eff_ham\n";
    for (const auto &s : d) {
        os << fmt12(s.t) << ',' << fmt12(s.full_eff) << ',' << fmt12(s.full_ham) << ',' << fmt12(s.eff_ham) << "\n";
    }
}

/// slice, tau (slice start), C1, C2
inline void write_pulse_csv(std::ostream &os, const grape::ControlPulse &p) {
    os << "slice,tau,c1,c2\n";
    for (int k = 0; k < p.n_slices(); ++k) {
        os << k << ',' << fmt12(k * p.dt) << ',' << fmt12(p.c1(k)) << ',' << fmt12(p.c2(k)) << "\n";
    }
}

} // namespace mirrorchain::io
