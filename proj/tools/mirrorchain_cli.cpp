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

// mirrorchain: experiment runner for the mirror-transport toolkit.
//
// Exit codes: 0 success, 1 verify-all found a failing check, 2 bad
// command line or config file, 3 module rejected its input, 4 numerical
// failure (integrator drift, non-convergent series).

#include <mirrorchain/chain_sim.hpp>
#include <mirrorchain/cqed.hpp>
#include <mirrorchain/gaussian.hpp>
#include <mirrorchain/grape.hpp>
#include <mirrorchain/io.hpp>
#include <mirrorchain/tracker.hpp>
#include <mirrorchain/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace mc = mirrorchain;
using mc::io::Json;
using mc::io::sig12;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kModuleError = 3, kNumericalError = 4 };

/// A resolved option combination that no module call can satisfy.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string &path, const Json &doc) {
    if (path.empty() || path == "-") {
        std::cout << mc::io::dump(doc);
    } else {
        mc::io::write_text_file(path, mc::io::dump(doc));
    }
}

Json load_config_json(const std::string &path) {
    try {
        return mc::io::read_json_file(path);
    } catch (const mc::InvalidArgument &e) {
        throw ConfigError(e.what());
    }
}

// ---------------------------------------------------------------- mirror

struct MirrorOpts {
    int d = 3;
    int n = 4;
    int sign = 2;
    std::string input = "random";
    std::uint64_t seed = 7;
    std::vector<int> basis;
    std::string output;

    [[nodiscard]] Json to_json() const {
        return {{"d", d}, {"N", n}, {"sign", sign}, {"input", input}, {"seed", seed}, {"basis", basis}, {"output", output}};
    }
};

int run_mirror(const MirrorOpts &o) {
    std::mt19937_64 rng(o.seed);
    Json input_spec{{"kind", o.input}, {"seed", o.seed}};
    std::optional<mc::chain::DenseState> state;
    if (o.input == "basis") {
        std::vector<int> digits = o.basis;
        if (digits.empty()) {
            digits.assign(static_cast<std::size_t>(o.n), 0);
            digits[0] = 1 % o.d;
        }
        if (static_cast<int>(digits.size()) != o.n) {
            throw ConfigError("--basis needs exactly N digits");
        }
        for (int v : digits) {
            if (v < 0 || v >= o.d) {
                throw ConfigError("--basis digits must lie in 0..d-1");
            }
        }
        input_spec["basis"] = digits;
        state = mc::chain::DenseState::basis(o.d, o.n, digits);
    } else if (o.input == "figure2a") {
        state = mc::chain::relay_input_state(mc::chain::random_vector(o.d, rng), o.n);
    } else {
        state = mc::chain::random_state(o.d, o.n, rng);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto out = mc::chain::run_mirror_protocol(*state, o.sign);
    const auto report = mc::chain::mirror_fidelity(*state, out);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(o.output, Json{{"d", o.d},
                        {"N", o.n},
                        {"sign", o.sign},
                        {"input_spec", input_spec},
                        {"fidelity", sig12(report.fidelity)},
                        {"global_phase", mc::io::complex_json(report.phase)},
                        {"max_deviation", sig12(report.max_deviation)},
                        {"runtime_ms", sig12(ms)},
                        {"config", o.to_json()}});
    return kOk;
}

// ----------------------------------------------------------------- track

struct TrackOpts {
    std::string mode = "qudit";
    int d = 3;
    int n = 4;
    int site = 1;
    double xexp = 1.0;
    double zexp = 0.0;
    int rounds = -1;
    std::string output;

    [[nodiscard]] Json to_json() const {
        return {{"mode", mode}, {"d", d},       {"N", n},           {"site", site}, {"xexp", sig12(xexp)},
                {"zexp", sig12(zexp)}, {"rounds", rounds}, {"output", output}};
    }
};

int run_track(const TrackOpts &o) {
    if (o.site < 1 || o.site > o.n) {
        throw ConfigError("--site must lie in 1..N");
    }
    const int rounds = o.rounds < 0 ? o.n + 1 : o.rounds;
    Json doc;
    if (o.mode == "qudit") {
        if (o.xexp != std::floor(o.xexp) || o.zexp != std::floor(o.zexp)) {
            throw ConfigError("qudit mode needs integer --xexp and --zexp");
        }
        const auto spec = mc::qudit_chain(o.d, o.n);
        const auto w = mc::QuditWord::single(spec.field, o.site, static_cast<std::int64_t>(o.xexp),
                                             static_cast<std::int64_t>(o.zexp));
        const auto t = mc::mirror_trajectory(w, spec, rounds);
        doc = mc::io::trajectory_json(t);
        if (rounds == o.n + 1) {
            doc["after_final_fourier_squared"] = mc::io::word_factors_json(mc::conjugate_fourier_squared(t.steps.back().word));
        }
    } else {
        const auto spec = mc::cv_chain(o.n);
        const auto w = mc::CvWord::single(spec.field, o.site, o.xexp, o.zexp);
        const auto t = mc::mirror_trajectory(w, spec, rounds);
        doc = mc::io::trajectory_json(t);
        if (rounds == o.n + 1) {
            doc["after_final_fourier_squared"] = mc::io::word_factors_json(mc::conjugate_fourier_squared(t.steps.back().word));
        }
    }
    doc["config"] = o.to_json();
    emit(o.output, doc);
    return kOk;
}

// -------------------------------------------------------------------- cv

struct CvOpts {
    int n = 4;
    std::string state_file;
    std::string output;

    [[nodiscard]] Json to_json() const { return {{"N", n}, {"state_file", state_file}, {"output", output}}; }
};

int run_cv(const CvOpts &o, bool n_given) {
    std::optional<mc::cv::GaussianState> in;
    if (!o.state_file.empty()) {
        try {
            in = mc::io::gaussian_from_json(load_config_json(o.state_file));
        } catch (const mc::InvalidArgument &e) {
            throw ConfigError(e.what());
        }
        if (n_given && in->n_modes != o.n) {
            throw ConfigError("--n disagrees with N in the state file");
        }
    } else {
        in = mc::cv::GaussianState::coherent(o.n, 1, {1.0, 0.0});
    }
    const auto out = mc::cv::run_cv_mirror(*in);
    auto cfg = o.to_json();
    cfg["N"] = in->n_modes;
    emit(o.output, Json{{"N", in->n_modes},
                        {"before", mc::io::gaussian_json(*in)},
                        {"after", mc::io::gaussian_json(out)},
                        {"deviation", sig12(mc::cv::mirror_deviation(*in, out))},
                        {"uncertainty_margin_after", sig12(out.uncertainty_margin())},
                        {"config", cfg}});
    return kOk;
}

// ------------------------------------------------------------------ cqed

struct CqedOpts {
    std::string params_file;
    double tmax = 100.0;
    int nfock = 10;
    bool compare = false;
    std::string model = "effective";
    int points = 101;
    std::string out_prefix = "cqed";
    std::string method = "taylor";
    std::string box = "ground";
    double alpha = 1.0;
    double beta = 0.1;
    bool harmonize = false;

    [[nodiscard]] Json to_json() const {
        return {{"params_file", params_file}, {"tmax_periods", sig12(tmax)}, {"nfock", nfock},
                {"compare", compare},         {"model", model},              {"points", points},
                {"out_prefix", out_prefix},   {"method", method},            {"box", box},
                {"alpha", sig12(alpha)},      {"beta", sig12(beta)},         {"harmonize", harmonize}};
    }
};

void write_csv(const std::string &path, const std::function<void(std::ostream &)> &body) {
    std::ostringstream os;
    body(os);
    mc::io::write_text_file(path, os.str());
}

int run_cqed(const CqedOpts &o) {
    mc::cqed::DeviceParams p;
    if (!o.params_file.empty()) {
        try {
            p = mc::io::device_from_json(load_config_json(o.params_file));
        } catch (const mc::InvalidArgument &e) {
            throw ConfigError(e.what());
        }
    }
    mc::cqed::ComparisonOptions copts;
    copts.alpha = o.alpha;
    copts.beta = o.beta;
    copts.box = o.box == "excited" ? mc::cqed::BoxState::Excited : mc::cqed::BoxState::Ground;
    copts.method = o.method == "rk4" ? mc::lindblad::Method::RK4 : mc::lindblad::Method::Taylor;
    copts.effective.harmonize = o.harmonize;
    const auto grid = mc::cqed::period_grid(p, o.tmax, o.points);
    const auto eff = mc::cqed::effective_params(p);
    Json header{{"device", mc::io::device_json(p)},
                {"chi", sig12(eff.chi)},
                {"eta", sig12(eff.eta)},
                {"nfock", o.nfock},
                {"quadrature", "s = (a + a^dag) +- (b + b^dag)"},
                {"units", "rad/ns, ns"}};
    Json summary{{"device", mc::io::device_json(p)}, {"chi", sig12(eff.chi)}, {"eta", sig12(eff.eta)}};
    Json files = Json::array();

    auto write_samples = [&](const std::string &name, const std::vector<mc::cqed::Sample> &samples) {
        const std::string path = o.out_prefix + "_" + name + ".csv";
        Json h = header;
        h["model"] = name;
        write_csv(path, [&](std::ostream &os) { mc::io::write_samples_csv(os, h, samples); });
        files.push_back(path);
        double top = 0.0;
        for (const auto &s : samples) {
            top = std::max(top, s.top_population);
        }
        summary["max_top_population_" + name] = sig12(top);
    };

    if (o.compare) {
        const auto c = mc::cqed::compare_reduced_dynamics(p, grid, o.nfock, copts);
        write_samples("full", c.full);
        write_samples("effective", c.eff);
        write_samples("hamiltonian", c.ham);
        const std::string dpath = o.out_prefix + "_distances.csv";
        write_csv(dpath, [&](std::ostream &os) { mc::io::write_distances_csv(os, header, c.distances); });
        files.push_back(dpath);
        double max_fe = 0.0;
        for (const auto &d : c.distances) {
            max_fe = std::max(max_fe, d.full_eff);
        }
        summary["final_distances"] = {{"full_eff", sig12(c.distances.back().full_eff)},
                                      {"full_ham", sig12(c.distances.back().full_ham)},
                                      {"eff_ham", sig12(c.distances.back().eff_ham)}};
        summary["max_full_eff"] = sig12(max_fe);
        summary["min_eigenvalue"] = sig12(c.min_eigenvalue);
    } else {
        const auto kind = o.model == "full"          ? mc::cqed::ModelKind::Full
                          : o.model == "hamiltonian" ? mc::cqed::ModelKind::Hamiltonian
                                                     : mc::cqed::ModelKind::Effective;
        const auto states = mc::cqed::reduced_trajectory(p, grid, o.nfock, kind, copts);
        write_samples(mc::cqed::model_name(kind), mc::cqed::measure(states, grid, o.nfock));
    }
    summary["files"] = files;
    summary["config"] = o.to_json();
    std::cout << mc::io::dump(summary);
    return kOk;
}

// ----------------------------------------------------------------- grape

struct GrapeOpts {
    int nfock = 20;
    int slices = 500;
    double cycles = 50.0;
    double cmax = 1.0;
    int seeds = 5;
    std::uint64_t seed = 1;
    double epsilon = 1e-3;
    double angle = 0.1;
    int max_iter = 1000;
    double tol = 1e-4;
    double init_amplitude = 0.2;
    bool assemble = false;
    std::string out_prefix = "grape";

    [[nodiscard]] Json to_json() const {
        return {{"nfock", nfock},       {"slices", slices},        {"cycles", sig12(cycles)},
                {"cmax", sig12(cmax)},  {"seeds", seeds},          {"seed", seed},
                {"epsilon", sig12(epsilon)}, {"angle", sig12(angle)}, {"max_iter", max_iter},
                {"tol", sig12(tol)},    {"init_amplitude", sig12(init_amplitude)}, {"assemble", assemble},
                {"out_prefix", out_prefix}, {"quadrature", "X = (a + a^dag)/sqrt2"}};
    }
};

Json multistart_json(const mc::grape::MultiStart &ms) {
    Json runs = Json::array();
    for (std::size_t i = 0; i < ms.runs.size(); ++i) {
        runs.push_back({{"seed", ms.seeds[i]},
                        {"fidelity", sig12(ms.runs[i].best_fidelity)},
                        {"iterations", ms.runs[i].iterations.back().first},
                        {"converged", ms.runs[i].converged},
                        {"message", ms.runs[i].message}});
    }
    Json trace = Json::array();
    for (const auto &[it, f] : ms.best_run().iterations) {
        trace.push_back({it, sig12(f)});
    }
    return {{"best_seed", ms.seeds[ms.best]},
            {"best_fidelity", sig12(ms.best_run().best_fidelity)},
            {"runs", runs},
            {"iterations", trace}};
}

int run_grape(const GrapeOpts &o) {
    const auto prob = mc::grape::squeeze_problem(o.nfock, o.angle, o.cycles, o.slices, o.cmax, o.epsilon);
    mc::grape::OptimizeOptions opt;
    opt.max_iter = o.max_iter;
    opt.tol = o.tol;
    const auto ms = mc::grape::optimize_multistart(prob, o.seeds, o.seed, opt, o.init_amplitude);
    const std::string pulse_path = o.out_prefix + "_pulse.csv";
    write_csv(pulse_path, [&](std::ostream &os) { mc::io::write_pulse_csv(os, ms.best_run().final_pulse); });

    std::vector<std::uint64_t> seeds(ms.seeds.begin(), ms.seeds.end());
    Json record{{"n_fock", o.nfock},
                {"n_slices", o.slices},
                {"duration", sig12(prob.duration)},
                {"epsilon", sig12(o.epsilon)},
                {"seeds", seeds},
                {"best_fidelity", sig12(ms.best_run().best_fidelity)},
                {"iterations", ms.best_run().iterations.back().first},
                {"optimization", multistart_json(ms)}};
    Json files = Json::array({pulse_path});
    if (o.assemble) {
        auto prob_b = prob;
        prob_b.target = prob.target.conjugate();
        const auto ms_b = mc::grape::optimize_multistart(prob_b, o.seeds, o.seed, opt, o.init_amplitude);
        const std::string pb = o.out_prefix + "_pulse_b.csv";
        write_csv(pb, [&](std::ostream &os) { mc::io::write_pulse_csv(os, ms_b.best_run().final_pulse); });
        files.push_back(pb);
        const auto sched =
            mc::grape::assemble_cphase(prob, ms.best_run().final_pulse, ms_b.best_run().final_pulse, 10);
        Json rot = Json::array();
        for (const auto &[mode, theta] : sched.absorbed_rotations) {
            rot.push_back({{"mode", std::string(1, mode)}, {"theta", sig12(theta)}});
        }
        record["b_factor_optimization"] = multistart_json(ms_b);
        record["cphase"] = {{"segments", sched.segments.size()},
                            {"total_cycles", sig12(sched.total_cycles)},
                            {"absorbed_rotations", rot},
                            {"fidelity_a_10x", sig12(sched.fidelity_a)},
                            {"fidelity_b_10x", sig12(sched.fidelity_b)},
                            {"peak_c1", sig12(sched.peak_c1)},
                            {"peak_c2", sig12(sched.peak_c2)},
                            {"cpw_detuning_fraction", sig12(sched.cpw_detuning_fraction)},
                            {"cpb_detuning_fraction", sig12(sched.cpb_detuning_fraction)}};
    }
    record["files"] = files;
    record["config"] = o.to_json();
    const std::string run_path = o.out_prefix + "_run.json";
    mc::io::write_text_file(run_path, mc::io::dump(record));
    std::cout << mc::io::dump(record);
    return kOk;
}

// ------------------------------------------------------------ verify-all

struct VerifyOpts {
    std::uint64_t seed = 7;
    std::string output;
};

int run_verify(const VerifyOpts &o) {
    const auto report = mc::verify::verify_all(o.seed);
    Json doc = mc::io::report_json(report);
    doc["seed"] = o.seed;
    emit(o.output, doc);
    for (const auto &c : report.checks) {
        if (!c.passed) {
            std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    return report.ok() ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"mirrorchain: simulate and verify global-pulse mirror transport on qudit and CV chains"};
    app.set_config("--config", "", "INI/TOML file; options of a subcommand go in a [subcommand] section");
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "Worker cap (overrides MIRRORCHAIN_JOBS)")->check(CLI::PositiveNumber);

    MirrorOpts mo;
    auto *mirror = app.add_subcommand("mirror", "Run the dense mirror circuit on one chain state");
    mirror->add_option("--d", mo.d, "Qudit dimension")->check(CLI::Range(2, 64))->capture_default_str();
    mirror->add_option("--n", mo.n, "Number of sites")->check(CLI::Range(1, 64))->capture_default_str();
    mirror->add_option("--sign", mo.sign, "Final Fourier power")->check(CLI::IsMember({2, -2}))->capture_default_str();
    auto *mirror_input = mirror->add_option("--input", mo.input, "Input state")->check(CLI::IsMember({"basis", "random", "figure2a"}))
        ->capture_default_str();
    mirror->add_option("--seed", mo.seed, "RNG seed")->capture_default_str();
    auto *mirror_basis = mirror->add_option("--basis", mo.basis, "Basis digits for --input basis (site 1 first)")->delimiter(',');
    mirror->add_option("--output", mo.output, "JSON output path (default stdout)");

    TrackOpts to;
    auto *track = app.add_subcommand("track", "Heisenberg trajectory of one X^x Z^z factor");
    track->add_option("--mode", to.mode, "qudit or cv")->check(CLI::IsMember({"qudit", "cv"}))->capture_default_str();
    track->add_option("--d", to.d, "Qudit dimension")->check(CLI::Range(2, 1 << 20))->capture_default_str();
    track->add_option("--n", to.n, "Number of sites")->check(CLI::Range(1, 1 << 20))->capture_default_str();
    track->add_option("--site", to.site, "Site of the initial factor")->capture_default_str();
    track->add_option("--xexp", to.xexp, "X exponent")->capture_default_str();
    track->add_option("--zexp", to.zexp, "Z exponent")->capture_default_str();
    track->add_option("--rounds", to.rounds, "Rounds (default N+1)")->check(CLI::Range(-1, 1 << 20));
    track->add_option("--output", to.output, "JSON output path (default stdout)");

    CvOpts co;
    auto *cv = app.add_subcommand("cv", "Gaussian mirror run on an N-mode state");
    auto *cv_n = cv->add_option("--n", co.n, "Number of modes")->check(CLI::Range(1, 4096))->capture_default_str();
    cv->add_option("--state-file", co.state_file, "JSON {N, mean, cov}; default: coherent alpha=1 on mode 1");
    cv->add_option("--output", co.output, "JSON output path (default stdout)");

    CqedOpts qo;
    auto *cqed = app.add_subcommand("cqed", "Full / effective / Hamiltonian-only resonator dynamics");
    cqed->add_option("--params-file", qo.params_file, "JSON device parameters (missing keys keep defaults)");
    cqed->add_option("--tmax", qo.tmax, "Duration in periods 2 pi / omega_a")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cqed->add_option("--nfock", qo.nfock, "Fock levels per mode")->check(CLI::Range(2, 64))->capture_default_str();
    cqed->add_flag("--compare", qo.compare, "Run all three models and write trace distances");
    cqed->add_option("--model", qo.model, "Model without --compare")
        ->check(CLI::IsMember({"full", "effective", "hamiltonian"}))
        ->capture_default_str();
    cqed->add_option("--points", qo.points, "Output grid points")->check(CLI::Range(2, 1000000))->capture_default_str();
    cqed->add_option("--out-prefix", qo.out_prefix, "CSV path prefix")->capture_default_str();
    cqed->add_option("--method", qo.method, "Integrator")->check(CLI::IsMember({"taylor", "rk4"}))->capture_default_str();
    cqed->add_option("--box", qo.box, "Initial box state")->check(CLI::IsMember({"ground", "excited"}))
        ->capture_default_str();
    cqed->add_option("--alpha", qo.alpha, "Coherent amplitude of mode a")->capture_default_str();
    cqed->add_option("--beta", qo.beta, "Coherent amplitude of mode b")->capture_default_str();
    cqed->add_flag("--harmonize", qo.harmonize, "Use kappa/2 mode dissipators in the effective model");

    GrapeOpts go;
    auto *grape = app.add_subcommand("grape", "Optimize a pulse for exp(i angle X^2)");
    grape->add_option("--nfock", go.nfock, "Fock levels")->check(CLI::Range(2, 400))->capture_default_str();
    grape->add_option("--slices", go.slices, "Piecewise-constant slices")->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    grape->add_option("--cycles", go.cycles, "Duration in oscillator cycles")->check(CLI::PositiveNumber)
        ->capture_default_str();
    grape->add_option("--cmax", go.cmax, "Control bound")->check(CLI::NonNegativeNumber)->capture_default_str();
    grape->add_option("--seeds", go.seeds, "Number of random starts")->check(CLI::Range(1, 1000))->capture_default_str();
    grape->add_option("--seed", go.seed, "First seed")->capture_default_str();
    grape->add_option("--epsilon", go.epsilon, "Kerr ratio 2 chi / omega")->capture_default_str();
    grape->add_option("--angle", go.angle, "Target angle in exp(i angle X^2)")->capture_default_str();
    grape->add_option("--max-iter", go.max_iter, "Iterations per start")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    grape->add_option("--tol", go.tol, "Stop once 1 - F <= tol")->check(CLI::NonNegativeNumber)->capture_default_str();
    grape->add_option("--init-amplitude", go.init_amplitude, "Random start amplitude (fraction of cmax)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    grape->add_flag("--assemble", go.assemble, "Also optimize the b' factor and assemble the CPHASE schedule");
    grape->add_option("--out-prefix", go.out_prefix, "Output path prefix")->capture_default_str();

    VerifyOpts vo;
    auto *verify = app.add_subcommand("verify-all", "Run the invariant suite; nonzero exit on any failure");
    verify->add_option("--seed", vo.seed, "RNG seed")->capture_default_str();
    verify->add_option("--output", vo.output, "JSON report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }
    if (jobs > 0) {
        setenv("MIRRORCHAIN_JOBS", std::to_string(jobs).c_str(), 1);
    }

    try {
        if (mirror->parsed()) {
            if (mirror_basis->count() > 0) {
                if (mirror_input->count() > 0 && mo.input != "basis") {
                    throw ConfigError("--basis only applies to --input basis");
                }
                mo.input = "basis";
            }
            return run_mirror(mo);
        }
        if (track->parsed()) {
            return run_track(to);
        }
        if (cv->parsed()) {
            return run_cv(co, cv_n->count() > 0);
        }
        if (cqed->parsed()) {
            return run_cqed(qo);
        }
        if (grape->parsed()) {
            return run_grape(go);
        }
        if (verify->parsed()) {
            return run_verify(vo);
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const mc::NumericalError &e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kModuleError;
    }
    return kConfigError;
}
