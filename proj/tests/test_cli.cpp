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

// Runs the built mirrorchain binary end to end.

#include <mirrorchain/io.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using mirrorchain::io::Json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args) {
    const std::string cmd = std::string(MIRRORCHAIN_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mirrorchain_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    [[nodiscard]] std::string path(const std::string &name) const { return (dir_ / name).string(); }
    void write(const std::string &name, const std::string &text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, MirrorRandomSeedSeven) {
    const auto r = run("mirror --d 3 --n 4 --input random --seed 7");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_NEAR(j.at("fidelity").get<double>(), 1.0, 1e-10);
    EXPECT_LT(j.at("max_deviation").get<double>(), 1e-10);
    for (const char *key : {"d", "N", "sign", "input_spec", "global_phase", "runtime_ms", "config"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j.at("config").at("seed"), 7);
    EXPECT_EQ(j.at("input_spec").at("kind"), "random");
}

TEST_F(Cli, MirrorIsReproducibleApartFromTiming) {
    auto a = Json::parse(run("mirror --d 2 --n 5 --input figure2a --seed 3 --sign -2").out);
    auto b = Json::parse(run("mirror --d 2 --n 5 --input figure2a --seed 3 --sign -2").out);
    a.erase("runtime_ms");
    b.erase("runtime_ms");
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a.at("sign"), -2);
}

TEST_F(Cli, MirrorBasisDigits) {
    const auto j = Json::parse(run("mirror --d 3 --n 3 --basis 1,2,0").out);
    EXPECT_EQ(j.at("input_spec").at("kind"), "basis");
    EXPECT_NEAR(j.at("fidelity").get<double>(), 1.0, 1e-12);
    EXPECT_EQ(run("mirror --d 3 --n 3 --basis 1,3,0").code, 2);
    EXPECT_EQ(run("mirror --d 3 --n 3 --basis 1,2").code, 2);
    EXPECT_EQ(run("mirror --d 3 --n 3 --input random --basis 1,2,0").code, 2);
}

TEST_F(Cli, TrackQuditTrajectory) {
    const auto r = run("track --mode qudit --d 3 --n 3 --site 1 --xexp 1 --zexp 0");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j.at("rounds"), 4);
    EXPECT_EQ(j.at("steps").size(), 5U);
    const auto &last = j.at("steps").back().at("factors").at(0);
    EXPECT_EQ(last.at("site"), 3);
    EXPECT_EQ(last.at("x_signed"), -1);
    EXPECT_EQ(j.at("after_final_fourier_squared").at(0).at("x_signed"), 1);
    EXPECT_EQ(j.at("config").at("mode"), "qudit");
}

TEST_F(Cli, TrackCvTrajectory) {
    const auto j = Json::parse(run("track --mode cv --n 5 --site 2 --xexp 0.7 --zexp -1.3").out);
    EXPECT_EQ(j.at("mode"), "cv");
    const auto &f = j.at("after_final_fourier_squared").at(0);
    EXPECT_EQ(f.at("site"), 4);
    EXPECT_DOUBLE_EQ(f.at("x_exp").get<double>(), 0.7);
    EXPECT_DOUBLE_EQ(f.at("z_exp").get<double>(), -1.3);
}

TEST_F(Cli, CvDefaultAndStateFile) {
    auto j = Json::parse(run("cv --n 4").out);
    EXPECT_LT(j.at("deviation").get<double>(), 1e-12);
    EXPECT_NEAR(j.at("after").at("mean").at(6).get<double>(), std::sqrt(2.0), 1e-11);

    write("s.json", R"({"N":2,"mean":[1,2,3,4],"cov":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
    j = Json::parse(run("cv --state-file " + path("s.json")).out);
    EXPECT_EQ(j.at("N"), 2);
    EXPECT_EQ(j.at("after").at("mean"), Json::parse("[3.0,4.0,1.0,2.0]"));
    EXPECT_EQ(run("cv --n 3 --state-file " + path("s.json")).code, 2);
    write("bad.json", R"({"N":2,"mean":[1,2]})");
    EXPECT_EQ(run("cv --state-file " + path("bad.json")).code, 2);
    EXPECT_EQ(run("cv --state-file " + path("missing.json")).code, 2);
}

TEST_F(Cli, CqedCompareWritesDeterministicCsv) {
    const std::string args = "cqed --nfock 4 --tmax 1 --points 4 --compare --out-prefix ";
    const auto a = run(args + path("a"));
    const auto b = run(args + path("b"));
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    for (const char *kind : {"full", "effective", "hamiltonian", "distances"}) {
        const auto fa = slurp(path(std::string("a_") + kind + ".csv"));
        EXPECT_FALSE(fa.empty()) << kind;
        EXPECT_EQ(fa, slurp(path(std::string("b_") + kind + ".csv"))) << kind;
        EXPECT_EQ(fa.rfind("# {\"device\"", 0), 0U) << kind;
    }
    const auto j = Json::parse(a.out);
    EXPECT_EQ(j.at("files").size(), 4U);
    EXPECT_EQ(j.at("config").at("nfock"), 4);
    EXPECT_EQ(j.at("device").at("omega0"), 15.0);
}

TEST_F(Cli, CqedSingleModelAndParamsFile) {
    write("p.json", R"({"gamma": 0.03, "sign": 1})");
    const auto r = run("cqed --nfock 3 --tmax 0.5 --points 3 --model full --params-file " + path("p.json") +
                       " --out-prefix " + path("x"));
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j.at("device").at("gamma"), 0.03);
    EXPECT_EQ(j.at("device").at("sign"), 1);
    EXPECT_TRUE(fs::exists(path("x_full.csv")));
    EXPECT_FALSE(fs::exists(path("x_effective.csv")));
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("mirror --d 1").code, 2);
    EXPECT_EQ(run("mirror --bogus").code, 2);
    EXPECT_EQ(run("track --n 3 --site 4").code, 2);
    EXPECT_EQ(run("track --mode qudit --xexp 0.5").code, 2);
    // 2^13 exceeds the default dense-state cap: the module rejects it.
    EXPECT_EQ(run("mirror --d 2 --n 13").code, 3);
    write("neg.json", R"({"kappa_a": -1})");
    EXPECT_EQ(run("cqed --params-file " + path("neg.json")).code, 2);
    write("split.json", R"({"g_b": 0.1})");
    EXPECT_EQ(run("cqed --nfock 3 --tmax 0.1 --points 2 --model effective --params-file " + path("split.json") +
                  " --out-prefix " + path("s"))
                  .code,
              3);
    // A box frequency far beyond the series step overwhelms the Taylor integrator.
    write("stiff.json", R"({"omega0": 20000})");
    EXPECT_EQ(run("cqed --nfock 3 --tmax 0.1 --points 2 --model full --params-file " + path("stiff.json") +
                  " --out-prefix " + path("t"))
                  .code,
              4);
}

TEST_F(Cli, ConfigFileSectionsAndFlagPrecedence) {
    write("c.toml", "[mirror]\nd = 5\nn = 3\ninput = \"basis\"\nbasis = [1, 2, 3]\n");
    auto j = Json::parse(run("--config " + path("c.toml") + " mirror").out);
    EXPECT_EQ(j.at("d"), 5);
    EXPECT_EQ(j.at("N"), 3);
    EXPECT_EQ(j.at("config").at("basis"), Json::parse("[1,2,3]"));
    j = Json::parse(run("--config " + path("c.toml") + " mirror --d 7").out);
    EXPECT_EQ(j.at("d"), 7);
    write("bad.toml", "[mirror]\nd = \"three\"\n");
    EXPECT_EQ(run("--config " + path("bad.toml") + " mirror").code, 2);
}

TEST_F(Cli, GrapeSmallRunRecord) {
    const std::string args = "grape --nfock 6 --slices 40 --cycles 4 --seeds 2 --seed 3 --max-iter 30 --out-prefix ";
    const auto a = run(args + path("a"));
    const auto b = run("--jobs 1 " + args + path("b"));
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(slurp(path("a_pulse.csv")), slurp(path("b_pulse.csv")));
    const auto j = Json::parse(slurp(path("a_run.json")));
    for (const char *key : {"n_fock", "n_slices", "duration", "epsilon", "seeds", "best_fidelity", "iterations", "config"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j.at("seeds"), Json::parse("[3,4]"));
    EXPECT_GT(j.at("best_fidelity").get<double>(), 0.9);
    std::istringstream csv(slurp(path("a_pulse.csv")));
    std::string line;
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 41);
}
