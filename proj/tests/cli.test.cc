// Copyright 2026 The wernet Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "wernet/cli.h"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string &args) {
    std::string cmd = std::string(WERNET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return {-1, ""};
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path scratch_dir(const std::string &name) {
    fs::path d = fs::temp_directory_path() / ("wernet_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

bool contains(const std::string &hay, const std::string &needle) {
    return hay.find(needle) != std::string::npos;
}

TEST(ParseGrid, Forms) {
    EXPECT_EQ(wernet::parse_grid("0.5"), (std::vector<double>{0.5}));
    EXPECT_EQ(wernet::parse_grid("1,2,3"), (std::vector<double>{1, 2, 3}));
    auto r = wernet::parse_grid("0.01:0.05:0.01");
    ASSERT_EQ(r.size(), 5u);
    EXPECT_NEAR(r.back(), 0.05, 1e-15);
    EXPECT_EQ(wernet::parse_grid("1e6"), (std::vector<double>{1e6}));
    EXPECT_THROW(wernet::parse_grid(""), std::invalid_argument);
    EXPECT_THROW(wernet::parse_grid("1,,2"), std::invalid_argument);
    EXPECT_THROW(wernet::parse_grid("abc"), std::invalid_argument);
    EXPECT_THROW(wernet::parse_grid("0.1x"), std::invalid_argument);
    EXPECT_THROW(wernet::parse_grid("1:0:0.1"), std::invalid_argument);
    EXPECT_THROW(wernet::parse_grid("0:1:0"), std::invalid_argument);
    EXPECT_THROW(wernet::parse_grid("0:1"), std::invalid_argument);
}

TEST(Cli, InProcessMatchesBinary) {
    std::ostringstream out, err;
    int code = wernet::run_cli({"analyze", "--spp-extremals"}, out, err);
    EXPECT_EQ(code, wernet::kExitOk);
    EXPECT_EQ(out.str(), run("analyze --spp-extremals").out);
}

TEST(Cli, AnalyzeGoldenValues) {
    Outcome e = run("analyze --spp-extremals");
    ASSERT_EQ(e.code, 0);
    EXPECT_TRUE(contains(e.out, "max_gain,0.0277777777778"));
    EXPECT_TRUE(contains(e.out, "y_lo_min,0.309016994375"));
    EXPECT_TRUE(contains(e.out, "y_hi_max,0.5\n"));
    EXPECT_TRUE(contains(e.out, "b_max,0.14031399559"));
    EXPECT_TRUE(contains(e.out, "# command: analyze\n"));

    Outcome m = run("analyze --multipur --alpha 1 --n inf");
    ASSERT_EQ(m.code, 0);
    EXPECT_TRUE(contains(m.out, "inf,1,0.19245008973,"));

    Outcome n = run("analyze --noisy --p2 1 --eta 1");
    ASSERT_EQ(n.code, 0);
    EXPECT_TRUE(contains(n.out, "1,1,1,0,0,1,0.0277777777778,1\n"));
}

TEST(Cli, CriticalA) {
    Outcome r = run("critical --A --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "\"A\",\n      6.57035466211"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, wernet::kExitFlagError);
    EXPECT_EQ(run("frobnicate").code, wernet::kExitFlagError);
    EXPECT_EQ(run("analyze --bogus").code, wernet::kExitFlagError);
    EXPECT_EQ(run("analyze").code, wernet::kExitFlagError);
    EXPECT_EQ(run("analyze --spp-extremals --format xml").code, wernet::kExitFlagError);
    EXPECT_EQ(run("simulate --fig nope").code, wernet::kExitFlagError);
    EXPECT_EQ(run("simulate --fig sigma --p 0.1:0.05:0.01").code, wernet::kExitFlagError);
    EXPECT_EQ(run("simulate --fig sigma --trials 0").code, wernet::kExitFlagError);
    EXPECT_EQ(run("analyze --multipur --alpha 1e-10 --n inf").code, wernet::kExitNumericalError);
    EXPECT_EQ(run("--help").code, wernet::kExitOk);
}

TEST(Cli, SimulateIsByteIdentical) {
    const std::string args = "simulate --fig eta322 --N 60 --p 0.02,0.05 --trials 40 --seed 9";
    Outcome a = run(args);
    Outcome b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run("simulate --fig eta322 --N 60 --p 0.02,0.05 --trials 40 --seed 10").out);
    EXPECT_EQ(a.out, run(args + " --threads 3").out);
}

TEST(Cli, ManifestAndReplay) {
    fs::path dir = scratch_dir("replay");
    Outcome w = run("simulate --fig sigma --N 50 --p 0.05 --trials 30 --seed 4 --out " + dir.string());
    ASSERT_EQ(w.code, 0);
    ASSERT_TRUE(fs::exists(dir / "sigma.csv"));
    ASSERT_TRUE(fs::exists(dir / "manifest.json"));
    std::string manifest = slurp(dir / "manifest.json");
    EXPECT_TRUE(contains(manifest, "\"seed\": 4"));
    EXPECT_FALSE(contains(manifest, "--out"));
    EXPECT_TRUE(contains(slurp(dir / "sigma.csv"), "N,p,L,mean,stderr,n_trials,seed,analytic,reliable\n"));

    Outcome ok = run("replay " + (dir / "manifest.json").string() + " --out " + (dir / "again").string());
    EXPECT_EQ(ok.code, wernet::kExitOk);
    EXPECT_TRUE(contains(ok.out, "match"));
    EXPECT_EQ(slurp(dir / "sigma.csv"), slurp(dir / "again" / "sigma.csv"));

    // Tamper with the recorded checksum.
    std::string bad = manifest;
    size_t at = bad.find("\"crc32\": \"") + 10;
    bad[at] = bad[at] == '0' ? '1' : '0';
    std::ofstream(dir / "tampered.json", std::ios::binary) << bad;
    Outcome mismatch = run("replay " + (dir / "tampered.json").string() + " --out " + (dir / "third").string());
    EXPECT_EQ(mismatch.code, wernet::kExitReplayMismatch);
    EXPECT_TRUE(contains(mismatch.out, "MISMATCH"));

    EXPECT_EQ(run("replay " + (dir / "missing.json").string()).code, wernet::kExitFlagError);
    fs::remove_all(dir);
}

TEST(Cli, CriticalEtaOverG) {
    Outcome r = run("simulate --critical --fig eta-over-g --N 50 --trials 20 --Lmax 5");
    ASSERT_EQ(r.code, 0);
    // (3,2),(4,2),(4,3),(5,2),(5,3),(5,4) at one N.
    std::istringstream in(r.out);
    int rows = 0;
    for (std::string line; std::getline(in, line);) rows += !line.empty() && line[0] != '#';
    EXPECT_EQ(rows, 1 + 6);
    EXPECT_EQ(run("simulate --critical --fig eta-over-g --p 0.1").code, wernet::kExitFlagError);
}

}  // namespace
