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

#include "wernet/monte_carlo.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace wernet {
namespace {

McConfig sigma_config(uint64_t seed, int64_t trials) {
    return {trials, seed, 60, 0.05, estimators::SigmaL{{1, 2, 3, 4}}};
}

TEST(MonteCarlo, EstimatorMetadata) {
    EXPECT_EQ(estimator_name(estimators::EdgeDensity{}), "sigma_1");
    EXPECT_EQ(estimator_name(estimators::EtaCount{{{3, 2, 2}}}), "eta_count");
    EXPECT_EQ(estimator_width(estimators::SigmaL{{1, 2, 3}}), 3u);
    EXPECT_EQ(estimator_width(estimators::NetworkGain{{0.8, 0.9}, 7}), 2u);
}

TEST(MonteCarlo, Validation) {
    EXPECT_THROW(run({0, 1, 50, 0.1, estimators::EdgeDensity{}}), std::invalid_argument);
    EXPECT_THROW(run({10, 1, 1, 0.1, estimators::EdgeDensity{}}), std::invalid_argument);
    EXPECT_THROW(run({10, 1, 50, 1.1, estimators::EdgeDensity{}}), std::invalid_argument);
    EXPECT_THROW(run({10, 1, 50, 0.1, estimators::SigmaL{{}}}), std::invalid_argument);
}

TEST(MonteCarlo, TrialStreamsDependOnlyOnSeedAndTrial) {
    McConfig c = sigma_config(17, 10);
    EXPECT_EQ(trial_graph(c, 4).graph, trial_graph(c, 4).graph);
    EXPECT_NE(trial_graph(c, 4).graph, trial_graph(c, 5).graph);
    McConfig other = sigma_config(18, 10);
    EXPECT_NE(trial_graph(c, 4).graph, trial_graph(other, 4).graph);
    // High and low words both matter.
    EXPECT_NE(trial_engine(1, 0)(), trial_engine(1ull << 32 | 1, 0)());
    EXPECT_NE(trial_engine(1, 0)(), trial_engine(1, 1ull << 32)());
}

TEST(MonteCarlo, Deterministic) {
    auto a = run(sigma_config(3, 50));
    auto b = run(sigma_config(3, 50));
    ASSERT_EQ(a.size(), 4u);
    for (size_t k = 0; k < a.size(); k++) {
        EXPECT_EQ(a[k].mean, b[k].mean);
        EXPECT_EQ(a[k].std_error, b[k].std_error);
    }
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults) {
    McConfig c{64, 11, 80, 0.04, estimators::EtaExists{{{3, 2, 2}, {4, 2, 3}, {4, 3, 3}}}};
    auto serial = run(c, 1);
    for (int threads : {2, 3, 8, 0}) {
        auto par = run(c, threads);
        for (size_t k = 0; k < serial.size(); k++) {
            EXPECT_EQ(par[k].mean, serial[k].mean) << threads;
            EXPECT_EQ(par[k].std_error, serial[k].std_error) << threads;
        }
    }
}

TEST(MonteCarlo, MeanAndStdErrorByHand) {
    McConfig c = sigma_config(5, 40);
    std::vector<std::vector<double>> per_trial;
    for (int64_t t = 0; t < c.n_trials; t++) {
        std::vector<double> v(4);
        evaluate_estimator(c.estimator, trial_graph(c, t).graph, v);
        per_trial.push_back(v);
    }
    auto est = run(c);
    for (size_t k = 0; k < 4; k++) {
        double mean = 0;
        for (auto &v : per_trial) mean += v[k];
        mean /= c.n_trials;
        double ss = 0;
        for (auto &v : per_trial) ss += (v[k] - mean) * (v[k] - mean);
        double se = std::sqrt(ss / (c.n_trials - 1)) / std::sqrt(double(c.n_trials));
        EXPECT_NEAR(est[k].mean, mean, 1e-15);
        EXPECT_NEAR(est[k].std_error, se, 1e-15);
        EXPECT_EQ(est[k].n_trials, 40);
        EXPECT_TRUE(est[k].reliable);
    }
}

TEST(MonteCarlo, EdgeDensityUnbiased) {
    McConfig c{2000, 21, 50, 0.08, estimators::EdgeDensity{}};
    auto est = run(c);
    EXPECT_LT(std::abs(est[0].mean - 0.08) / est[0].std_error, 4.0);
    double exact_se = std::sqrt(0.08 * 0.92 / (50 * 49 / 2.0)) / std::sqrt(2000.0);
    EXPECT_NEAR(est[0].std_error / exact_se, 1.0, 0.1);
}

TEST(MonteCarlo, StdErrorShrinksAsRootN) {
    auto small = run({400, 31, 60, 0.05, estimators::EdgeDensity{}});
    auto large = run({1600, 32, 60, 0.05, estimators::EdgeDensity{}});
    EXPECT_NEAR(small[0].std_error / large[0].std_error, 2.0, 0.3);
}

TEST(MonteCarlo, ReliabilityFlag) {
    auto few = run({kReliableTrials - 1, 1, 30, 0.1, estimators::EdgeDensity{}});
    EXPECT_FALSE(few[0].reliable);
    auto one = run({1, 1, 30, 0.1, estimators::EdgeDensity{}});
    EXPECT_EQ(one[0].std_error, 0.0);
    EXPECT_FALSE(one[0].reliable);
    auto enough = run({kReliableTrials, 1, 30, 0.1, estimators::EdgeDensity{}});
    EXPECT_TRUE(enough[0].reliable);
}

TEST(MonteCarlo, FailureNamesLowestTrial) {
    McConfig bad{20, 1, 30, 0.1, estimators::NetworkGain{{0.9}, 2}};
    for (int threads : {1, 4}) {
        try {
            run(bad, threads);
            FAIL() << "expected McTrialError";
        } catch (const McTrialError &e) {
            EXPECT_EQ(e.trial, 0);
            EXPECT_NE(std::string(e.what()).find("trial 0"), std::string::npos);
        }
    }
}

TEST(MonteCarlo, SweepContinuesPastFailure) {
    std::vector<McConfig> grid{
        {20, 1, 30, 0.1, estimators::EdgeDensity{}},
        {20, 1, 30, 0.1, estimators::NetworkGain{{0.9}, 2}},
        {20, 2, 30, 0.2, estimators::EdgeDensity{}},
    };
    auto points = sweep(grid);
    ASSERT_EQ(points.size(), 3u);
    EXPECT_TRUE(points[0].estimates.has_value());
    EXPECT_FALSE(points[1].estimates.has_value());
    EXPECT_FALSE(points[1].error.empty());
    EXPECT_TRUE(points[2].estimates.has_value());
    EXPECT_EQ(points[0].estimates->at(0).mean, run(grid[0])[0].mean);
    EXPECT_THROW(sweep(std::vector<McConfig>{}), std::invalid_argument);
}

}  // namespace
}  // namespace wernet
