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

#ifndef WERNET_MONTE_CARLO_H
#define WERNET_MONTE_CARLO_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wernet/er_graph.h"
#include "wernet/errors.h"

namespace wernet {

namespace estimators {

/// Fraction of node pairs joined by an edge.
struct EdgeDensity {};

/// Fraction of node pairs at each distance in `lengths`.
struct SigmaL {
    std::vector<int> lengths;
};

/// Fraction of node pairs whose canonical shortest path admits each geometry,
/// judged by the shortest alternate path at some position.
struct EtaExists {
    std::vector<SppGeometry> geometries;
};

/// Configurations per node pair for each geometry.
struct EtaCount {
    std::vector<SppGeometry> geometries;
};

/// Mean best single-SPP gain per node pair, one column per x.
struct NetworkGain {
    std::vector<double> xs;
    int L_max;
};

}  // namespace estimators

using Estimator = std::variant<
    estimators::EdgeDensity,
    estimators::SigmaL,
    estimators::EtaExists,
    estimators::EtaCount,
    estimators::NetworkGain>;

std::string estimator_name(const Estimator &e);
/// Number of statistics one trial produces.
size_t estimator_width(const Estimator &e);
/// Writes estimator_width(e) values into `out`.
void evaluate_estimator(const Estimator &e, const Graph &g, std::span<double> out);

struct McConfig {
    int64_t n_trials;
    uint64_t seed;
    int N;
    double p;
    Estimator estimator;
};

/// Trials below this count get a flagged error bar.
inline constexpr int64_t kReliableTrials = 30;

struct DensityEstimate {
    double mean;
    /// Sample standard deviation over sqrt(n_trials).
    double std_error;
    int64_t n_trials;
    bool reliable;
};

/// The generator for one trial, seeded from (seed, trial) only.
std::mt19937_64 trial_engine(uint64_t seed, uint64_t trial);

/// The graph drawn for one trial.
ErGraphSample trial_graph(const McConfig &config, uint64_t trial);

/// An estimator failure, tagged with the lowest failing trial.
struct McTrialError : NumericalError {
    McTrialError(int64_t trial, const std::string &what);
    int64_t trial;
};

/// One estimate per estimator column. Results do not depend on `threads`;
/// 0 means hardware concurrency.
std::vector<DensityEstimate> run(const McConfig &config, int threads = 1);

struct SweepPoint {
    std::optional<std::vector<DensityEstimate>> estimates;
    std::string error;
};

/// run over each config in order; a failing point records its error and the
/// sweep continues.
std::vector<SweepPoint> sweep(std::span<const McConfig> configs, int threads = 1);

}  // namespace wernet

#endif
