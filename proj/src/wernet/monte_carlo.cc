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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace wernet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double pair_count(const Graph &g) {
    return 0.5 * g.num_nodes() * (g.num_nodes() - 1.0);
}

void validate(const McConfig &c) {
    if (c.n_trials < 1) {
        throw std::invalid_argument("McConfig: n_trials must be >= 1");
    }
    if (c.N < 2 || !(c.p >= 0 && c.p <= 1)) {
        throw std::invalid_argument("McConfig: requires N >= 2 and 0 <= p <= 1");
    }
    if (estimator_width(c.estimator) == 0) {
        throw std::invalid_argument("McConfig: estimator has no columns");
    }
}

}  // namespace

std::string estimator_name(const Estimator &e) {
    return std::visit(
        overloaded{
            [](const estimators::EdgeDensity &) { return std::string("sigma_1"); },
            [](const estimators::SigmaL &) { return std::string("sigma_L"); },
            [](const estimators::EtaExists &) { return std::string("eta_exists"); },
            [](const estimators::EtaCount &) { return std::string("eta_count"); },
            [](const estimators::NetworkGain &) { return std::string("network_gain"); },
        },
        e);
}

size_t estimator_width(const Estimator &e) {
    return std::visit(
        overloaded{
            [](const estimators::EdgeDensity &) -> size_t { return 1; },
            [](const estimators::SigmaL &s) { return s.lengths.size(); },
            [](const estimators::EtaExists &s) { return s.geometries.size(); },
            [](const estimators::EtaCount &s) { return s.geometries.size(); },
            [](const estimators::NetworkGain &s) { return s.xs.size(); },
        },
        e);
}

void evaluate_estimator(const Estimator &e, const Graph &g, std::span<double> out) {
    double pairs = pair_count(g);
    std::visit(
        overloaded{
            [&](const estimators::EdgeDensity &) { out[0] = g.num_edges() / pairs; },
            [&](const estimators::SigmaL &s) {
                int L_max = 0;
                for (int L : s.lengths) {
                    L_max = std::max(L_max, L);
                }
                std::vector<uint64_t> hist(L_max + 1, 0);
                BfsScratch scratch(g.num_nodes());
                for (int u = 0; u < g.num_nodes(); u++) {
                    bfs(g, u, L_max, scratch);
                    for (int v : scratch.order) {
                        if (v > u) {
                            hist[scratch.dist[v]]++;
                        }
                    }
                }
                for (size_t k = 0; k < s.lengths.size(); k++) {
                    int L = s.lengths[k];
                    out[k] = L >= 0 ? hist[L] / pairs : 0.0;
                }
            },
            [&](const estimators::EtaExists &s) {
                auto counts = count_spp_existence(g, s.geometries);
                for (size_t k = 0; k < counts.size(); k++) {
                    out[k] = counts[k] / pairs;
                }
            },
            [&](const estimators::EtaCount &s) {
                auto counts = count_spp_configurations(g, s.geometries);
                for (size_t k = 0; k < counts.size(); k++) {
                    out[k] = counts[k] / pairs;
                }
            },
            [&](const estimators::NetworkGain &s) {
                auto gains = network_delta_concurrence(g, s.xs, s.L_max);
                std::copy(gains.begin(), gains.end(), out.begin());
            },
        },
        e);
}

std::mt19937_64 trial_engine(uint64_t seed, uint64_t trial) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed),
        static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(trial),
        static_cast<uint32_t>(trial >> 32),
    };
    return std::mt19937_64(seq);
}

ErGraphSample trial_graph(const McConfig &config, uint64_t trial) {
    std::mt19937_64 rng = trial_engine(config.seed, trial);
    return {generate_er(config.N, config.p, rng), config.seed, trial, config.p};
}

McTrialError::McTrialError(int64_t trial, const std::string &what)
    : NumericalError("trial " + std::to_string(trial) + ": " + what), trial(trial) {
}

std::vector<DensityEstimate> run(const McConfig &config, int threads) {
    validate(config);
    size_t width = estimator_width(config.estimator);
    int64_t n = config.n_trials;
    std::vector<double> values(static_cast<size_t>(n) * width, 0.0);

    std::atomic<int64_t> next{0};
    std::mutex failure_mutex;
    int64_t failed_trial = -1;
    std::string failure;

    auto worker = [&]() {
        while (true) {
            int64_t t = next.fetch_add(1);
            if (t >= n) {
                return;
            }
            try {
                ErGraphSample sample = trial_graph(config, static_cast<uint64_t>(t));
                evaluate_estimator(
                    config.estimator, sample.graph, std::span<double>(values.data() + t * width, width));
            } catch (const std::exception &ex) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failed_trial < 0 || t < failed_trial) {
                    failed_trial = t;
                    failure = ex.what();
                }
            }
        }
    };

    int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<int64_t>(workers, n));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; k++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (failed_trial >= 0) {
        throw McTrialError(failed_trial, failure);
    }

    // Fixed trial order keeps the floating-point sums independent of threads.
    std::vector<DensityEstimate> out;
    for (size_t k = 0; k < width; k++) {
        double sum = 0;
        for (int64_t t = 0; t < n; t++) {
            sum += values[t * width + k];
        }
        double mean = sum / n;
        double ss = 0;
        for (int64_t t = 0; t < n; t++) {
            double d = values[t * width + k] - mean;
            ss += d * d;
        }
        double se = n > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
        out.push_back({mean, se, n, n >= kReliableTrials});
    }
    return out;
}

std::vector<SweepPoint> sweep(std::span<const McConfig> configs, int threads) {
    if (configs.empty()) {
        throw std::invalid_argument("sweep: empty grid");
    }
    std::vector<SweepPoint> out;
    for (const McConfig &c : configs) {
        SweepPoint point;
        try {
            point.estimates = run(c, threads);
        } catch (const std::exception &ex) {
            point.error = ex.what();
        }
        out.push_back(std::move(point));
    }
    return out;
}

}  // namespace wernet
