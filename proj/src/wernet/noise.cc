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

#include "wernet/noise.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wernet {

NoiseModel::NoiseModel(double p1, double p2, double eta) : p1_(p1), p2_(p2), eta_(eta) {
    if (!(p1 > 0 && p1 <= 1) || !(p2 > 0 && p2 <= 1)) {
        throw std::invalid_argument("NoiseModel: gate reliabilities must lie in (0, 1]");
    }
    if (!(eta > 0.5 && eta <= 1)) {
        throw std::invalid_argument("NoiseModel: measurement reliability must lie in (1/2, 1]");
    }
}

double NoiseModel::delta() const {
    return 2.0 * eta_ * (1.0 - eta_);
}

double NoiseModel::alpha() const {
    return (1.0 - p2_ * p2_) / (p2_ * p2_);
}

double NoiseModel::swap_attenuation() const {
    return 3.0 / (p1_ * p2_ * (4.0 * eta_ * eta_ - 1.0));
}

PurificationResult noisy_purify_equal(WernerState s, const NoiseModel &noise) {
    double x = s.x();
    double d = noise.delta();
    double al = noise.alpha();
    double x2 = x * x;
    double num = (2.0 * x + 4.0 * x2) * (1.0 - d);
    double den = 3.0 * (1.0 + al) + 3.0 * x2 * (1.0 - 2.0 * d);
    double p = (1.0 + al + x2 * (1.0 - 2.0 * d)) / 2.0;
    return {WernerState(std::min(1.0, num / den)), p};
}

WernerState noisy_swap_chain(WernerState s, int n_links, const NoiseModel &noise) {
    if (n_links < 1) {
        throw std::invalid_argument("noisy_swap_chain: n_links must be >= 1");
    }
    double c = noise.swap_attenuation();
    double x = std::pow(s.x(), n_links) / std::pow(c, n_links - 1);
    if (x > 1) {
        throw std::domain_error("noisy_swap_chain: result exceeds 1");
    }
    return WernerState(x);
}

}  // namespace wernet
