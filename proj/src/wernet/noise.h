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

#ifndef WERNET_NOISE_H
#define WERNET_NOISE_H

#include "wernet/werner.h"

namespace wernet {

/// Imperfect local operations: depolarizing one- and two-qubit gates with
/// reliabilities p1, p2 and a measurement that reports the right outcome with
/// probability eta.
class NoiseModel {
   public:
    /// Throws std::invalid_argument unless p1, p2 in (0, 1] and eta in (1/2, 1].
    NoiseModel(double p1, double p2, double eta);
    static NoiseModel perfect() {
        return NoiseModel(1, 1, 1);
    }

    double p1() const {
        return p1_;
    }
    double p2() const {
        return p2_;
    }
    double eta() const {
        return eta_;
    }
    /// 2 eta (1 - eta), in [0, 1/2).
    double delta() const;
    /// (1 - p2^2) / p2^2, nonnegative.
    double alpha() const;
    /// Per-swap attenuation 3 / (p1 p2 (4 eta^2 - 1)), at least 1.
    double swap_attenuation() const;

   private:
    double p1_;
    double p2_;
    double eta_;
};

/// Noisy BBPSSW round on two copies of the same Werner link.
PurificationResult noisy_purify_equal(WernerState s, const NoiseModel &noise);

/// Swapping along n_links identical links with noisy swaps: x^n / c^(n-1).
WernerState noisy_swap_chain(WernerState s, int n_links, const NoiseModel &noise);

}  // namespace wernet

#endif
