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

#include "wernet/werner.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wernet {

WernerState::WernerState(double x) : x_(x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("WernerState: x must lie in [0, 1], got " + std::to_string(x));
    }
}

double WernerState::concurrence() const {
    return std::max(0.0, (3.0 * x_ - 1.0) / 2.0);
}

double WernerState::fidelity() const {
    return (3.0 * x_ + 1.0) / 4.0;
}

BellDiagonalState::BellDiagonalState(std::array<double, 4> populations) : p_(populations) {
    double sum = 0;
    for (double v : p_) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument("BellDiagonalState: negative or NaN population");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kNormTolerance) {
        throw std::invalid_argument("BellDiagonalState: populations must sum to 1");
    }
}

double BellDiagonalState::largest() const {
    return *std::max_element(p_.begin(), p_.end());
}

double concurrence(WernerState s) {
    return s.concurrence();
}

double fidelity(WernerState s) {
    return s.fidelity();
}

double concurrence(const BellDiagonalState &s) {
    return std::max(0.0, 2.0 * s.largest() - 1.0);
}

BellDiagonalState to_bell_diagonal(WernerState s) {
    double x = s.x();
    double rest = (1.0 - x) / 4.0;
    return BellDiagonalState({(1.0 + 3.0 * x) / 4.0, rest, rest, rest});
}

WernerState to_werner(const BellDiagonalState &s) {
    double x = (4.0 * s[0] - 1.0) / 3.0;
    // Rounding can push a valid projection a few ulps past either end.
    if (x < 0 && x > -1e-15) {
        x = 0;
    }
    if (x > 1 && x < 1 + 1e-15) {
        x = 1;
    }
    if (x < 0) {
        throw std::invalid_argument("to_werner: Phi00 population below 1/4");
    }
    return WernerState(x);
}

BellDiagonalState swap(const BellDiagonalState &s1, const BellDiagonalState &s2) {
    const auto &[a, b, c, d] = s1.populations();
    const auto &[e, f, g, h] = s2.populations();
    std::array<double, 4> out{
        a * e + b * f + c * g + d * h,
        a * f + b * e + c * h + d * g,
        a * g + b * h + c * e + d * f,
        a * h + b * g + c * f + d * e,
    };
    return BellDiagonalState(out);
}

WernerState swap(WernerState s1, WernerState s2) {
    return WernerState(s1.x() * s2.x());
}

WernerState swap_chain(std::span<const WernerState> links) {
    if (links.empty()) {
        throw std::invalid_argument("swap_chain: no links");
    }
    WernerState acc = links[0];
    for (size_t k = 1; k < links.size(); k++) {
        acc = swap(acc, links[k]);
    }
    return acc;
}

PurificationResult purify_bbpssw(WernerState s1, WernerState s2) {
    double x1 = s1.x();
    double x2 = s2.x();
    double prod = x1 * x2;
    double x = (x1 + x2 + 4.0 * prod) / (3.0 + 3.0 * prod);
    return {WernerState(std::min(1.0, x)), (1.0 + prod) / 2.0};
}

WernerState purify_break_even(WernerState s) {
    double x = s.x();
    if (!(x > 1.0 / 3.0 && x < 1.0)) {
        throw std::domain_error("purify_break_even: requires 1/3 < x < 1");
    }
    return WernerState(2.0 * x / (1.0 + 4.0 * x - 3.0 * x * x));
}

}  // namespace wernet
