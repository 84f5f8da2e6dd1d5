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

#ifndef WERNET_WERNER_H
#define WERNET_WERNER_H

#include <array>
#include <cstddef>
#include <span>

namespace wernet {

/// A Werner state rho_W(x). The parameter is the weight of the singlet
/// component; the state is entangled iff x > 1/3.
class WernerState {
   public:
    /// Throws std::invalid_argument unless 0 <= x <= 1.
    explicit WernerState(double x);

    double x() const {
        return x_;
    }
    /// max(0, (3x - 1) / 2).
    double concurrence() const;
    /// (3x + 1) / 4.
    double fidelity() const;
    bool entangled() const {
        return x_ > 1.0 / 3.0;
    }

    bool operator==(const WernerState &other) const = default;

   private:
    double x_;
};

/// Populations of the four Bell states, ordered Phi00, Phi01, Phi10, Phi11.
class BellDiagonalState {
   public:
    static constexpr double kNormTolerance = 1e-12;

    /// Throws std::invalid_argument if any population is negative or the sum
    /// differs from 1 by more than kNormTolerance.
    explicit BellDiagonalState(std::array<double, 4> populations);

    const std::array<double, 4> &populations() const {
        return p_;
    }
    double operator[](size_t k) const {
        return p_[k];
    }
    double largest() const;

   private:
    std::array<double, 4> p_;
};

double concurrence(WernerState s);
double fidelity(WernerState s);

/// max(0, 2 * largest population - 1).
double concurrence(const BellDiagonalState &s);

BellDiagonalState to_bell_diagonal(WernerState s);

/// Twirls onto the Werner family: x = (4 A - 1) / 3. Requires A >= 1/4.
WernerState to_werner(const BellDiagonalState &s);

/// Entanglement swapping of two Bell-diagonal links (bilinear map).
BellDiagonalState swap(const BellDiagonalState &s1, const BellDiagonalState &s2);

/// Entanglement swapping of two Werner links: parameters multiply.
WernerState swap(WernerState s1, WernerState s2);

/// Left-to-right swap along a chain. Empty input is rejected.
WernerState swap_chain(std::span<const WernerState> links);

struct PurificationResult {
    WernerState state;
    double success_probability;
};

/// One BBPSSW round on two Werner links.
PurificationResult purify_bbpssw(WernerState s1, WernerState s2);

/// The partner parameter t with purify_bbpssw(x, t).state == x.
/// Throws std::domain_error unless 1/3 < x < 1.
WernerState purify_break_even(WernerState s);

}  // namespace wernet

#endif
